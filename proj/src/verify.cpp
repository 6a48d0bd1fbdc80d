#include "csk/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "csk/family.hpp"
#include "csk/freeconv.hpp"
#include "csk/laws.hpp"
#include "csk/reciprocity.hpp"

namespace csk {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void add_detail(Report& rep, const std::string& input, double expected,
                double got) {
    rep.details.push_back({input, expected, got});
    const double res = std::abs(got - expected) / (1.0 + std::abs(expected));
    rep.max_residual = std::max(rep.max_residual, res);
}

void finalize(Report& rep) { rep.pass = rep.max_residual <= rep.tolerance; }

std::vector<Report> suite_reciprocity(std::mt19937_64& rng) {
    std::vector<Report> out;
    const LawSpec sc = Semicircle{0.0, 1.0};
    const LawSpec inv = FreeHalfStable{1.0};

    {
        const ReciprocalPair pair = make_reciprocal_pair(sc, inv);
        const IdentityReport id = check_r_identity(pair, 1e-8);
        out.push_back({"reciprocity/identity-closed", id.max_residual,
                       id.tolerance, id.pass, {}});
        const IdentityReport sym = check_symmetry(pair, 1e-8);
        out.push_back({"reciprocity/symmetry-closed", sym.max_residual,
                       sym.tolerance, sym.pass, {}});
    }
    {
        const CSKFamily ft{build_measure(sc)};
        const CSKFamily fn{build_measure(inv)};
        const ReciprocalPair pair = make_reciprocal_pair(ft, fn, 8);
        const IdentityReport id = check_r_identity(pair, 1e-5);
        out.push_back({"reciprocity/identity-numeric", id.max_residual,
                       id.tolerance, id.pass, {}});
    }
    {
        // The reciprocal of a quadratic pseudo-variance shape is the cubic
        // shape with the same coefficients.
        Report rep{"reciprocity/pv-map", 0.0, 1e-12, false, {}};
        const PseudoVariance q100{QuadraticPV{1.0, 0.0, 0.0, 0.0}};
        const PseudoVariance q120{QuadraticPV{1.0, 2.0, 0.0, 0.0}};
        std::uniform_real_distribution<double> dm(-5.0, -1.2);
        for (int i = 0; i < 20; ++i) {
            const double m = dm(rng);
            add_detail(rep, "m=" + fmt(m), closed_pv(FreeHalfStable{1.0}, m),
                       reciprocal_pv(q100, m));
            add_detail(rep, "m=" + fmt(m) + " (1,2,0)",
                       m * (m * m + 2.0 * m), reciprocal_pv(q120, m));
        }
        finalize(rep);
        out.push_back(rep);
    }
    return out;
}

std::vector<Report> suite_domains() {
    std::vector<Report> out;
    Report rep{"domains/mean-domain-upper", 0.0, tolerances().rel, false, {}};
    for (const auto& [name, spec] : catalog()) {
        const MeanDomainUpper closed = mean_domain_upper(spec);
        const CSKFamily fam{build_measure(spec)};
        add_detail(rep, name, closed.value, fam.m_plus());
    }
    finalize(rep);
    out.push_back(rep);

    // Atom bookkeeping cross-check via the scan of the Cauchy transform.
    Report atoms{"domains/atom-scan", 0.0, 1e-3, false, {}};
    for (const auto& [name, spec] :
         {std::pair<std::string, LawSpec>{"free-takacs(0.5)", FreeTakacs{0.5}},
          std::pair<std::string, LawSpec>{"cubic(1,2,0)", Cubic{1.0, 2.0, 0.0}},
          std::pair<std::string, LawSpec>{"free-ressel", FreeRessel{}}}) {
        const RealMeasure mu = build_measure(spec);
        auto g = [&spec](std::complex<double> z) { return closed_g(spec, z); };
        if (mu.atoms().empty()) {
            // Scan a point safely off the support: no atom expected.
            add_detail(atoms, name + " @ -1", 0.0,
                       atom_scan(g, spec.index() == 5 ? -0.5 : -1.0));
        } else {
            const Atom& a = mu.atoms().front();
            add_detail(atoms, name + " @ " + fmt(a.location), a.weight,
                       atom_scan(g, a.location));
        }
    }
    finalize(atoms);
    out.push_back(atoms);
    return out;
}

std::vector<Report> suite_roundtrip(std::mt19937_64& rng) {
    std::vector<Report> out;

    {
        // Shape -> generating measure -> numerically recovered shape.
        Report rep{"roundtrip/pseudo-variance", 0.0, 1e-6, false, {}};
        const std::vector<std::pair<std::string, PseudoVariance>> shapes = {
            {"quadratic(1,0,0)", QuadraticPV{1.0, 0.0, 0.0, 0.0}},
            {"quadratic(1,1,0.5)", QuadraticPV{1.0, 1.0, 0.5, 0.0}},
            {"cubic(1,2,0)", CubicPV{1.0, 2.0, 0.0}},
            {"cubic(3,4,1)", CubicPV{3.0, 4.0, 1.0}},
            {"cubic(1,0,1)", CubicPV{1.0, 0.0, 1.0}},
        };
        for (const auto& [name, pv] : shapes) {
            const CSKFamily fam{pv_to_generator(pv)};
            const double m0 = fam.m0();
            const double mp = fam.m_plus();
            for (double t : {0.1, 0.25, 0.45}) {
                const double m = std::isfinite(m0)
                                     ? m0 + t * (mp - m0)
                                     : (mp < 0.0 ? mp * (1.0 + 4.0 * t) : -4.0 * t);
                add_detail(rep, name + " m=" + fmt(m), pv(m),
                           fam.pseudo_variance(m));
            }
        }
        finalize(rep);
        out.push_back(rep);
    }

    {
        // G(K(w)) = w for the quadrature-backed inverse.
        Report rep{"roundtrip/inverse-cauchy", 0.0, 1e-9, false, {}};
        std::uniform_real_distribution<double> du(0.05, 0.95);
        for (const auto& [name, spec] :
             {std::pair<std::string, LawSpec>{"semicircle", Semicircle{}},
              std::pair<std::string, LawSpec>{"free-strict-arcsine",
                                              FreeStrictArcsine{}},
              std::pair<std::string, LawSpec>{"free-half-stable(2)",
                                              FreeHalfStable{2.0}}}) {
            const TransformEvaluator ev{build_measure(spec)};
            const double gb = ev.g_limit_at_b();
            const double cap = std::isfinite(gb) ? gb : 5.0;
            for (int i = 0; i < 4; ++i) {
                const double w = cap * du(rng);
                const double k = ev.inverse_k(w);
                add_detail(rep, name + " w=" + fmt(w), w, ev.cauchy_g(k));
            }
        }
        finalize(rep);
        out.push_back(rep);
    }
    return out;
}

std::vector<Report> suite_gineq(std::mt19937_64& rng) {
    // Strict decrease and log-convexity surrogate: for z2 > z1 > B,
    // (z2 - z1) G(z1) G(z2) < G(z1) - G(z2).
    Report rep{"gineq/two-point", 0.0, 1e-12, false, {}};
    std::uniform_real_distribution<double> du(-2.0, 3.0);
    for (const auto& [name, spec] : catalog()) {
        const RealMeasure mu = build_measure(spec);
        const double B = mu.support_bound();
        for (int i = 0; i < 20; ++i) {
            double z1 = B + std::exp(du(rng));
            double z2 = B + std::exp(du(rng));
            if (z1 == z2) continue;
            if (z1 > z2) std::swap(z1, z2);
            const double g1 = closed_g(spec, {z1, 0.0}).real();
            const double g2 = closed_g(spec, {z2, 0.0}).real();
            const double lhs = (z2 - z1) * g1 * g2;
            const double rhs = g1 - g2;
            rep.details.push_back({name + " z1=" + fmt(z1) + " z2=" + fmt(z2),
                                   rhs, lhs});
            rep.max_residual = std::max(rep.max_residual, lhs - rhs);
        }
    }
    // Only violations count; negative margins mean the inequality holds.
    rep.max_residual = std::max(0.0, rep.max_residual);
    rep.details.clear();
    finalize(rep);
    return {rep};
}

std::vector<Report> suite_bis(std::mt19937_64& rng) {
    Report rep{"bis/member-identity", 0.0, 1e-10, false, {}};
    const CSKFamily fam{build_measure(Semicircle{-0.5, 1.0})};
    std::uniform_real_distribution<double> dm(-0.45, 0.45);
    std::uniform_real_distribution<double> dx(-2.5, 1.5);
    int done = 0;
    while (done < 40) {
        const double m = dm(rng);
        if (std::abs(m) < 0.02) continue;
        const double x = dx(rng);
        const double res = std::abs(fam.bis_residual(m, x));
        rep.max_residual = std::max(rep.max_residual, res);
        ++done;
    }
    finalize(rep);
    return {rep};
}

std::vector<Report> suite_reproductive() {
    std::vector<Report> out;
    const std::vector<std::pair<LawSpec, double>> cases = {
        {Semicircle{0.0, 1.0}, 2.0},
        {Cubic{1.0, 0.0, 0.0}, 4.0},
        {FreeHalfStable{1.0}, 0.25},
    };
    for (const auto& [spec, lambda] : cases) {
        const ReproductiveReport rr = reproductive_check(spec, lambda);
        Report rep{"reproductive/" + law_name(spec) + " lambda=" + fmt(lambda),
                   rr.max_rel_dev, 1e-6, false, {}};
        for (const ReproductiveRow& row : rr.rows)
            rep.details.push_back({"m=" + fmt(row.m), row.expected, row.got});
        finalize(rep);
        out.push_back(rep);
    }
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"reciprocity", "domains",      "roundtrip", "gineq",
            "bis",         "reproductive", "all"};
}

std::vector<Report> run_suite(const std::string& name, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (name == "reciprocity") return suite_reciprocity(rng);
    if (name == "domains") return suite_domains();
    if (name == "roundtrip") return suite_roundtrip(rng);
    if (name == "gineq") return suite_gineq(rng);
    if (name == "bis") return suite_bis(rng);
    if (name == "reproductive") return suite_reproductive();
    if (name == "all") {
        std::vector<Report> all;
        for (const std::string& n :
             {"reciprocity", "domains", "roundtrip", "gineq", "bis",
              "reproductive"}) {
            std::vector<Report> part = run_suite(n, seed);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw InvalidSpec("unknown verification suite \"" + name + "\"");
}

}  // namespace csk
