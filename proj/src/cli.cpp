#include "csk/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "csk/family.hpp"
#include "csk/verify.hpp"

namespace csk {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char colon1 = 0, colon2 = 0;
    std::istringstream is(text);
    if (!(is >> g.start >> colon1 >> g.stop >> colon2 >> g.count) ||
        colon1 != ':' || colon2 != ':' || !(is >> std::ws).eof())
        throw InvalidSpec("grid must have the form start:stop:count");
    if (g.count < 1 || g.stop < g.start)
        throw InvalidSpec("grid needs stop >= start and count >= 1");
    return g;
}

std::vector<double> grid_points(const GridSpec& grid) {
    std::vector<double> pts;
    pts.reserve(grid.count);
    if (grid.count == 1) {
        pts.push_back(grid.start);
        return pts;
    }
    const double step = (grid.stop - grid.start) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i)
        pts.push_back(grid.start + step * i);
    return pts;
}

LawSpec load_law_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open law file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return law_from_json_text(buf.str());
}

int run_density(const LawSpec& spec, const GridSpec& grid, std::ostream& out) {
    try {
        const RealMeasure mu = build_measure(spec);
        out << "x,density,atom_weight\n";
        for (double x : grid_points(grid)) {
            double f = 0.0;
            if (mu.density_part()) {
                const DensityPart& d = *mu.density_part();
                if (x > d.support_lower && x < d.support_upper)
                    f = d.density(x);
            }
            out << num(x) << ',' << num(f) << ",0\n";
        }
        for (const Atom& a : mu.atoms())
            out << num(a.location) << ",0," << num(a.weight) << '\n';
        return 0;
    } catch (const QuadratureFailure&) {
        return 3;
    } catch (const DivergentIntegral&) {
        return 3;
    }
}

int run_transform(const LawSpec& spec, const std::string& which,
                  const GridSpec& grid, std::ostream& out) {
    if (which != "G" && which != "R" && which != "PV" && which != "M" &&
        which != "mean-of-theta")
        throw InvalidSpec("transform must be G, R, PV, M, or mean-of-theta");
    try {
        const RealMeasure mu = build_measure(spec);
        const double B = mu.support_bound();
        const double gb = r_domain_upper(spec);
        const double m0 = law_m0(spec);
        const double mp = mean_domain_upper(spec).value;
        const double theta_plus = B > 0.0 ? 1.0 / B : kInf;

        out << "input,value\n";
        for (double t : grid_points(grid)) {
            double value;
            if (which == "G") {
                if (!(t > B)) continue;
                value = closed_g(spec, {t, 0.0}).real();
            } else if (which == "R") {
                if (!(t > 0.0) || !(t < gb)) continue;
                value = closed_r(spec, t);
            } else if (which == "PV") {
                if (!(t > m0) || !(t < mp)) continue;
                value = closed_pv(spec, t);
            } else {
                if (!(t > 0.0) || !(t < theta_plus)) continue;
                const double z = 1.0 / t;
                const double g = closed_g(spec, {z, 0.0}).real();
                value = which == "M" ? g * z : z - 1.0 / g;
            }
            out << num(t) << ',' << num(value) << '\n';
        }
        return 0;
    } catch (const QuadratureFailure&) {
        return 3;
    } catch (const DivergentIntegral&) {
        return 3;
    } catch (const ExtrapolationUnstable&) {
        return 3;
    }
}

int run_verify(const std::string& suite, std::uint64_t seed,
               std::ostream& out) {
    std::vector<Report> reports;
    try {
        reports = run_suite(suite, seed);
    } catch (const QuadratureFailure&) {
        return 3;
    } catch (const DivergentIntegral&) {
        return 3;
    } catch (const ExtrapolationUnstable&) {
        return 3;
    }
    out << report_envelope(reports, seed).dump(2) << '\n';
    for (const Report& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace csk
