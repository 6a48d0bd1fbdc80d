#include "csk/laws.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "csk/family.hpp"

namespace csk {

namespace {

constexpr double kPi = 3.141592653589793;

template <class... F>
struct Overload : F... {
    using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw InvalidSpec(std::string(what) + " must be finite");
}

void require_positive(double v, const char* what) {
    require_finite(v, what);
    if (!(v > 0.0))
        throw InvalidSpec(std::string(what) + " must be positive");
}

}  // namespace

void validate(const LawSpec& spec) {
    std::visit(
        Overload{
            [](const Semicircle& s) {
                require_finite(s.center, "center");
                require_positive(s.variance, "variance");
            },
            [](const QuadraticFreeMeixner& q) {
                require_positive(q.a, "a");
                require_finite(q.b, "b");
                require_finite(q.c, "c");
            },
            [](const Cubic& c) {
                require_positive(c.a, "a");
                require_finite(c.b, "b");
                require_finite(c.c, "c");
            },
            [](const FreeHalfStable& h) { require_positive(h.p, "p"); },
            [](const FreeAbel&) {},
            [](const FreeRessel&) {},
            [](const FreeStrictArcsine&) {},
            [](const FreeLargeArcsine& l) { require_positive(l.r, "r"); },
            [](const FreeTakacs& t) { require_positive(t.r, "r"); },
        },
        spec);
}

std::string law_name(const LawSpec& spec) {
    return std::visit(
        Overload{
            [](const Semicircle&) { return "semicircle"; },
            [](const QuadraticFreeMeixner&) { return "quadratic-free-meixner"; },
            [](const Cubic&) { return "cubic"; },
            [](const FreeHalfStable&) { return "free-half-stable"; },
            [](const FreeAbel&) { return "free-abel"; },
            [](const FreeRessel&) { return "free-ressel"; },
            [](const FreeStrictArcsine&) { return "free-strict-arcsine"; },
            [](const FreeLargeArcsine&) { return "free-large-arcsine"; },
            [](const FreeTakacs&) { return "free-takacs"; },
        },
        spec);
}

std::optional<Cubic> cubic_params(const LawSpec& spec) {
    return std::visit(
        Overload{
            [](const Cubic& c) -> std::optional<Cubic> { return c; },
            [](const FreeHalfStable& h) -> std::optional<Cubic> {
                return Cubic{1.0 / (h.p * h.p), 0.0, 0.0};
            },
            [](const FreeAbel&) -> std::optional<Cubic> {
                return Cubic{1.0, -1.0, 0.0};
            },
            [](const FreeRessel&) -> std::optional<Cubic> {
                return Cubic{1.0, 1.0, 0.0};
            },
            [](const FreeStrictArcsine&) -> std::optional<Cubic> {
                return Cubic{1.0, 0.0, 1.0};
            },
            [](const FreeLargeArcsine& l) -> std::optional<Cubic> {
                return Cubic{(1.0 + l.r * l.r) / (l.r * l.r), 2.0, 1.0};
            },
            [](const FreeTakacs& t) -> std::optional<Cubic> {
                return Cubic{(1.0 + t.r) / t.r, (2.0 * t.r + 1.0) / t.r, 1.0};
            },
            [](const auto&) -> std::optional<Cubic> { return std::nullopt; },
        },
        spec);
}

PseudoVariance law_pv(const LawSpec& spec) {
    if (const auto* s = std::get_if<Semicircle>(&spec))
        return QuadraticPV{s->variance, 0.0, 0.0, s->center};
    if (const auto* q = std::get_if<QuadraticFreeMeixner>(&spec))
        return QuadraticPV{q->a, q->b, q->c, 0.0};
    const Cubic c = *cubic_params(spec);
    return CubicPV{c.a, c.b, c.c};
}

double law_m0(const LawSpec& spec) {
    if (const auto* s = std::get_if<Semicircle>(&spec)) return s->center;
    if (std::get_if<QuadraticFreeMeixner>(&spec)) return 0.0;
    return -kInf;
}

RealMeasure build_measure(const LawSpec& spec) {
    validate(spec);
    if (const auto* s = std::get_if<Semicircle>(&spec)) {
        const double g = s->center;
        const double sigma = std::sqrt(s->variance);
        const double v = s->variance;
        DensityPart d;
        d.density = [g, sigma, v](double x) {
            const double rad = (2.0 * sigma - (x - g)) * (2.0 * sigma + (x - g));
            if (rad <= 0.0) return 0.0;
            return std::sqrt(rad) / (2.0 * kPi * v);
        };
        d.support_lower = g - 2.0 * sigma;
        d.support_upper = g + 2.0 * sigma;
        return RealMeasure(std::move(d), {});
    }
    return pv_to_generator(law_pv(spec));
}

std::complex<double> closed_g(const LawSpec& spec, std::complex<double> z) {
    if (const auto* s = std::get_if<Semicircle>(&spec)) {
        const std::complex<double> u = z - s->center;
        // (u - sqrt(u^2-4v))/(2v) written as 2/(u + sqrt(u^2-4v)) to avoid
        // cancellation at large |z|.
        return 2.0 / (u + sqrt_tail(u, 4.0 * s->variance));
    }
    if (const auto* q = std::get_if<QuadraticFreeMeixner>(&spec))
        return quadratic_g(QuadraticPV{q->a, q->b, q->c, 0.0}, z);
    const Cubic cc = *cubic_params(spec);
    const double a = cc.a, b = cc.b, c = cc.c;
    const std::complex<double> rad = (b + 1.0) * (b + 1.0) + 4.0 * a * (z - c);
    return (b + 1.0 + 2.0 * a * z - std::sqrt(rad)) /
           (2.0 * (c + b * z + a * z * z));
}

MeanDomainUpper mean_domain_upper(const LawSpec& spec) {
    validate(spec);
    if (const auto* s = std::get_if<Semicircle>(&spec)) {
        const double sigma = std::sqrt(s->variance);
        const double edge = s->center + 2.0 * sigma;
        if (edge > 0.0) return {s->center + sigma, true};
        // B = 0: m_plus = -1/G(0) with G(0) = 2/(u + sqrt(u^2 - 4v)), u = -c.
        const double u = -s->center;
        const double g0 =
            2.0 / (u + std::sqrt((u - 2.0 * sigma) * (u + 2.0 * sigma)));
        return {-1.0 / g0, true};
    }
    if (const auto* q = std::get_if<QuadraticFreeMeixner>(&spec)) {
        const double a = q->a, b = q->b, c = q->c;
        if (c < -1.0) {
            // Purely atomic regime: the case analysis is ambiguous here, so
            // fall back to the numeric evaluator.
            CSKFamily fam{build_measure(spec)};
            return {fam.m_plus(), false};
        }
        const bool atom_right = (c > 0.0 && b > 2.0 * std::sqrt(a * c)) ||
                                (c == 0.0 && b > std::sqrt(a)) ||
                                (c < 0.0);
        if (atom_right) {
            if (c == 0.0) return {a / b, true};
            return {(b - std::sqrt(b * b - 4.0 * a * c)) / (2.0 * c), true};
        }
        const double x_plus = -b + 2.0 * std::sqrt(a * (1.0 + c));
        if (x_plus > 0.0) return {std::sqrt(a / (1.0 + c)), true};
        const double g0 =
            quadratic_g(QuadraticPV{a, b, c, 0.0}, {0.0, 0.0}).real();
        return {-1.0 / g0, true};
    }
    const Cubic cc = *cubic_params(spec);
    const double a = cc.a, b = cc.b, c = cc.c;
    if (c > 0.0 && b <= -std::sqrt(1.0 + 4.0 * a * c))
        return {-(b + std::sqrt(b * b - 4.0 * a * c)) / (2.0 * a), true};
    if (c > 0.0 && b <= 2.0 * std::sqrt(a * c) - 1.0)
        return {-(1.0 + b) / (2.0 * a), true};
    return {-(b + 1.0 + std::sqrt((b + 1.0) * (b + 1.0) - 4.0 * a * c)) /
                (2.0 * a),
            true};
}

double closed_pv(const LawSpec& spec, double m) {
    const double lower = law_m0(spec);
    const double upper = mean_domain_upper(spec).value;
    if (!(m > lower) || !(m < upper))
        throw DomainError("mean outside the open mean domain");
    if (const auto* s = std::get_if<Semicircle>(&spec))
        return m * s->variance / (m - s->center);
    if (const auto* q = std::get_if<QuadraticFreeMeixner>(&spec))
        return q->a - q->b * m + q->c * m * m;
    const Cubic c = *cubic_params(spec);
    return m * (c.a * m * m + c.b * m + c.c);
}

double r_domain_upper(const LawSpec& spec) {
    validate(spec);
    if (const auto* s = std::get_if<Semicircle>(&spec)) {
        const double sigma = std::sqrt(s->variance);
        if (s->center + 2.0 * sigma > 0.0) return 1.0 / sigma;
        const double u = -s->center;
        return 2.0 / (u + std::sqrt((u - 2.0 * sigma) * (u + 2.0 * sigma)));
    }
    if (const auto* q = std::get_if<QuadraticFreeMeixner>(&spec)) {
        const double a = q->a, b = q->b, c = q->c;
        if (c < -1.0) {
            CSKFamily fam{build_measure(spec)};
            return fam.evaluator().g_limit_at_b();
        }
        const bool atom_right = (c > 0.0 && b > 2.0 * std::sqrt(a * c)) ||
                                (c == 0.0 && b > std::sqrt(a)) ||
                                (c < 0.0);
        if (atom_right) return kInf;
        const double x_plus = -b + 2.0 * std::sqrt(a * (1.0 + c));
        if (x_plus > 0.0) {
            const double ms = std::sqrt(a / (1.0 + c));
            const double v = a - b * ms + c * ms * ms;
            return v > 0.0 ? ms / v : kInf;
        }
        return quadratic_g(QuadraticPV{a, b, c, 0.0}, {0.0, 0.0}).real();
    }
    const Cubic cc = *cubic_params(spec);
    const double a = cc.a, b = cc.b, c = cc.c;
    const double disc = b * b - 4.0 * a * c;
    if (disc > 1.0 && -(b + std::sqrt(disc)) >= 0.0) return kInf;
    const double edge = c - (b + 1.0) * (b + 1.0) / (4.0 * a);
    if (edge > 0.0) {
        const double denom = 2.0 * (c + b * edge + a * edge * edge);
        if (!(denom > 1e-300)) return kInf;
        return (b + 1.0 + 2.0 * a * edge) / denom;
    }
    if (c != 0.0)
        return (b + 1.0 - std::sqrt((b + 1.0) * (b + 1.0) - 4.0 * a * c)) /
               (2.0 * c);
    if (b > -1.0) return a / (b + 1.0);
    return kInf;  // b == -1 with c == 0 (the b < -1 case has an atom at 0)
}

double closed_r(const LawSpec& spec, double w) {
    const double gb = r_domain_upper(spec);
    if (!(w > 0.0) || !(w < gb))
        throw DomainError("R(w) requires w in (0, G(B))");
    if (const auto* s = std::get_if<Semicircle>(&spec))
        return s->center + s->variance * w;
    if (const auto* q = std::get_if<QuadraticFreeMeixner>(&spec)) {
        const double a = q->a, b = q->b, c = q->c;
        const double bw = 1.0 + b * w;
        const double rad = bw * bw - 4.0 * a * c * w * w;
        return 2.0 * a * w / (bw + std::sqrt(rad));
    }
    const Cubic cc = *cubic_params(spec);
    const double a = cc.a, b = cc.b, c = cc.c;
    return (-b - std::sqrt(b * b - 4.0 * a * c + 4.0 * a / w)) / (2.0 * a);
}

bool free_infinitely_divisible(const LawSpec& spec) {
    return !std::holds_alternative<QuadraticFreeMeixner>(spec);
}

namespace {

using nlohmann::json;

double num_field(const json& j, const std::string& key) {
    if (!j.contains(key))
        throw InvalidSpec("missing field \"" + key + "\"");
    if (!j.at(key).is_number())
        throw InvalidSpec("field \"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

double num_field_or(const json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw InvalidSpec("field \"" + key + "\" must be a number");
    return j.at(key).get<double>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> known) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = it.key() == "kind";
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw InvalidSpec("unknown field \"" + it.key() + "\"");
    }
}

}  // namespace

LawSpec law_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw InvalidSpec("law description needs a string \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    LawSpec spec;
    if (kind == "semicircle") {
        reject_unknown(j, {"center", "variance"});
        spec = Semicircle{num_field_or(j, "center", 0.0),
                          num_field_or(j, "variance", 1.0)};
    } else if (kind == "quadratic-free-meixner") {
        reject_unknown(j, {"a", "b", "c"});
        spec = QuadraticFreeMeixner{num_field(j, "a"), num_field(j, "b"),
                                    num_field(j, "c")};
    } else if (kind == "cubic") {
        reject_unknown(j, {"a", "b", "c"});
        spec = Cubic{num_field(j, "a"), num_field(j, "b"), num_field(j, "c")};
    } else if (kind == "free-half-stable") {
        reject_unknown(j, {"p"});
        spec = FreeHalfStable{num_field(j, "p")};
    } else if (kind == "free-abel") {
        reject_unknown(j, {});
        spec = FreeAbel{};
    } else if (kind == "free-ressel") {
        reject_unknown(j, {});
        spec = FreeRessel{};
    } else if (kind == "free-strict-arcsine") {
        reject_unknown(j, {});
        spec = FreeStrictArcsine{};
    } else if (kind == "free-large-arcsine") {
        reject_unknown(j, {"r"});
        spec = FreeLargeArcsine{num_field(j, "r")};
    } else if (kind == "free-takacs") {
        reject_unknown(j, {"r"});
        spec = FreeTakacs{num_field(j, "r")};
    } else {
        throw InvalidSpec("unknown law kind \"" + kind + "\"");
    }
    validate(spec);
    return spec;
}

LawSpec law_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidSpec(std::string("invalid JSON: ") + e.what());
    }
    return law_from_json(j);
}

std::vector<std::pair<std::string, LawSpec>> catalog() {
    return {
        {"semicircle", Semicircle{}},
        {"cubic(1,0,0)", Cubic{1.0, 0.0, 0.0}},
        {"cubic(1,2,0)", Cubic{1.0, 2.0, 0.0}},
        {"free-abel", FreeAbel{}},
        {"free-ressel", FreeRessel{}},
        {"free-strict-arcsine", FreeStrictArcsine{}},
        {"free-large-arcsine(0.5)", FreeLargeArcsine{0.5}},
        {"free-large-arcsine(1)", FreeLargeArcsine{1.0}},
        {"free-takacs(0.5)", FreeTakacs{0.5}},
        {"free-half-stable(1)", FreeHalfStable{1.0}},
        {"free-half-stable(2)", FreeHalfStable{2.0}},
    };
}

}  // namespace csk
