#include "csk/freeconv.hpp"

#include <cmath>
#include <memory>

namespace csk {

namespace {

void check_alpha(const LawSpec& spec, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw AlphaOutOfRange("convolution exponent must be positive");
    if (alpha < 1.0 && !free_infinitely_divisible(spec))
        throw AlphaOutOfRange(
            "exponents below 1 need a free infinitely divisible law");
}

}  // namespace

RealMeasure affine_apply(const RealMeasure& mu, const AffineMap& map) {
    if (!(map.delta > 0.0) || !std::isfinite(map.delta) ||
        !std::isfinite(map.gamma))
        throw InvalidMap("affine map needs finite gamma and delta > 0");
    const double g = map.gamma, d = map.delta;

    std::optional<DensityPart> dens;
    if (mu.density_part()) {
        const DensityPart& src = *mu.density_part();
        auto base = src.density;
        DensityPart nd;
        nd.density = [base, g, d](double y) { return d * base(d * y + g); };
        nd.support_lower = src.support_lower == -kInf
                               ? -kInf
                               : (src.support_lower - g) / d;
        nd.support_upper = (src.support_upper - g) / d;
        nd.left_tail_exponent = src.left_tail_exponent;
        dens = std::move(nd);
    }
    std::vector<Atom> atoms;
    for (const Atom& a : mu.atoms())
        atoms.push_back({(a.location - g) / d, a.weight});
    return RealMeasure(std::move(dens), std::move(atoms));
}

OrientedMeasure affine_apply_oriented(const RealMeasure& mu,
                                      const AffineMap& map) {
    if (map.delta == 0.0)
        throw InvalidMap("affine map needs delta != 0");
    if (map.delta > 0.0) return {affine_apply(mu, map), false};
    // (x - gamma)/delta = -((x - gamma)/(-delta)): apply the positive-delta
    // map, record the final reflection in the flag.
    return {affine_apply(mu, {map.gamma, -map.delta}), true};
}

OrientedMeasure reflect(const OrientedMeasure& om) {
    return {om.measure, !om.reflected};
}

RealMeasure dilate(const RealMeasure& mu, double r) {
    if (!(r > 0.0)) throw InvalidMap("dilation factor must be positive");
    return affine_apply(mu, {0.0, 1.0 / r});
}

double conv_power_r(const LawSpec& spec, double alpha, double w) {
    check_alpha(spec, alpha);
    return alpha * closed_r(spec, w);
}

double conv_power_r(const CSKFamily& family, double alpha, double w) {
    if (!(alpha >= 1.0))
        throw AlphaOutOfRange(
            "numeric convolution powers support exponents >= 1");
    return alpha * family.evaluator().r_transform(w);
}

double conv_power_pv(const PseudoVariance& pv, double alpha, double m) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw AlphaOutOfRange("convolution exponent must be positive");
    return alpha * pv(m / alpha);
}

PseudoVariance scale_pv(const PseudoVariance& pv, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw AlphaOutOfRange("convolution exponent must be positive");
    if (const QuadraticPV* q = pv.quadratic())
        return QuadraticPV{alpha * q->a, q->b, q->c / alpha, alpha * q->m0};
    if (const CubicPV* c = pv.cubic())
        return CubicPV{c->a / (alpha * alpha), c->b / alpha, c->c};
    throw UnsupportedShape(
        "convolution powers need a closed pseudo-variance shape");
}

RealMeasure conv_power_measure(const LawSpec& spec, double alpha) {
    check_alpha(spec, alpha);
    return pv_to_generator(scale_pv(law_pv(spec), alpha));
}

ReproductiveReport reproductive_check(const LawSpec& spec, double lambda,
                                      const std::vector<double>& m_grid) {
    check_alpha(spec, lambda);
    const RealMeasure powered = conv_power_measure(spec, lambda);
    const RealMeasure rescaled = dilate(powered, 1.0 / lambda);
    CSKFamily fam{rescaled};

    std::vector<double> grid = m_grid;
    if (grid.empty()) {
        // Default points must lie in the mean domains of both the original
        // law (for the closed pseudo-variance) and the rescaled family.
        const double m0 = law_m0(spec);
        const double upper =
            std::min(fam.m_plus(), mean_domain_upper(spec).value);
        if (std::isfinite(m0)) {
            for (double t : {0.05, 0.1, 0.15, 0.2, 0.25, 0.3})
                grid.push_back(m0 + t * (upper - m0));
        } else {
            // Unbounded-below domain: march left from the shared upper end.
            const double base = upper < 0.0 ? upper : -0.25;
            for (double t : {1.5, 2.0, 3.0, 4.0, 6.0, 8.0})
                grid.push_back(base * t);
        }
    }

    ReproductiveReport rep;
    rep.lambda = lambda;
    for (double m : grid) {
        const double expected = closed_pv(spec, m) / lambda;
        const double got = fam.pseudo_variance(m);
        rep.rows.push_back({m, expected, got});
        const double dev = std::abs(got - expected) / (1.0 + std::abs(expected));
        rep.max_rel_dev = std::max(rep.max_rel_dev, dev);
    }
    return rep;
}

}  // namespace csk
