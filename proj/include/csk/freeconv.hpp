#pragma once

#include <vector>

#include "csk/family.hpp"
#include "csk/laws.hpp"
#include "csk/measure.hpp"
#include "csk/pseudo_variance.hpp"

namespace csk {

/// x -> (x - gamma) / delta.
struct AffineMap {
    double gamma = 0.0;
    double delta = 1.0;
};

/// Pushforward under an orientation-preserving affine map (delta > 0).
RealMeasure affine_apply(const RealMeasure& mu, const AffineMap& map);

/// A measure together with a reflection flag, so that maps with delta < 0
/// stay representable in the bounded-above class: when reflected is set the
/// stored measure is the pushforward under x -> -x of the intended one.
struct OrientedMeasure {
    RealMeasure measure;
    bool reflected = false;
};

OrientedMeasure affine_apply_oriented(const RealMeasure& mu,
                                      const AffineMap& map);
OrientedMeasure reflect(const OrientedMeasure& om);

/// Pushforward under x -> r x, r > 0.
RealMeasure dilate(const RealMeasure& mu, double r);

/// R-transform of the free convolution power: alpha * R(w).  Closed form
/// when the law has one; numeric variant requires alpha >= 1.
double conv_power_r(const LawSpec& spec, double alpha, double w);
double conv_power_r(const CSKFamily& family, double alpha, double w);

/// Pseudo-variance of the convolution power: alpha * pv(m / alpha).
double conv_power_pv(const PseudoVariance& pv, double alpha, double m);

/// The pseudo-variance shape of the alpha-th convolution power; closed
/// polynomial shapes map to shapes of the same class.
PseudoVariance scale_pv(const PseudoVariance& pv, double alpha);

/// Generating measure of the alpha-th free convolution power.  alpha must be
/// >= 1 unless the law is free infinitely divisible.
RealMeasure conv_power_measure(const LawSpec& spec, double alpha);

struct ReproductiveRow {
    double m = 0.0;
    double expected = 0.0;
    double got = 0.0;
};

struct ReproductiveReport {
    double lambda = 1.0;
    double max_rel_dev = 0.0;
    std::vector<ReproductiveRow> rows;
};

/// Checks that dilating the lambda-th convolution power by 1/lambda divides
/// the pseudo-variance by lambda, comparing the numerically recovered
/// pseudo-variance against the closed one on a mean grid (a default grid is
/// chosen inside the rescaled family's mean domain when none is given).
ReproductiveReport reproductive_check(const LawSpec& spec, double lambda,
                                      const std::vector<double>& m_grid = {});

}  // namespace csk
