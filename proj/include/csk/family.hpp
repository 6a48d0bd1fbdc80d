#pragma once

#include <optional>

#include "csk/measure.hpp"
#include "csk/transforms.hpp"

namespace csk {

/// A family member reparameterized by its mean.
struct MemberDensity {
    double mean = 0.0;
    RealMeasure measure;
    double pv_at_mean = 0.0;
};

struct MeanDomain {
    double m0 = 0.0;      ///< lower end, -inf allowed
    double m_plus = 0.0;  ///< upper end, B - 1/G(B)
    /// Lower end of the two-sided domain for compactly supported generators,
    /// A - 1/G(A) with A = min(0, inf supp).
    std::optional<double> m_minus;
};

/// One-sided Cauchy-Stieltjes kernel family generated by a non-degenerate
/// probability measure with support bounded above.  theta ranges over
/// (0, 1/B); the mean parametrization ranges over (m0, m_plus).
class CSKFamily {
  public:
    explicit CSKFamily(RealMeasure generator);

    const RealMeasure& generator() const { return gen_; }
    const TransformEvaluator& evaluator() const { return ev_; }

    double support_bound() const { return B_; }
    double theta_plus() const { return theta_plus_; }
    double m0() const { return m0_; }
    double m_plus() const { return m_plus_; }

    /// M(theta) = int (1 - theta x)^{-1} dnu = G(1/theta)/theta.
    double normalizer(double theta) const;

    /// m(theta) = (M(theta) - 1) / (theta M(theta)), strictly increasing.
    double mean_of_theta(double theta) const;

    /// Inverse of mean_of_theta on (m0, m_plus).
    double psi_of_mean(double m) const;

    /// z(m) = 1/psi(m) = m + pv(m)/m, strictly decreasing to B.
    double z_of_mean(double m) const;

    /// Pseudo-variance m (1/psi(m) - m); negative on (m0, 0).
    double pseudo_variance(double m) const;

    /// Variance function (m - m0)/m * pv(m); requires a finite m0.
    double variance_function(double m) const;

    /// The family member with mean m, as a tilted measure.
    MemberDensity member(double m) const;

    MeanDomain mean_domain() const;

    /// Residual of the finite-difference identity satisfied by the member
    /// density factor; vanishes identically up to roundoff.
    double bis_residual(double m, double x) const;

  private:
    void check_theta(double theta) const;
    void check_mean(double m) const;

    RealMeasure gen_;
    TransformEvaluator ev_;
    double B_ = 0.0;
    double theta_plus_ = 0.0;
    double m0_ = 0.0;
    double m_plus_ = 0.0;
};

}  // namespace csk
