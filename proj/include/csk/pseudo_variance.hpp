#pragma once

#include <complex>
#include <memory>
#include <variant>

#include "csk/measure.hpp"

namespace csk {

class CSKFamily;

/// Pseudo-variance m V(m)/(m - m0) with quadratic variance function
/// V(m) = a - b m + c m^2, a > 0.  Generators in this class have mean m0.
struct QuadraticPV {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double m0 = 0.0;
};

/// Cubic pseudo-variance m (a m^2 + b m + c), a > 0, for generators with
/// infinite mean (m0 = -inf).
struct CubicPV {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

/// Pseudo-variance of a family: one of the closed polynomial shapes, or a
/// numeric fallback backed by a family's root-finding evaluator.
class PseudoVariance {
  public:
    PseudoVariance(QuadraticPV q);  // NOLINT(google-explicit-constructor)
    PseudoVariance(CubicPV c);      // NOLINT(google-explicit-constructor)
    explicit PseudoVariance(std::shared_ptr<const CSKFamily> family);

    double operator()(double m) const;

    const QuadraticPV* quadratic() const {
        return std::get_if<QuadraticPV>(&form_);
    }
    const CubicPV* cubic() const { return std::get_if<CubicPV>(&form_); }
    bool is_closed_form() const;

  private:
    std::variant<QuadraticPV, CubicPV, std::shared_ptr<const CSKFamily>> form_;
};

/// sqrt(u^2 - k2) on the branch asymptotic to u at infinity, computed as
/// u sqrt(1 - k2/u^2) to keep the cut on the physical slit.
std::complex<double> sqrt_tail(std::complex<double> u, std::complex<double> k2);

/// The solution m(z) of (1+c) m^2 - (b + z + m0) m + (a + z m0) = 0 on the
/// branch with m(z) -> m0 as z -> inf.
std::complex<double> quadratic_m_branch(const QuadraticPV& q,
                                        std::complex<double> z);

/// Cauchy transform of the quadratic-class generator,
/// G(z) = (m(z) - m0)/(a - b m(z) + c m(z)^2).
std::complex<double> quadratic_g(const QuadraticPV& q, std::complex<double> z);

/// Support interval [lower, upper] of the continuous part: the real branch
/// points of m(z).  Throws InvalidPV when they are not real.
std::pair<double, double> quadratic_branch_points(const QuadraticPV& q);

/// Reconstruct the generating measure of the family whose pseudo-variance is
/// pv.  Only the two closed polynomial shapes are invertible; anything else
/// raises InvalidPV, as do parameters whose algebraic Cauchy transform fails
/// the Nevanlinna and normalization checks.
RealMeasure pv_to_generator(const PseudoVariance& pv);

}  // namespace csk
