#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "csk/errors.hpp"
#include "csk/quadrature.hpp"

namespace csk {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Global numerical tolerances.  The CLI exposes overrides via --tol and the
/// CSK_TOL environment variable.
struct Tolerances {
    double quad = 1e-10;  ///< absolute quadrature tolerance per integral
    double mass = 1e-8;   ///< allowed total-mass deviation from 1
    double root = 1e-12;  ///< relative root-finding tolerance
    double rel = 1e-6;    ///< relative tolerance for oracle comparisons
};

Tolerances& tolerances();

/// A point mass.
struct Atom {
    double location = 0.0;
    double weight = 0.0;  ///< in (0, 1]
};

/// Absolutely continuous part of a measure.  The support is an interval
/// bounded above; the lower end may be -inf, in which case the density must
/// decay like |x|^{-left_tail_exponent} with exponent > 1.
struct DensityPart {
    std::function<double(double)> density;
    double support_lower = -kInf;
    double support_upper = 0.0;
    std::optional<double> left_tail_exponent;
};

/// Probability measure with support bounded above: optional density part
/// plus a finite atom list.  Immutable after construction.
class RealMeasure {
  public:
    RealMeasure(std::optional<DensityPart> density, std::vector<Atom> atoms);

    const std::optional<DensityPart>& density_part() const { return density_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    /// Raw upper support bound b = sup supp.
    double sup_support() const { return b_; }
    /// B = max(0, sup supp).
    double support_bound() const { return b_ > 0.0 ? b_ : 0.0; }
    /// Lower end of the support hull (-inf allowed).
    double inf_support() const { return lo_; }
    bool has_unbounded_support() const { return lo_ == -kInf; }

    /// Total mass as measured at construction (within tolerances().mass of 1).
    double total_mass() const { return mass_; }

    /// True when the measure is a single point mass.
    bool is_point_mass() const;

    /// Integral of the measure's mean; returns -inf when the left tail makes
    /// x non-integrable (tail exponent <= 2).
    double mean() const;

    /// Integral of f against the measure.  growth_degree is the polynomial
    /// growth degree of f at -inf, used for the tail divergence check.
    double integrate(const std::function<double(double)>& f,
                     int growth_degree = 0) const;

    /// Complex-valued variant; breakpoints seed quadrature panel boundaries
    /// (used for near-slit Cauchy kernels).
    std::complex<double> integrate_complex(
        const std::function<std::complex<double>(double)>& f,
        const std::vector<double>& breakpoints = {}) const;

    /// Variants with explicit quadrature control (relative-tolerance mode,
    /// divergence guards) for the transform evaluators.
    double integrate(const std::function<double(double)>& f, int growth_degree,
                     const quad::Options& opt) const;
    std::complex<double> integrate_complex(
        const std::function<std::complex<double>(double)>& f,
        const std::vector<double>& breakpoints, const quad::Options& opt) const;

  private:
    template <class T, class F>
    T integrate_impl(const F& f, int growth_degree,
                     const std::vector<double>& breakpoints,
                     const quad::Options& opt) const;

    std::optional<DensityPart> density_;
    std::vector<Atom> atoms_;
    double b_ = 0.0;
    double lo_ = 0.0;
    double mass_ = 0.0;
};

/// Dirac measure at x.
RealMeasure point_mass(double x);

}  // namespace csk
