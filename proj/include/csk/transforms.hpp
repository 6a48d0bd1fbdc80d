#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "csk/measure.hpp"

namespace csk {

/// Evaluates the Cauchy transform G, its reciprocal F = 1/G, the
/// compositional inverse K on (B, inf), and the R-transform K(w) - 1/w for a
/// fixed measure.  Shareable across threads; G(B) is cached once computed.
class TransformEvaluator {
  public:
    explicit TransformEvaluator(RealMeasure source);

    const RealMeasure& source() const { return source_; }
    double sup_support() const { return b_; }
    double support_bound() const { return b_ > 0.0 ? b_ : 0.0; }

    /// G(z) = int (z-x)^{-1} dnu.  Real z must lie off the support hull;
    /// complex z must have nonzero imaginary part.
    std::complex<double> cauchy_g(std::complex<double> z) const;
    double cauchy_g(double z) const;

    /// lim_{z -> B+} G(z) as an extended number in (0, inf].
    double g_limit_at_b() const;

    /// lim_{z -> A-} G(z) in [-inf, 0) for measures bounded below, where
    /// A = min(0, inf supp).
    double g_limit_at_a() const;

    /// K(w): the unique u > b with G(u) = w, for w in (0, G(B)).
    double inverse_k(double w) const;

    /// R(w) = K(w) - 1/w on (0, G(B)).
    double r_transform(double w) const;

  private:
    double g_real_checked(double z) const;
    double limit_by_extrapolation(double anchor, double direction) const;

    RealMeasure source_;
    double b_;

    struct Cache {
        std::once_flag upper_flag;
        double g_at_b = 0.0;
        std::once_flag lower_flag;
        double g_at_a = 0.0;
    };
    std::shared_ptr<Cache> cache_;
};

/// Default epsilon schedule for Stieltjes inversion: geometric from 1e-2
/// with ratio 1/2 down to ~1.2e-6, unless overridden.
std::vector<double> default_eps_schedule();

/// Replace the default schedule process-wide (used by the CLI's
/// --eps-schedule flag).  Entries must be positive and strictly decreasing.
void set_default_eps_schedule(std::vector<double> schedule);

struct InversionPoint {
    double x = 0.0;
    double density = 0.0;
    double error = 0.0;
    bool stable = true;
};

/// Recover density values from a Cauchy transform by Richardson-extrapolated
/// Stieltjes inversion, -Im G(x + i eps) / pi across the schedule.  With
/// strict = true an unstable extrapolation (atom or support edge at x)
/// raises ExtrapolationUnstable; otherwise the point is flagged.
std::vector<InversionPoint> stieltjes_invert(
    const std::function<std::complex<double>(std::complex<double>)>& g,
    const std::vector<double>& grid,
    const std::vector<double>& eps_schedule = default_eps_schedule(),
    bool strict = false);

/// Estimated atom weight at the given location: linear fit of
/// -eps * Im G(location + i eps) over the schedule; ~0 when no atom.
double atom_scan(
    const std::function<std::complex<double>(std::complex<double>)>& g,
    double location,
    const std::vector<double>& eps_schedule = default_eps_schedule());

}  // namespace csk
