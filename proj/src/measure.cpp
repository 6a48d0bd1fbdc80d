#include "csk/measure.hpp"

#include <cmath>

#include "csk/quadrature.hpp"

namespace csk {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

namespace {

quad::Options mass_options() {
    quad::Options opt;
    opt.abs_tol = tolerances().quad;
    return opt;
}

}  // namespace

RealMeasure::RealMeasure(std::optional<DensityPart> density,
                         std::vector<Atom> atoms)
    : density_(std::move(density)), atoms_(std::move(atoms)) {
    b_ = -kInf;
    lo_ = kInf;
    if (density_) {
        if (!density_->density)
            throw InvalidSpec("density part without a density function");
        if (!std::isfinite(density_->support_upper))
            throw InvalidSpec("support must be bounded above");
        if (density_->support_lower >= density_->support_upper)
            throw InvalidSpec("empty density support");
        if (density_->support_lower == -kInf) {
            if (!density_->left_tail_exponent ||
                *density_->left_tail_exponent <= 1.0)
                throw InvalidSpec(
                    "unbounded support requires a left tail exponent > 1");
        }
        b_ = density_->support_upper;
        lo_ = density_->support_lower;
    }
    for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0) || a.weight > 1.0)
            throw InvalidSpec("atom weight must lie in (0, 1]");
        if (!std::isfinite(a.location))
            throw InvalidSpec("atom location must be finite");
        b_ = std::max(b_, a.location);
        lo_ = std::min(lo_, a.location);
    }
    if (!density_ && atoms_.empty())
        throw InvalidSpec("measure has neither density nor atoms");

    mass_ = integrate([](double) { return 1.0; });
    if (std::abs(mass_ - 1.0) > tolerances().mass)
        throw InvalidSpec("total mass deviates from 1 beyond tolerance");
}

bool RealMeasure::is_point_mass() const {
    return !density_ && atoms_.size() == 1;
}

double RealMeasure::mean() const {
    if (density_ && density_->support_lower == -kInf &&
        *density_->left_tail_exponent <= 2.0)
        return -kInf;
    return integrate([](double x) { return x; }, 1);
}

template <class T, class F>
T RealMeasure::integrate_impl(const F& f, int growth_degree,
                              const std::vector<double>& breakpoints,
                              const quad::Options& opt) const {
    T total{};
    if (density_) {
        auto h = [&](double x) -> T { return f(x) * density_->density(x); };
        if (density_->support_lower == -kInf) {
            const double beta = *density_->left_tail_exponent;
            if (beta - growth_degree <= 1.0)
                throw DivergentIntegral(
                    "left tail exponent too small for requested integrand");
            total += quad::integrate_lower_unbounded<T>(
                h, density_->support_upper, opt, breakpoints);
        } else {
            total += quad::integrate_finite<T>(h, density_->support_lower,
                                               density_->support_upper, opt,
                                               breakpoints);
        }
    }
    for (const Atom& a : atoms_) total += f(a.location) * a.weight;
    return total;
}

double RealMeasure::integrate(const std::function<double(double)>& f,
                              int growth_degree) const {
    return integrate_impl<double>(f, growth_degree, {}, mass_options());
}

double RealMeasure::integrate(const std::function<double(double)>& f,
                              int growth_degree,
                              const quad::Options& opt) const {
    return integrate_impl<double>(f, growth_degree, {}, opt);
}

std::complex<double> RealMeasure::integrate_complex(
    const std::function<std::complex<double>(double)>& f,
    const std::vector<double>& breakpoints) const {
    return integrate_impl<std::complex<double>>(f, 0, breakpoints,
                                                mass_options());
}

std::complex<double> RealMeasure::integrate_complex(
    const std::function<std::complex<double>(double)>& f,
    const std::vector<double>& breakpoints, const quad::Options& opt) const {
    return integrate_impl<std::complex<double>>(f, 0, breakpoints, opt);
}

RealMeasure point_mass(double x) {
    return RealMeasure(std::nullopt, {Atom{x, 1.0}});
}

}  // namespace csk
