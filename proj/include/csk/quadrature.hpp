#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature with variable substitutions
// that absorb the two kinds of difficulty this library meets:
//   * algebraic endpoint behavior (x-a)^{+-1/2} on compact intervals,
//     absorbed by x = a + (b-a) sin^2(pi t / 2);
//   * lower-unbounded supports with algebraic tails |x|^{-beta},
//     absorbed by x = b - tan^2(pi t / 2), which simultaneously compresses
//     the finite endpoint quadratically.
// Integrands may be real or complex valued.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "csk/errors.hpp"

namespace csk::quad {

struct Options {
    double abs_tol = 1e-10;
    double rel_tol = 0.0;
    int max_panels = 60000;
    /// Abort with DivergentIntegral when the running estimate exceeds this.
    double divergence_guard = 1e12;
};

namespace detail {

// Kronrod-15 abscissae on [0,1] scale factor applied per panel; the even
// entries (1,3,5,7) are the embedded Gauss-7 nodes.
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

template <class T, class F>
void gk15(const F& g, double a, double b, T& value, double& error) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T fc = g(center);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        T sum = g(center - dx) + g(center + dx);
        resk += kWgk[j] * sum;
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    value = resk * half;
    error = magnitude((resk - resg) * half);
}

template <class T>
struct Panel {
    double a, b;
    T value;
    double error;
};

}  // namespace detail

/// Globally adaptive integration of g over [lo, hi], with optional interior
/// knots that seed the initial panel list.
template <class T, class F>
T adaptive(const F& g, double lo, double hi, const Options& opt,
           std::vector<double> knots = {}) {
    using detail::Panel;
    knots.push_back(lo);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

    std::vector<Panel<T>> heap;
    auto cmp = [](const Panel<T>& x, const Panel<T>& y) {
        return x.error < y.error;
    };
    T total{};
    double total_err = 0.0;
    double stuck_err = 0.0;
    auto push = [&](double a, double b) {
        Panel<T> p{a, b, T{}, 0.0};
        detail::gk15(g, a, b, p.value, p.error);
        total += p.value;
        // Panels narrower than a few ulps cannot be refined further; their
        // error is carried as an irreducible floor.
        const double width_floor =
            32.0 * std::numeric_limits<double>::epsilon() *
            (std::abs(a) + std::abs(b) + 1.0);
        if (b - a < width_floor) {
            stuck_err += p.error;
        } else {
            total_err += p.error;
            heap.push_back(p);
            std::push_heap(heap.begin(), heap.end(), cmp);
        }
    };

    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (knots[i] < lo || knots[i + 1] > hi) continue;
        push(knots[i], knots[i + 1]);
    }

    int panels = static_cast<int>(heap.size());
    while (true) {
        const double target =
            std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total));
        if (total_err + stuck_err <= target || heap.empty()) break;
        if (detail::magnitude(total) > opt.divergence_guard)
            throw DivergentIntegral("integral estimate exceeds divergence guard");
        if (panels >= opt.max_panels)
            throw QuadratureFailure("panel budget exhausted before tolerance");
        std::pop_heap(heap.begin(), heap.end(), cmp);
        Panel<T> worst = heap.back();
        heap.pop_back();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        push(worst.a, mid);
        push(mid, worst.b);
        panels += 2;
    }
    const double target =
        std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total));
    if (total_err + stuck_err > target)
        throw QuadratureFailure("quadrature error estimate above tolerance");
    return total;
}

namespace detail {

inline double half_pi() { return 1.5707963267948966; }

}  // namespace detail

/// Integral of f over the compact interval [a, b].  The sin^2 map makes
/// (x-a)^{+-1/2} and (b-x)^{+-1/2} endpoint factors smooth in t.
template <class T, class F>
T integrate_finite(const F& f, double a, double b, const Options& opt,
                   const std::vector<double>& breakpoints = {}) {
    if (!(b > a)) return T{};
    const double w = b - a;
    auto g = [&](double t) -> T {
        const double s = std::sin(detail::half_pi() * t);
        const double x = a + w * s * s;
        const double jac = w * detail::half_pi() * std::sin(3.141592653589793 * t);
        return f(x) * jac;
    };
    std::vector<double> knots;
    for (double x : breakpoints) {
        if (x <= a || x >= b) continue;
        knots.push_back(std::asin(std::sqrt((x - a) / w)) / detail::half_pi());
    }
    return adaptive<T>(g, 0.0, 1.0, opt, std::move(knots));
}

/// Integral of f over (-inf, b].  Requires an algebraic tail |x|^{-beta},
/// beta > 1; for beta = 3/2 (the catalog tails) the transformed integrand is
/// bounded at t = 1.
template <class T, class F>
T integrate_lower_unbounded(const F& f, double b, const Options& opt,
                            const std::vector<double>& breakpoints = {}) {
    auto g = [&](double t) -> T {
        const double u = detail::half_pi() * t;
        const double tn = std::tan(u);
        const double x = b - tn * tn;
        const double jac = 3.141592653589793 * tn * (1.0 + tn * tn);
        return f(x) * jac;
    };
    std::vector<double> knots;
    for (double x : breakpoints) {
        if (x >= b) continue;
        knots.push_back(std::atan(std::sqrt(b - x)) / detail::half_pi());
    }
    return adaptive<T>(g, 0.0, 1.0, opt, std::move(knots));
}

}  // namespace csk::quad
