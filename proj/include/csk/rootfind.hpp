#pragma once

#include <cmath>

#include "csk/errors.hpp"

namespace csk {

/// Brent-style bracketed root finding (bisection + secant/inverse quadratic).
/// Requires f(a) and f(b) of opposite sign; converges to |interval| below
/// rel_tol * (1 + |x|).
template <class F>
double find_root_bracketed(const F& f, double a, double b, double fa, double fb,
                           double rel_tol, int max_iter = 200) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw DomainError("root is not bracketed");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = rel_tol * (1.0 + std::abs(b));
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol || fb == 0.0) return b;
        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol * q),
                                   std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (xm > 0.0 ? tol : -tol);
        fb = f(b);
    }
    return b;
}

template <class F>
double find_root_bracketed(const F& f, double a, double b, double rel_tol,
                           int max_iter = 200) {
    return find_root_bracketed(f, a, b, f(a), f(b), rel_tol, max_iter);
}

}  // namespace csk
