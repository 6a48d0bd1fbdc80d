#include "csk/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "csk/rootfind.hpp"

namespace csk {

namespace {

quad::Options transform_options() {
    quad::Options opt;
    opt.abs_tol = 1e-14;
    opt.rel_tol = 1e-11;
    return opt;
}

constexpr double kPi = 3.141592653589793;

}  // namespace

TransformEvaluator::TransformEvaluator(RealMeasure source)
    : source_(std::move(source)),
      b_(source_.sup_support()),
      cache_(std::make_shared<Cache>()) {}

double TransformEvaluator::g_real_checked(double z) const {
    const bool above = z > b_;
    const bool below = !source_.has_unbounded_support() && z < source_.inf_support();
    if (!above && !below)
        throw DomainError("real argument of G lies on the support slit");
    return source_.integrate([z](double x) { return 1.0 / (z - x); }, 0,
                             transform_options());
}

double TransformEvaluator::cauchy_g(double z) const { return g_real_checked(z); }

std::complex<double> TransformEvaluator::cauchy_g(std::complex<double> z) const {
    if (z.imag() == 0.0) return {g_real_checked(z.real()), 0.0};
    std::vector<double> breakpoints;
    if (std::abs(z.imag()) < 1.0 && z.real() < b_) breakpoints.push_back(z.real());
    return source_.integrate_complex(
        [z](double x) { return 1.0 / (z - x); }, breakpoints,
        transform_options());
}

double TransformEvaluator::limit_by_extrapolation(double anchor,
                                                  double direction) const {
    // Sample G(anchor + direction * 2^{-k}) and Aitken-extrapolate; declare
    // an infinite limit when the sequence keeps growing geometrically.
    std::vector<double> s;
    for (int k = 2; k <= 26; ++k) {
        const double z = anchor + direction * std::ldexp(1.0, -k);
        double v;
        try {
            v = g_real_checked(z);
        } catch (const QuadratureFailure&) {
            break;
        }
        if (std::abs(v) > 1e12) return direction > 0 ? kInf : -kInf;
        s.push_back(v);
    }
    if (s.size() < 3) throw QuadratureFailure("cannot extrapolate G limit");
    // Geometric growth over the last few samples means the limit is infinite.
    const std::size_t n = s.size();
    if (std::abs(s[n - 1]) > 1e6 &&
        std::abs(s[n - 1]) > 1.1 * std::abs(s[n - 2]) &&
        std::abs(s[n - 2]) > 1.1 * std::abs(s[n - 3]))
        return direction > 0 ? kInf : -kInf;
    // Two Aitken passes.
    for (int pass = 0; pass < 2 && s.size() >= 3; ++pass) {
        std::vector<double> a;
        for (std::size_t i = 0; i + 2 < s.size(); ++i) {
            const double d1 = s[i + 1] - s[i];
            const double d2 = s[i + 2] - 2.0 * s[i + 1] + s[i];
            a.push_back(d2 != 0.0 ? s[i] - d1 * d1 / d2 : s[i + 2]);
        }
        s = std::move(a);
    }
    return s.back();
}

double TransformEvaluator::g_limit_at_b() const {
    std::call_once(cache_->upper_flag, [this] {
        const double bound = support_bound();
        for (const Atom& a : source_.atoms()) {
            if (a.location == bound) {
                cache_->g_at_b = kInf;
                return;
            }
        }
        quad::Options opt = transform_options();
        try {
            cache_->g_at_b = source_.integrate(
                [bound](double x) { return 1.0 / (bound - x); }, 0, opt);
        } catch (const DivergentIntegral&) {
            cache_->g_at_b = kInf;
        } catch (const QuadratureFailure&) {
            cache_->g_at_b = limit_by_extrapolation(bound, +1.0);
        }
    });
    return cache_->g_at_b;
}

double TransformEvaluator::g_limit_at_a() const {
    std::call_once(cache_->lower_flag, [this] {
        if (source_.has_unbounded_support())
            throw DomainError("G(A) requires support bounded below");
        const double anchor = std::min(0.0, source_.inf_support());
        for (const Atom& a : source_.atoms()) {
            if (a.location == anchor) {
                cache_->g_at_a = -kInf;
                return;
            }
        }
        quad::Options opt = transform_options();
        try {
            cache_->g_at_a = source_.integrate(
                [anchor](double x) { return 1.0 / (anchor - x); }, 0, opt);
        } catch (const DivergentIntegral&) {
            cache_->g_at_a = -kInf;
        } catch (const QuadratureFailure&) {
            cache_->g_at_a = limit_by_extrapolation(anchor, -1.0);
        }
    });
    return cache_->g_at_a;
}

double TransformEvaluator::inverse_k(double w) const {
    const double gb = g_limit_at_b();
    if (!(w > 0.0) || w >= gb)
        throw DomainError("K(w) requires w in (0, G(B))");
    const double bound = support_bound();
    const double scale = 1.0 + std::abs(bound);

    double off = 1e-6 * scale;
    double lo = bound + off;
    double flo = g_real_checked(lo) - w;
    while (flo <= 0.0) {
        off *= 0.25;
        if (off < 1e-15 * scale)
            throw DomainError("w too close to G(B) to invert");
        lo = bound + off;
        flo = g_real_checked(lo) - w;
    }

    double span = std::max(1.0, std::abs(bound));
    double hi = bound + span;
    double fhi = g_real_checked(hi) - w;
    int guard = 0;
    while (fhi >= 0.0) {
        span *= 2.0;
        hi = bound + span;
        fhi = g_real_checked(hi) - w;
        if (++guard > 200) throw QuadratureFailure("K bracket search failed");
    }
    auto f = [&](double u) { return g_real_checked(u) - w; };
    return find_root_bracketed(f, lo, hi, flo, fhi, tolerances().root);
}

double TransformEvaluator::r_transform(double w) const {
    return inverse_k(w) - 1.0 / w;
}

namespace {

std::vector<double>& schedule_override() {
    static std::vector<double> s;
    return s;
}

}  // namespace

std::vector<double> default_eps_schedule() {
    if (!schedule_override().empty()) return schedule_override();
    std::vector<double> eps;
    for (double e = 1e-2; e > 1e-6; e *= 0.5) eps.push_back(e);
    return eps;
}

void set_default_eps_schedule(std::vector<double> schedule) {
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0) ||
            (i > 0 && schedule[i] >= schedule[i - 1]))
            throw InvalidSpec("eps schedule must be positive and decreasing");
    }
    schedule_override() = std::move(schedule);
}

std::vector<InversionPoint> stieltjes_invert(
    const std::function<std::complex<double>(std::complex<double>)>& g,
    const std::vector<double>& grid, const std::vector<double>& eps_schedule,
    bool strict) {
    if (eps_schedule.size() < 4)
        throw DomainError("eps schedule needs at least 4 entries");
    std::vector<InversionPoint> out;
    out.reserve(grid.size());
    for (double x : grid) {
        std::vector<double> v;
        v.reserve(eps_schedule.size());
        for (double eps : eps_schedule)
            v.push_back(-std::imag(g({x, eps})) / kPi);
        // Richardson levels assuming an O(eps) bias, then O(eps^2).
        std::vector<double> r1(v.size() - 1), r2(v.size() - 2);
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            r1[i] = 2.0 * v[i + 1] - v[i];
        for (std::size_t i = 0; i + 1 < r1.size(); ++i)
            r2[i] = (4.0 * r1[i + 1] - r1[i]) / 3.0;
        const std::size_t n = r2.size();
        InversionPoint p;
        p.x = x;
        p.density = r2[n - 1];
        p.error = std::abs(r2[n - 1] - r2[n - 2]);
        const double d_prev = std::abs(r2[n - 2] - r2[n - 3]);
        p.stable = !(p.error > d_prev && p.error > 1e-6);
        if (strict && !p.stable)
            throw ExtrapolationUnstable(
                "stieltjes extrapolants diverge (atom or support edge)");
        out.push_back(p);
    }
    return out;
}

double atom_scan(
    const std::function<std::complex<double>(std::complex<double>)>& g,
    double location, const std::vector<double>& eps_schedule) {
    // -eps * Im G(x0 + i eps) = weight + pi * f(x0) * eps + O(eps^2);
    // a least-squares line over the smallest epsilons isolates the intercept.
    const std::size_t use = std::min<std::size_t>(8, eps_schedule.size());
    std::vector<double> es(eps_schedule.end() - use, eps_schedule.end());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double eps : es) {
        const double y = -eps * std::imag(g({location, eps}));
        sx += eps;
        sy += y;
        sxx += eps * eps;
        sxy += eps * y;
    }
    const double n = static_cast<double>(es.size());
    const double denom = n * sxx - sx * sx;
    const double intercept = (sy * sxx - sx * sxy) / denom;
    return std::max(0.0, intercept);
}

}  // namespace csk
