#include "csk/family.hpp"

#include <cmath>
#include <utility>

#include "csk/rootfind.hpp"

namespace csk {

CSKFamily::CSKFamily(RealMeasure generator)
    : gen_(std::move(generator)), ev_(gen_) {
    if (gen_.is_point_mass())
        throw InvalidSpec("a point mass does not generate a family");
    B_ = gen_.support_bound();
    theta_plus_ = B_ > 0.0 ? 1.0 / B_ : kInf;
    m0_ = gen_.mean();
    const double gb = ev_.g_limit_at_b();
    m_plus_ = B_ - (std::isinf(gb) ? 0.0 : 1.0 / gb);
}

void CSKFamily::check_theta(double theta) const {
    if (!(theta > 0.0) || !(theta < theta_plus_))
        throw DomainError("theta outside (0, theta_plus)");
}

void CSKFamily::check_mean(double m) const {
    if (!(m > m0_) || !(m < m_plus_))
        throw DomainError("mean outside (m0, m_plus)");
}

double CSKFamily::normalizer(double theta) const {
    check_theta(theta);
    return ev_.cauchy_g(1.0 / theta) / theta;
}

double CSKFamily::mean_of_theta(double theta) const {
    check_theta(theta);
    const double z = 1.0 / theta;
    return z - 1.0 / ev_.cauchy_g(z);
}

double CSKFamily::z_of_mean(double m) const {
    check_mean(m);
    // h(z) = z - 1/G(z) decreases from m_plus at B+ to m0 at +inf; solve
    // h(z) = m on a bracket grown outward from B.
    auto h = [this, m](double z) { return z - 1.0 / ev_.cauchy_g(z) - m; };
    const double scale = 1.0 + std::abs(B_);

    double off = 1e-4 * scale;
    double lo = B_ + off;
    double flo = h(lo);
    while (flo <= 0.0) {
        off *= 0.25;
        if (off < 1e-15 * scale)
            throw DomainError("mean too close to m_plus to invert");
        lo = B_ + off;
        flo = h(lo);
    }

    double span = scale;
    double hi = B_ + span;
    double fhi = h(hi);
    int guard = 0;
    while (fhi >= 0.0) {
        span *= 2.0;
        hi = B_ + span;
        fhi = h(hi);
        if (++guard > 200) throw QuadratureFailure("psi bracket search failed");
    }
    return find_root_bracketed(h, lo, hi, flo, fhi, tolerances().root);
}

double CSKFamily::psi_of_mean(double m) const { return 1.0 / z_of_mean(m); }

double CSKFamily::pseudo_variance(double m) const {
    return m * (z_of_mean(m) - m);
}

double CSKFamily::variance_function(double m) const {
    if (m0_ == -kInf)
        throw MeanUndefined("variance function needs a finite generator mean");
    if (m == 0.0) throw DomainError("variance function is evaluated at m != 0");
    return (m - m0_) / m * pseudo_variance(m);
}

MemberDensity CSKFamily::member(double m) const {
    const double z = z_of_mean(m);
    // Tilt factor pv/(pv + m (m - x)) = (z - m)/(z - x), the second form
    // being stable uniformly in m (including m = 0).
    auto factor = [z, m](double x) { return (z - m) / (z - x); };

    std::optional<DensityPart> dens;
    if (gen_.density_part()) {
        const DensityPart& d = *gen_.density_part();
        auto base = d.density;
        DensityPart nd;
        nd.density = [base, factor](double x) { return factor(x) * base(x); };
        nd.support_lower = d.support_lower;
        nd.support_upper = d.support_upper;
        if (d.left_tail_exponent)
            // The tilt decays like 1/|x|, sharpening the tail by one power.
            nd.left_tail_exponent = *d.left_tail_exponent + 1.0;
        dens = std::move(nd);
    }
    std::vector<Atom> atoms;
    for (const Atom& a : gen_.atoms())
        atoms.push_back({a.location, a.weight * factor(a.location)});

    MemberDensity md{m, RealMeasure(std::move(dens), std::move(atoms)),
                     m * (z - m)};
    return md;
}

MeanDomain CSKFamily::mean_domain() const {
    MeanDomain dom;
    dom.m0 = m0_;
    dom.m_plus = m_plus_;
    if (!gen_.has_unbounded_support()) {
        const double A = std::min(0.0, gen_.inf_support());
        const double ga = ev_.g_limit_at_a();
        dom.m_minus = A - (std::isinf(ga) ? 0.0 : 1.0 / ga);
    }
    return dom;
}

double CSKFamily::bis_residual(double m, double x) const {
    if (m == 0.0) throw DomainError("identity residual needs m != 0");
    const double z = z_of_mean(m);
    const double pv = m * (z - m);
    const double g = (z - m) / (z - x);
    return (g - 1.0) / m - (x - m) / pv * g;
}

}  // namespace csk
