#include "csk/reciprocity.hpp"

#include <cmath>

namespace csk {

namespace {

bool admissible(const ReciprocalPair& pair, double z) {
    if (!(z > 0.0) || (std::isfinite(pair.dom_nu) && z >= pair.dom_nu))
        return false;
    double r;
    try {
        r = pair.r_nu(z);
    } catch (const Error&) {
        return false;
    }
    const double arg = z * std::abs(r);
    if (!(arg > 0.0)) return false;
    if (std::isfinite(pair.dom_tilde) && arg >= pair.dom_tilde) return false;
    return true;
}

void build_grid(ReciprocalPair& pair, int grid_points) {
    double z0 = std::isfinite(pair.dom_nu) ? 0.5 * pair.dom_nu : 1.0;
    int guard = 0;
    while (!admissible(pair, z0)) {
        z0 *= 0.5;
        if (++guard > 200)
            throw DomainError("no admissible reciprocity test points");
    }
    pair.z_grid.clear();
    double z = z0;
    while (static_cast<int>(pair.z_grid.size()) < grid_points) {
        if (admissible(pair, z)) pair.z_grid.push_back(z);
        z *= 0.5;
        if (++guard > 400) break;
    }
    if (pair.z_grid.empty())
        throw DomainError("no admissible reciprocity test points");
}

ReciprocalPair swapped(const ReciprocalPair& pair, int grid_points) {
    ReciprocalPair sw;
    sw.r_tilde = pair.r_nu;
    sw.r_nu = pair.r_tilde;
    sw.dom_tilde = pair.dom_nu;
    sw.dom_nu = pair.dom_tilde;
    sw.m0_tilde = pair.m0_nu;
    sw.m0_nu = pair.m0_tilde;
    build_grid(sw, grid_points);
    return sw;
}

}  // namespace

ReciprocalPair make_reciprocal_pair(const LawSpec& nu_tilde, const LawSpec& nu,
                                    int grid_points) {
    ReciprocalPair pair;
    pair.r_tilde = [nu_tilde](double w) { return closed_r(nu_tilde, w); };
    pair.r_nu = [nu](double w) { return closed_r(nu, w); };
    pair.dom_tilde = r_domain_upper(nu_tilde);
    pair.dom_nu = r_domain_upper(nu);
    pair.m0_tilde = law_m0(nu_tilde);
    pair.m0_nu = law_m0(nu);
    build_grid(pair, grid_points);
    return pair;
}

ReciprocalPair make_reciprocal_pair(const CSKFamily& nu_tilde,
                                    const CSKFamily& nu, int grid_points) {
    ReciprocalPair pair;
    const TransformEvaluator evt = nu_tilde.evaluator();
    const TransformEvaluator evn = nu.evaluator();
    pair.r_tilde = [evt](double w) { return evt.r_transform(w); };
    pair.r_nu = [evn](double w) { return evn.r_transform(w); };
    pair.dom_tilde = evt.g_limit_at_b();
    pair.dom_nu = evn.g_limit_at_b();
    pair.m0_tilde = nu_tilde.m0();
    pair.m0_nu = nu.m0();
    build_grid(pair, grid_points);
    return pair;
}

IdentityReport check_r_identity(const ReciprocalPair& pair, double tol) {
    IdentityReport rep;
    rep.tolerance = tol;
    for (double z : pair.z_grid) {
        const double r = pair.r_nu(z);
        const double lhs = pair.r_tilde(z * std::abs(r));
        const double rhs = -1.0 / r;
        const double res = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
        rep.max_residual = std::max(rep.max_residual, res);
    }
    rep.pass = rep.max_residual <= tol;
    return rep;
}

IdentityReport check_symmetry(const ReciprocalPair& pair, double tol) {
    const ReciprocalPair sw =
        swapped(pair, static_cast<int>(pair.z_grid.size()));
    return check_r_identity(sw, tol);
}

double reciprocal_pv(const PseudoVariance& pv_nu, double m) {
    if (m == 0.0)
        throw DomainError("reciprocal pseudo-variance needs m != 0");
    const double am = std::abs(m);
    return -am * am * am * pv_nu(-1.0 / m);
}

}  // namespace csk
