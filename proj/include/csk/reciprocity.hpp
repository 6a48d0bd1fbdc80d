#pragma once

#include <functional>
#include <vector>

#include "csk/family.hpp"
#include "csk/laws.hpp"
#include "csk/pseudo_variance.hpp"

namespace csk {

/// A candidate reciprocal pair (nu_tilde, nu) of generating measures,
/// represented through their R-transforms on (0, G(B)) together with the
/// data needed to pick admissible test points.
struct ReciprocalPair {
    std::function<double(double)> r_tilde;
    std::function<double(double)> r_nu;
    double dom_tilde = 0.0;  ///< G_{nu~}(B~), +inf allowed
    double dom_nu = 0.0;     ///< G_nu(B), +inf allowed
    double m0_tilde = 0.0;   ///< mean of nu_tilde, -inf allowed
    double m0_nu = 0.0;      ///< mean of nu, -inf allowed
    std::vector<double> z_grid;
};

/// Pair built from closed-form transforms.
ReciprocalPair make_reciprocal_pair(const LawSpec& nu_tilde, const LawSpec& nu,
                                    int grid_points = 12);

/// Pair built from quadrature-backed evaluators.
ReciprocalPair make_reciprocal_pair(const CSKFamily& nu_tilde,
                                    const CSKFamily& nu, int grid_points = 12);

struct IdentityReport {
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// max_z | R_tilde(z |R(z)|) + 1/R(z) | over the pair's grid.
IdentityReport check_r_identity(const ReciprocalPair& pair, double tol);

/// The same identity with the roles of nu_tilde and nu exchanged.
IdentityReport check_symmetry(const ReciprocalPair& pair, double tol);

/// Pseudo-variance of the reciprocal law: -|m|^3 pv(-1/m).  m must be
/// nonzero with -1/m in the domain of pv.
double reciprocal_pv(const PseudoVariance& pv_nu, double m);

}  // namespace csk
