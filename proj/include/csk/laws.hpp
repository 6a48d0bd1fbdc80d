#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "csk/measure.hpp"
#include "csk/pseudo_variance.hpp"

#include "json.hpp"

namespace csk {

struct Semicircle {
    double center = 0.0;
    double variance = 1.0;
};

/// Quadratic-class law with V(m) = a - b m + c m^2 and generator mean 0.
struct QuadraticFreeMeixner {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

/// Cubic-class law with pseudo-variance m (a m^2 + b m + c).
struct Cubic {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

struct FreeHalfStable {
    double p = 1.0;
};

struct FreeAbel {};
struct FreeRessel {};
struct FreeStrictArcsine {};

struct FreeLargeArcsine {
    double r = 1.0;
};

struct FreeTakacs {
    double r = 1.0;
};

using LawSpec = std::variant<Semicircle, QuadraticFreeMeixner, Cubic,
                             FreeHalfStable, FreeAbel, FreeRessel,
                             FreeStrictArcsine, FreeLargeArcsine, FreeTakacs>;

/// Throws InvalidSpec on out-of-range parameters.
void validate(const LawSpec& spec);

/// Kebab-case kind tag, matching the JSON "kind" field.
std::string law_name(const LawSpec& spec);

/// The generating measure, from its literal density/atom description.
RealMeasure build_measure(const LawSpec& spec);

/// Closed-form Cauchy transform on the upper half-plane and on the real
/// axis off the support.
std::complex<double> closed_g(const LawSpec& spec, std::complex<double> z);

/// Closed-form pseudo-variance at a mean value in the open mean domain.
double closed_pv(const LawSpec& spec, double m);

/// Pseudo-variance shape (always one of the closed polynomial forms).
PseudoVariance law_pv(const LawSpec& spec);

/// Cubic shape parameters for cubic-class laws, nullopt otherwise.
std::optional<Cubic> cubic_params(const LawSpec& spec);

/// Mean of the generating measure; -inf for cubic-class laws.
double law_m0(const LawSpec& spec);

struct MeanDomainUpper {
    double value = 0.0;
    /// False when the case analysis is ambiguous and the value came from
    /// the numeric evaluator instead of a closed expression.
    bool from_closed_form = true;
};

/// Upper end m_plus = B - 1/G(B) of the mean domain.
MeanDomainUpper mean_domain_upper(const LawSpec& spec);

/// Closed-form R-transform on (0, r_domain_upper).
double closed_r(const LawSpec& spec, double w);

/// G(B), the right end of the R-transform domain (+inf allowed).
double r_domain_upper(const LawSpec& spec);

/// Whether convolution powers with exponent below 1 stay in the class.
bool free_infinitely_divisible(const LawSpec& spec);

/// Parse {"kind": ..., ...params}; unknown kinds and unknown or missing
/// fields raise InvalidSpec.
LawSpec law_from_json(const nlohmann::json& j);
LawSpec law_from_json_text(const std::string& text);

/// Named catalog used by the verification suites.
std::vector<std::pair<std::string, LawSpec>> catalog();

}  // namespace csk
