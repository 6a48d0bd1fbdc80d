#pragma once

#include <stdexcept>
#include <string>

namespace csk {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An integral provably diverges (tail exponent too small).
struct DivergentIntegral : Error {
    using Error::Error;
};

/// The adaptive quadrature could not reach the requested tolerance.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// An argument is outside the operation's domain.
struct DomainError : Error {
    using Error::Error;
};

/// Variance function requested for a family whose generator has no mean.
struct MeanUndefined : Error {
    using Error::Error;
};

/// The candidate pseudo-variance function does not come from any measure.
struct InvalidPV : Error {
    using Error::Error;
};

/// Malformed law specification or measure construction data.
struct InvalidSpec : Error {
    using Error::Error;
};

/// Affine map with zero scale.
struct InvalidMap : Error {
    using Error::Error;
};

/// Free convolution power outside the validity class of the base measure.
struct AlphaOutOfRange : Error {
    using Error::Error;
};

/// A scaled pseudo-variance left the algebraic class we can invert.
struct UnsupportedShape : Error {
    using Error::Error;
};

/// Stieltjes-inversion extrapolants diverge (atom or support edge).
struct ExtrapolationUnstable : Error {
    using Error::Error;
};

}  // namespace csk
