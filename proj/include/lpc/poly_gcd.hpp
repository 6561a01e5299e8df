#pragma once

#include <optional>
#include <span>

#include "lpc/polynomial.hpp"

namespace lpc {

/// Scales p so its graded-lex leading coefficient is 1 (zero stays zero).
Polynomial make_monic(const Polynomial& p);

/// Quotient a / b when b divides a exactly, otherwise nullopt.  b must be nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic multivariate GCD by the recursive primitive-part Euclidean algorithm, recursing on
/// the highest-index variable present.  Throws std::invalid_argument if both inputs are zero.
Polynomial multivariate_gcd(const Polynomial& a, const Polynomial& b);

/// Monic GCD of a list of polynomials (zeros ignored).  Throws if all are zero.
Polynomial gcd_all(std::span<const Polynomial> polys);

/// Pseudo-remainder of a by b viewed as univariate polynomials in variable v.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v);

}  // namespace lpc
