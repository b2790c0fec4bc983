#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fpgroups {

/// Generator subscripts. Rewriting shifts indices by multiples of p-1 and the
/// shifts accumulate, so indices are kept exact rather than machine-width.
using Index = boost::multiprecision::cpp_int;

/// Exact enumeration counts.
using Count = boost::multiprecision::cpp_int;

/// Exact normalized moments.
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient with C(a, b) := 0 whenever b < 0 or a < b
/// (a may be negative; such cells count as empty).
Count binomial(const Count& a, const Count& b);

/// n! ; n must be small (enumeration scale).
Count factorial(std::size_t n);

/// Double factorial d!! = d (d-2) (d-4) ...
Count double_factorial(std::size_t d);

}  // namespace fpgroups
