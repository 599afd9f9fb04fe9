#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lsgdd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

/// True iff n is a perfect square; if so and root != nullptr, *root = sqrt(n).
bool is_perfect_square(const Int& n, Int* root = nullptr);

/// n = s * t^2 with s squarefree; returns s (requires n > 0).
Int squarefree_part(Int n);

/// "p" or "p/q" in lowest terms.
std::string rational_to_string(const Rational& r);

/// Parses the output of rational_to_string.
Rational rational_from_string(const std::string& s);

/// Exact conversion to a signed 64-bit value; throws std::overflow_error otherwise.
long long to_int64(const Int& n);

}  // namespace lsgdd
