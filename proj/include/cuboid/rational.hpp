#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cuboid {

// Exact arithmetic everywhere: all identities in this library are checked
// for equality with zero, so no floating point appears anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Render as "num" for integers, "num/den" otherwise (den always > 0).
std::string to_string(const Rational& r);

/// Parse "num" or "num/den" with optional leading '-'. Throws
/// std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(std::string_view text);

/// Floor of the square root of a non-negative integer.
Integer isqrt(const Integer& n);

/// True iff n is a perfect square; if so *root receives the square root.
bool is_perfect_square(const Integer& n, Integer* root = nullptr);

}  // namespace cuboid
