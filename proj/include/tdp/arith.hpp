#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace tdp {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>, boost::multiprecision::et_off>;

/// Largest integer <= a/b. b must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

/// Smallest integer >= a/b. b must be nonzero.
Integer ceil_div(const Integer& a, const Integer& b);

/// Representative of a modulo m in [0, m). m must be positive.
Integer mod_floor(const Integer& a, const Integer& m);

/// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

struct Bezout {
  Integer g;  // nonnegative
  Integer x;
  Integer y;  // a*x + b*y == g
};

Bezout ext_gcd(const Integer& a, const Integer& b);

/// Inverse of a modulo m (m >= 1), in [0, m); nullopt when gcd(a, m) != 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& m);

/// Integer square root (floor) of a nonnegative value.
Integer isqrt(const Integer& n);

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Parses an optionally signed decimal; throws std::invalid_argument.
Integer parse_integer(const std::string& text);

}  // namespace tdp
