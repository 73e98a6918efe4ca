#pragma once

#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace exactgm {

using Rational = boost::multiprecision::mpq_rational;
using Integer  = boost::multiprecision::mpz_int;

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Smallest integer >= q.
Integer rational_ceil(const Rational& q);

bool is_integer(const Rational& q);

/// Parses "p/q", plain integers, and decimal literals ("1.001", ".0006",
/// "-3/2") into an exact rational. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

/// Floor of the integer square root; v must be nonnegative.
Integer isqrt(const Integer& v);

}  // namespace exactgm
