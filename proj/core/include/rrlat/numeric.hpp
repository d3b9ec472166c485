#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rrlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Integer>>;

// Input that violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search exceeded its configured budget.  Never a mathematical answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// b must be positive.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer lcm(const Integer& a, const Integer& b);

std::string to_string(const Integer& z);
// "p" or "p/q".
std::string to_string(const Rational& q);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

// Exact determinant (fraction-free elimination).
Integer determinant(Matrix m);

// Fits in int64 with the given headroom (|z| < 2^bits).
bool fits_bits(const Integer& z, unsigned bits);

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]; platform independent.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

}  // namespace rrlat
