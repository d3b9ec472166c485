#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rrlat/numeric.hpp"

namespace rrlat {

// Integer point of Z^{n+1}.  Length is at least 2.
class Divisor {
 public:
  Divisor() = default;
  explicit Divisor(std::vector<Integer> coords);
  Divisor(std::initializer_list<long long> coords);

  static Divisor zero(std::size_t size);
  static Divisor ones(std::size_t size);
  static Divisor unit(std::size_t size, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  Divisor& operator+=(const Divisor& o);
  Divisor& operator-=(const Divisor& o);
  Divisor& operator*=(const Integer& k);

  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(Divisor a, const Integer& k) { return a *= k; }
  friend Divisor operator*(const Integer& k, Divisor a) { return a *= k; }
  Divisor operator-() const;

  friend bool operator==(const Divisor&, const Divisor&) = default;
  // Lexicographic order; used for canonical choices, not domination.
  friend std::strong_ordering operator<=>(const Divisor& a, const Divisor& b);

 private:
  std::vector<Integer> coords_;
};

Integer degree(const Divisor& d);
Integer deg_plus(const Divisor& d);
Integer deg_minus(const Divisor& d);
Divisor positive_part(const Divisor& d);
Divisor negative_part(const Divisor& d);

// Coordinate-wise a <= b.
bool dominated(const Divisor& a, const Divisor& b);
bool effective(const Divisor& d);

// "(a,b,c)"
std::string to_string(const Divisor& d);
// Whitespace and/or comma separated integers, optional parentheses.
Divisor parse_divisor(std::string_view text);

// Exact rational point of R^{n+1}.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords);
  explicit RationalPoint(const Divisor& d);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  RationalPoint& operator+=(const RationalPoint& o);
  RationalPoint& operator-=(const RationalPoint& o);
  RationalPoint& operator*=(const Rational& k);
  friend RationalPoint operator+(RationalPoint a, const RationalPoint& b) { return a += b; }
  friend RationalPoint operator-(RationalPoint a, const RationalPoint& b) { return a -= b; }
  friend RationalPoint operator*(RationalPoint a, const Rational& k) { return a *= k; }
  friend RationalPoint operator*(const Rational& k, RationalPoint a) { return a *= k; }
  RationalPoint operator-() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend bool operator<(const RationalPoint& a, const RationalPoint& b);

  bool integral() const;
  // Requires integral().
  Divisor to_divisor() const;

 private:
  std::vector<Rational> coords_;
};

Rational degree(const RationalPoint& x);
RationalPoint project_H0(const Divisor& x);
RationalPoint project_H0(const RationalPoint& x);
std::string to_string(const RationalPoint& x);

}  // namespace rrlat
