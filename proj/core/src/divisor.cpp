#include "rrlat/divisor.hpp"

#include <algorithm>
#include <sstream>

namespace rrlat {

namespace {

void check_size(std::size_t a, std::size_t b) {
  if (a != b) throw InvalidInput("dimension mismatch");
}

}  // namespace

Divisor::Divisor(std::vector<Integer> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw InvalidInput("divisor needs at least 2 coordinates");
}

Divisor::Divisor(std::initializer_list<long long> coords) {
  for (long long c : coords) coords_.emplace_back(c);
  if (coords_.size() < 2) throw InvalidInput("divisor needs at least 2 coordinates");
}

Divisor Divisor::zero(std::size_t size) { return Divisor(std::vector<Integer>(size, 0)); }
Divisor Divisor::ones(std::size_t size) { return Divisor(std::vector<Integer>(size, 1)); }

Divisor Divisor::unit(std::size_t size, std::size_t i) {
  Divisor d = zero(size);
  d[i] = 1;
  return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
  check_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  check_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Divisor& Divisor::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const Divisor& a, const Divisor& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (a[i] > b[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Integer degree(const Divisor& d) {
  Integer s = 0;
  for (const auto& c : d.coords()) s += c;
  return s;
}

Integer deg_plus(const Divisor& d) {
  Integer s = 0;
  for (const auto& c : d.coords()) if (c > 0) s += c;
  return s;
}

Integer deg_minus(const Divisor& d) {
  Integer s = 0;
  for (const auto& c : d.coords()) if (c < 0) s += c;
  return s;
}

Divisor positive_part(const Divisor& d) {
  Divisor r = d;
  for (std::size_t i = 0; i < r.size(); ++i) if (r[i] < 0) r[i] = 0;
  return r;
}

Divisor negative_part(const Divisor& d) {
  Divisor r = d;
  for (std::size_t i = 0; i < r.size(); ++i) if (r[i] > 0) r[i] = 0;
  return r;
}

bool dominated(const Divisor& a, const Divisor& b) {
  check_size(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) if (a[i] > b[i]) return false;
  return true;
}

bool effective(const Divisor& d) {
  return std::all_of(d.coords().begin(), d.coords().end(),
                     [](const Integer& c) { return c >= 0; });
}

std::string to_string(const Divisor& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += d[i].str();
  }
  return s + ")";
}

Divisor parse_divisor(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == ',' || ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<Integer> coords;
  std::string tok;
  while (in >> tok) coords.push_back(parse_integer(tok));
  return Divisor(std::move(coords));
}

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

RationalPoint::RationalPoint(const Divisor& d) {
  coords_.reserve(d.size());
  for (const auto& c : d.coords()) coords_.emplace_back(c);
}

RationalPoint& RationalPoint::operator+=(const RationalPoint& o) {
  check_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalPoint& RationalPoint::operator-=(const RationalPoint& o) {
  check_size(size(), o.size());
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalPoint& RationalPoint::operator*=(const Rational& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

RationalPoint RationalPoint::operator-() const {
  RationalPoint r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator<(const RationalPoint& a, const RationalPoint& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(),
                                      b.coords_.begin(), b.coords_.end());
}

bool RationalPoint::integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
  });
}

Divisor RationalPoint::to_divisor() const {
  std::vector<Integer> c;
  c.reserve(size());
  for (const auto& q : coords_) {
    if (boost::multiprecision::denominator(q) != 1) throw InvalidInput("point is not integral");
    c.push_back(boost::multiprecision::numerator(q));
  }
  return Divisor(std::move(c));
}

Rational degree(const RationalPoint& x) {
  Rational s = 0;
  for (const auto& c : x.coords()) s += c;
  return s;
}

RationalPoint project_H0(const Divisor& x) { return project_H0(RationalPoint(x)); }

RationalPoint project_H0(const RationalPoint& x) {
  Rational shift = degree(x) / Rational(x.size());
  RationalPoint r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= shift;
  return r;
}

std::string to_string(const RationalPoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += to_string(x[i]);
  }
  return s + ")";
}

}  // namespace rrlat
