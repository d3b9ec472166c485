#include "rrlat/reduction.hpp"

namespace rrlat {

namespace {

// Columns v_i - v_0, i = 1..n.
RationalMatrix edge_matrix(const RationalSimplex& s) {
  const std::size_t n = s.dimension();
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = s.vertices[c + 1][r] - s.vertices[0][r];
  }
  return m;
}

}  // namespace

RationalMatrix inverse(RationalMatrix a) {
  const std::size_t n = a.size();
  RationalMatrix inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidInput("singular matrix");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RationalSimplex::RationalSimplex(std::vector<std::vector<Rational>> v) : vertices(std::move(v)) {
  if (vertices.size() < 2) throw InvalidInput("simplex needs at least 2 vertices");
  const std::size_t n = vertices.size() - 1;
  for (const auto& p : vertices) {
    if (p.size() != n) throw InvalidInput("simplex vertices must have dimension n");
  }
  inverse(edge_matrix(*this));  // rejects degenerate simplices
}

bool RationalSimplex::contains(const std::vector<Rational>& z) const {
  const std::size_t n = dimension();
  RationalMatrix inv = inverse(edge_matrix(*this));
  Rational rest = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational lambda = 0;
    for (std::size_t j = 0; j < n; ++j) lambda += inv[i][j] * (z[j] - vertices[0][j]);
    if (lambda < 0) return false;
    rest -= lambda;
  }
  return rest >= 0;
}

MembershipInstance reduce_simplex_to_membership(const RationalSimplex& s) {
  const std::size_t n = s.dimension();
  const std::size_t m = n + 1;
  std::vector<Rational> c(n, 0);
  for (const auto& v : s.vertices) {
    for (std::size_t j = 0; j < n; ++j) c[j] += v[j];
  }
  for (auto& x : c) x /= Rational(static_cast<long long>(m));

  // W: columns v_i - c for i = 1..n.  B: columns b_i, (b_i)_j = n if i = j else -1.
  RationalMatrix w(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) w[r][k] = s.vertices[k + 1][r] - c[r];
  }
  RationalMatrix winv = inverse(w);
  RationalMatrix f(m, std::vector<Rational>(n, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Rational b = (r == i + 1) ? Rational(static_cast<long long>(n)) : Rational(-1);
        acc += b * winv[i][k];
      }
      f[r][k] = acc;
    }
  }
  std::vector<Rational> x(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n; ++k) x[r] += f[r][k] * c[k];
  }

  Integer scale = 1;
  for (const auto& row : f) {
    for (const auto& q : row) scale = lcm(scale, boost::multiprecision::denominator(q));
  }
  for (const auto& q : x) scale = lcm(scale, boost::multiprecision::denominator(q));

  std::vector<Divisor> rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> col(m);
    for (std::size_t r = 0; r < m; ++r) {
      col[r] = boost::multiprecision::numerator(f[r][k] * Rational(scale));
    }
    rows.emplace_back(std::move(col));
  }
  std::vector<Integer> d(m);
  for (std::size_t r = 0; r < m; ++r) {
    d[r] = boost::multiprecision::numerator(x[r] * Rational(scale)) - scale;
  }
  return {LatticeBasis(std::move(rows)), Divisor(std::move(d)), scale, RationalPoint(x)};
}

bool simplex_has_integer_point(const RationalSimplex& s, std::size_t max_points) {
  const std::size_t n = s.dimension();
  std::vector<Integer> lo(n), hi(n);
  Integer total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = s.vertices[0][j], mx = mn;
    for (const auto& v : s.vertices) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    lo[j] = ceil(mn);
    hi[j] = floor(mx);
    if (hi[j] < lo[j]) return false;
    total *= hi[j] - lo[j] + 1;
  }
  if (total > max_points) throw ResourceError("simplex bounding box too large");
  RationalMatrix inv = inverse(edge_matrix(s));
  std::vector<Integer> z = lo;
  for (;;) {
    Rational rest = 1;
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i) {
      Rational lambda = 0;
      for (std::size_t j = 0; j < n; ++j) lambda += inv[i][j] * (Rational(z[j]) - s.vertices[0][j]);
      if (lambda < 0) inside = false;
      rest -= lambda;
    }
    if (inside && rest >= 0) return true;
    std::size_t k = 0;
    while (k < n && z[k] == hi[k]) z[k] = lo[k], ++k;
    if (k == n) return false;
    ++z[k];
  }
}

}  // namespace rrlat
