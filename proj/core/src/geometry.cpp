#include "rrlat/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace rrlat {

namespace {

void require_same_degree(const RationalPoint& p, const RationalPoint& q) {
  if (p.size() != q.size()) throw InvalidInput("dimension mismatch");
  if (degree(p) != degree(q)) throw InvalidInput("points have different degrees");
}

// Lattice point near x (degree 0) by rounding Hermite coefficients.
Divisor rounded_point(const LatticeBasis& lattice, const RationalPoint& x) {
  const auto& h = lattice.hermite_rows();
  RationalPoint r = x;
  Divisor p = Divisor::zero(lattice.ambient_dim());
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    Integer c = floor(r[k] / Rational(h[k][k]) + Rational(1, 2));
    for (std::size_t j = 0; j < r.size(); ++j) {
      r[j] -= Rational(c * h[k][j]);
      p[j] += c * h[k][j];
    }
  }
  return p;
}

// Lattice points p with p >= lower (coordinate-wise), degree 0.
LatticeBox dominating_box(const Divisor& lower) {
  Integer deg = degree(lower);
  Divisor upper = lower;
  for (std::size_t i = 0; i < upper.size(); ++i) upper[i] -= deg;
  return {lower, upper};
}

}  // namespace

SimplexBall::SimplexBall(RationalPoint c, Rational r, Orientation o)
    : center(std::move(c)), radius(std::move(r)), orientation(o) {
  if (degree(center) != 0) throw InvalidInput("ball center must lie in H0");
  if (radius < 0) throw InvalidInput("ball radius must be nonnegative");
}

bool SimplexBall::contains(const RationalPoint& x) const {
  return degree(x) == 0 && simplicial_distance(center, x, orientation) <= radius;
}

std::vector<RationalPoint> SimplexBall::vertices() const {
  const std::size_t m = center.size();
  const Rational n(static_cast<long long>(m - 1));
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < m; ++i) {
    RationalPoint v = center;
    for (std::size_t j = 0; j < m; ++j) {
      Rational b = (i == j) ? n : Rational(-1);
      if (orientation == Orientation::down) b = -b;
      v[j] += radius * b;
    }
    out.push_back(std::move(v));
  }
  return out;
}

Rational simplicial_distance(const RationalPoint& p, const RationalPoint& q, Orientation o) {
  require_same_degree(p, q);
  Rational best = (o == Orientation::up) ? p[0] - q[0] : q[0] - p[0];
  for (std::size_t i = 1; i < p.size(); ++i) {
    Rational d = (o == Orientation::up) ? p[i] - q[i] : q[i] - p[i];
    if (d > best) best = d;
  }
  return best;
}

Integer simplicial_distance(const Divisor& p, const Divisor& q, Orientation o) {
  if (p.size() != q.size()) throw InvalidInput("dimension mismatch");
  if (degree(p) != degree(q)) throw InvalidInput("points have different degrees");
  Integer best = (o == Orientation::up) ? Integer(p[0] - q[0]) : Integer(q[0] - p[0]);
  for (std::size_t i = 1; i < p.size(); ++i) {
    Integer d = (o == Orientation::up) ? Integer(p[i] - q[i]) : Integer(q[i] - p[i]);
    if (d > best) best = d;
  }
  return best;
}

NearestPoint h_distance(const LatticeBasis& lattice, const RationalPoint& x) {
  if (x.size() != lattice.ambient_dim()) throw InvalidInput("dimension mismatch");
  if (degree(x) != 0) throw InvalidInput("h_distance needs a point of H0");
  Divisor p0 = rounded_point(lattice, x);
  Rational r0 = simplicial_distance(x, RationalPoint(p0));
  const std::size_t m = x.size();
  const Rational n(static_cast<long long>(m - 1));
  Divisor lo = Divisor::zero(m), hi = Divisor::zero(m);
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = ceil(x[i] - r0);
    hi[i] = floor(x[i] + n * r0);
  }
  NearestPoint best{r0, p0};
  for_each_lattice_point(lattice, {lo, hi}, [&](const Divisor& p) {
    Rational d = simplicial_distance(x, RationalPoint(p));
    if (d < best.distance || (d == best.distance && p < best.nearest)) best = {d, p};
    return true;
  });
  return best;
}

bool sigma_contains(const LatticeBasis& lattice, const Divisor& d) {
  if (d.size() != lattice.ambient_dim()) throw InvalidInput("dimension mismatch");
  if (degree(d) > 0) return true;
  bool found = false;
  for_each_lattice_point(lattice, dominating_box(d), [&](const Divisor&) {
    found = true;
    return false;
  });
  return !found;
}

bool closed_sigma_contains(const LatticeBasis& lattice, const Divisor& d) {
  return sigma_contains(lattice, d + Divisor::ones(d.size()));
}

bool is_extremal(const LatticeBasis& lattice, const Divisor& v) {
  if (!sigma_contains(lattice, v)) return false;
  const std::size_t m = v.size();
  std::vector<int> eps(m, -1);
  for (;;) {
    int s = 0;
    for (int e : eps) s += e;
    if (s < 0) {
      Divisor q = v;
      for (std::size_t i = 0; i < m; ++i) q[i] += eps[i];
      if (sigma_contains(lattice, q)) return false;
    }
    std::size_t i = 0;
    while (i < m && eps[i] == 1) eps[i++] = -1;
    if (i == m) break;
    ++eps[i];
  }
  return true;
}

std::optional<CriticalPoint> verify_critical(const LatticeBasis& lattice, const RationalPoint& c) {
  NearestPoint h = h_distance(lattice, c);
  if (h.distance == 0) return std::nullopt;
  const std::size_t m = c.size();
  RationalPoint corner = c;
  for (std::size_t i = 0; i < m; ++i) corner[i] -= h.distance;
  Divisor lo = Divisor::zero(m);
  for (std::size_t i = 0; i < m; ++i) lo[i] = ceil(corner[i]);
  Divisor hi = Divisor::zero(m);
  const Rational n(static_cast<long long>(m - 1));
  for (std::size_t i = 0; i < m; ++i) hi[i] = floor(c[i] + n * h.distance);

  std::vector<std::optional<Divisor>> wit(m);
  for_each_lattice_point(lattice, {lo, hi}, [&](const Divisor& p) {
    std::size_t tight = m, count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (Rational(p[i]) == corner[i]) {
        tight = i;
        ++count;
      }
    }
    if (count == 1 && (!wit[tight] || p < *wit[tight])) wit[tight] = p;
    return true;
  });
  CriticalPoint cp{c, h.distance, {}};
  for (auto& w : wit) {
    if (!w) return std::nullopt;
    cp.witnesses.push_back(*w);
  }
  return cp;
}

Rational covering_number(const ExtremalSet& ext) {
  Integer n = static_cast<long long>(ext.ambient_dim - 1);
  return Rational(ext.g_max + n, n + 1);
}

namespace {

// Reorders q so that row i is the only one positive at i, if q is a digraph
// Laplacian up to the order of its rows.
std::optional<std::vector<Divisor>> as_digraph_laplacian(const std::vector<Divisor>& q) {
  std::vector<std::optional<Divisor>> rows(q.size());
  for (const auto& r : q) {
    std::optional<std::size_t> pos;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j] > 0) {
        if (pos) return std::nullopt;
        pos = j;
      }
    }
    if (!pos || rows[*pos] || degree(r) != 0) return std::nullopt;
    rows[*pos] = r;
  }
  std::vector<Divisor> out;
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

}  // namespace

std::vector<RationalPoint> critical_vertices_of_origin(const LatticeBasis& lattice,
                                                       const ExtremalSet& ext,
                                                       const std::vector<Divisor>& generators) {
  const std::size_t m = lattice.ambient_dim();
  if (generators.size() != m) throw InvalidInput("expected n+1 generators");
  LatticeBasis gen(std::vector<Divisor>(generators.begin(), generators.end() - 1));
  if (!gen.same_lattice(lattice)) throw InvalidInput("generators do not span the lattice");

  std::set<RationalPoint> out;
  const Divisor one = Divisor::ones(m);
  auto q = as_digraph_laplacian(generators);
  if (!q) {
    // Literal reading: every critical point with O among its nearest points.
    for (const auto& nu : ext.representatives) {
      Divisor x = nu - one;
      RationalPoint base = project_H0(x);
      for_each_lattice_point(lattice, dominating_box(x), [&](const Divisor& p) {
        for (std::size_t i = 0; i < m; ++i) {
          if (p[i] == x[i]) {
            out.insert(base - RationalPoint(p));
            break;
          }
        }
        return true;
      });
    }
    return {out.begin(), out.end()};
  }

  // Simplices conv(B^pi) of the Laplacian triangulation meeting O.  Where
  // off-diagonal entries vanish a critical point has extra tight neighbours;
  // the triangulation keeps the ones surviving a small positive perturbation.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<Divisor> b{Divisor::zero(m)};
    for (std::size_t k = 0; k + 1 < m; ++k) b.push_back(b.back() + (*q)[order[k]]);
    Divisor nu = b.front();
    for (const auto& p : b)
      for (std::size_t j = 0; j < m; ++j) nu[j] = std::min(nu[j], p[j]);
    if (!is_extremal(lattice, nu + one)) continue;
    RationalPoint c = project_H0(nu);
    for (const auto& p : b) out.insert(c - RationalPoint(p));
  } while (std::next_permutation(order.begin(), order.end()));
  return {out.begin(), out.end()};
}

std::vector<RationalPoint> critical_vertices_of_origin(const LatticeBasis& lattice,
                                                       const ExtremalSet& ext) {
  auto gens = lattice.rows();
  Divisor last = Divisor::zero(lattice.ambient_dim());
  for (const auto& r : gens) last = last - r;
  gens.push_back(last);
  return critical_vertices_of_origin(lattice, ext, gens);
}

Rational critical_distance(const LatticeBasis& lattice, const ExtremalSet& ext,
                           const RationalPoint& x) {
  const Divisor one = Divisor::ones(lattice.ambient_dim());
  std::optional<Rational> best;
  for (const auto& nu : ext.representatives) {
    Rational d = h_distance(lattice, project_H0(nu - one) - x).distance;
    if (!best || d < *best) best = d;
  }
  if (!best) throw InvalidInput("empty extremal set");
  return *best;
}

DualityReport duality_probe(const LatticeBasis& lattice, const ExtremalSet& ext, const Rational& t,
                            const std::vector<RationalPoint>& samples) {
  DualityReport rep;
  rep.t = t;
  rep.cov = covering_number(ext);
  if (t < 0 || t > rep.cov) throw InvalidInput("t must lie in [0, Cov]");
  for (const auto& x : samples) {
    DualitySample s;
    s.x = x;
    s.lattice_distance = h_distance(lattice, x).distance;
    s.critical_distance = critical_distance(lattice, ext, x);
    s.in_b = s.lattice_distance <= t;
    s.in_a = s.critical_distance <= rep.cov - t;
    s.interior_overlap = s.lattice_distance < t && s.critical_distance < rep.cov - t;
    s.uncovered = !s.in_a && !s.in_b;
    s.identity = s.lattice_distance + s.critical_distance == rep.cov;
    if (s.interior_overlap) ++rep.overlaps;
    if (s.uncovered) ++rep.uncovered;
    if (!s.identity) ++rep.identity_failures;
    rep.samples.push_back(std::move(s));
  }
  return rep;
}

}  // namespace rrlat
