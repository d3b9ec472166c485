#include "rrlat/a2.hpp"

#include <array>
#include <stdexcept>

#include "rrlat/extremal.hpp"
#include "rrlat/geometry.hpp"

namespace rrlat {

namespace {

void require_a2(const LatticeBasis& lattice) {
  if (lattice.ambient_dim() != 3) throw InvalidInput("expected a sub-lattice of A_2");
}

Integer dot(const Divisor& a, const Divisor& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Lagrange-Gauss reduction: |b0| <= |b1| and 2|<b0,b1>| <= |b0|^2.
std::pair<Divisor, Divisor> gauss_reduce(Divisor a, Divisor b) {
  if (dot(a, a) > dot(b, b)) std::swap(a, b);
  for (;;) {
    Integer na = dot(a, a);
    Integer q = floor_div(2 * dot(a, b) + na, 2 * na);
    b -= a * q;
    if (dot(b, b) >= na) return {a, b};
    std::swap(a, b);
  }
}

}  // namespace

Integer cone_functional(std::size_t i, const Divisor& u) {
  if (u.size() != 3 || i > 2) throw InvalidInput("cone functionals live on A_2");
  Integer s = 0;
  for (std::size_t j = 0; j < 3; ++j) s += (j == i ? 2 : -1) * u[j];
  return s;
}

bool in_cone(std::size_t i, const Divisor& u) {
  if (cone_functional(i, u) < 0) return false;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j != i && cone_functional(j, u) > 0) return false;
  }
  return true;
}

std::optional<std::size_t> cone_of(const Divisor& u) {
  if (u == Divisor::zero(u.size())) return std::nullopt;
  for (std::size_t i = 0; i < 3; ++i) if (in_cone(i, u)) return i;
  return std::nullopt;
}

DigraphBasis digraph_basis(const LatticeBasis& lattice) {
  require_a2(lattice);
  auto [u, v] = gauss_reduce(lattice.rows()[0], lattice.rows()[1]);
  if (!cone_of(u)) u = -u;
  std::size_t i = *cone_of(u);
  if (!cone_of(v) || *cone_of(v) == i) v = -v;
  if (!cone_of(v) || *cone_of(v) == i) throw std::logic_error("reduced basis vectors share a cone");
  std::size_t j = *cone_of(v);
  std::size_t k = 3 - i - j;

  std::array<Divisor, 3> b;
  b[i] = u;
  b[j] = v;
  std::size_t steps = 0;
  for (;; ++steps) {
    if (steps > 1000000) throw std::logic_error("digraph basis procedure did not terminate");
    Divisor s = b[i] + b[j];
    if (in_cone(k, -s)) break;
    if (in_cone(i, s)) b[i] = s;
    else if (in_cone(j, s)) b[j] = s;
    else throw std::logic_error("digraph basis: b_i + b_j escaped all cones");
  }
  b[k] = -(b[i] + b[j]);
  return {b[0], b[1], b[2], steps};
}

std::vector<DigraphBasis> digraph_bases(const LatticeBasis& lattice) {
  require_a2(lattice);
  const Integer pic = picard_cardinality(lattice);
  // b_i = (w + w') e_i - w e_j - w' e_k with w, w' in [0, |Pic|].
  auto cone_points = [&](std::size_t i) {
    std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    std::vector<Divisor> out;
    for (Integer a = 0; a <= pic; ++a) {
      for (Integer b = 0; b <= pic; ++b) {
        if (a == 0 && b == 0) continue;
        Divisor u = Divisor::zero(3);
        u[i] = a + b;
        u[j] = -a;
        u[k] = -b;
        if (lattice.contains(u)) out.push_back(std::move(u));
      }
    }
    return out;
  };
  auto c0 = cone_points(0), c1 = cone_points(1);
  std::vector<DigraphBasis> out;
  for (const auto& b0 : c0) {
    for (const auto& b1 : c1) {
      Integer det = b0[0] * b1[1] - b0[1] * b1[0];
      if (det != pic && det != -pic) continue;
      Divisor b2 = -(b0 + b1);
      if (!in_cone(2, b2)) continue;
      out.push_back({b0, b1, b2, 0});
    }
  }
  return out;
}

A2Classification classify_a2(const LatticeBasis& lattice) {
  require_a2(lattice);
  DigraphBasis db = digraph_basis(lattice);
  auto q = db.laplacian();
  Permutation pi = Permutation::identity(3);
  const Divisor one = Divisor::ones(3);
  std::vector<Divisor> cand;
  for (const auto& p : {pi, pi.opposite()}) {
    Divisor v = nu_of_permutation(q, p) + one;
    if (is_extremal(lattice, v)) cand.push_back(v);
  }
  ExtremalSet ext = make_extremal_set(lattice, cand);

  A2Classification c;
  c.critical_classes = ext.class_count();
  Integer pic = picard_cardinality(lattice);
  for (std::size_t center = 0; center < 3 && !c.multi_tree; ++center) {
    std::vector<Divisor> spokes;
    for (std::size_t leaf = 0; leaf < 3; ++leaf) {
      if (leaf == center) continue;
      Divisor dir = Divisor::zero(3);
      dir[leaf] = 1;
      dir[center] = -1;
      for (Integer t = 1; t <= pic; ++t) {
        if (lattice.contains(dir * t)) {
          spokes.push_back(dir * t);
          break;
        }
      }
    }
    if (spokes.size() == 2 && lattice.same_lattice(LatticeBasis(spokes))) c.multi_tree = true;
  }
  c.strong = c.critical_classes == 2 || c.multi_tree;
  return c;
}

LatticeBasis extend_family(const LatticeBasis& lattice) {
  const std::size_t m = lattice.ambient_dim();
  std::vector<Divisor> rows;
  for (const auto& r : lattice.rows()) {
    std::vector<Integer> c = r.coords();
    c.push_back(0);
    rows.emplace_back(std::move(c));
  }
  Divisor last = Divisor::zero(m + 1);
  last[m - 1] = -1;
  last[m] = 1;
  rows.push_back(std::move(last));
  return LatticeBasis(std::move(rows));
}

Divisor restrict_divisor(const Divisor& d) {
  const std::size_t m = d.size() - 1;
  if (m < 2) throw InvalidInput("divisor too short to restrict");
  std::vector<Integer> c(d.coords().begin(), d.coords().end() - 1);
  // D - D_{n+1} b_n with b_n = (0,...,0,-1,1): coordinate n gains D_{n+1}.
  c[m - 1] += d[m];
  return Divisor(std::move(c));
}

LatticeBasis random_a2_lattice(Rng& rng, std::int64_t bound) {
  for (;;) {
    std::vector<Divisor> rows;
    for (int r = 0; r < 2; ++r) {
      std::int64_t x = uniform_int(rng, -bound, bound);
      std::int64_t lo = std::max(-bound, -bound - x);
      std::int64_t hi = std::min(bound, bound - x);
      std::int64_t y = uniform_int(rng, lo, hi);
      rows.push_back(Divisor{x, y, -x - y});
    }
    Integer det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (det != 0) return LatticeBasis(std::move(rows));
  }
}

}  // namespace rrlat
