#include "rrlat/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "rrlat/a2.hpp"
#include "rrlat/geometry.hpp"

namespace rrlat {

namespace {

// Canonical key of w modulo L + Z(1,...,1).
Divisor line_key(const LatticeBasis& lattice, const Divisor& w) {
  const Integer m = static_cast<long long>(w.size());
  Integer k = floor_div(degree(w), m);
  return lattice.reduce(w - Divisor::ones(w.size()) * k);
}

struct Pairing {
  Divisor t_sum;                  // T = nu_a + nu_b for the seed pair
  std::vector<std::size_t> mate;  // partner index per representative
};

std::optional<Pairing> find_pairing(const ExtremalSet& ext, const LatticeBasis& lattice) {
  const auto& reps = ext.representatives;
  if (reps.empty()) return std::nullopt;
  std::map<Divisor, std::size_t> by_key;
  for (std::size_t i = 0; i < reps.size(); ++i) by_key.emplace(line_key(lattice, reps[i]), i);
  for (std::size_t b0 = 0; b0 < reps.size(); ++b0) {
    Divisor t = reps[0] + reps[b0];
    Pairing p{t, std::vector<std::size_t>(reps.size())};
    bool ok = true;
    for (std::size_t a = 0; a < reps.size() && ok; ++a) {
      auto it = by_key.find(line_key(lattice, t - reps[a]));
      if (it == by_key.end()) ok = false;
      else p.mate[a] = it->second;
    }
    if (ok) return p;
  }
  return std::nullopt;
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t v : order_) {
    if (v >= order_.size() || seen[v]) throw InvalidInput("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> o(size);
  std::iota(o.begin(), o.end(), 0);
  return Permutation(std::move(o));
}

std::vector<Permutation> Permutation::all(std::size_t size) {
  std::vector<std::size_t> o(size);
  std::iota(o.begin(), o.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(o);
  } while (std::next_permutation(o.begin(), o.end()));
  return out;
}

Permutation Permutation::reversed() const {
  return Permutation(std::vector<std::size_t>(order_.rbegin(), order_.rend()));
}

Permutation Permutation::opposite() const {
  const std::size_t n = order_.size() - 1;
  if (order_.back() != n) throw InvalidInput("opposite() needs an order ending in n");
  std::vector<std::size_t> o(order_.rbegin() + 1, order_.rend());
  o.push_back(n);
  return Permutation(std::move(o));
}

Permutation Permutation::rotated() const {
  std::vector<std::size_t> o = order_;
  std::rotate(o.begin(), o.begin() + 1, o.end());
  return Permutation(std::move(o));
}

Divisor nu_of_permutation(const std::vector<Divisor>& laplacian, const Permutation& pi) {
  if (laplacian.size() != pi.size()) throw InvalidInput("permutation size mismatch");
  Divisor partial = Divisor::zero(pi.size());
  Divisor nu = partial;
  for (std::size_t k = 0; k < pi.size(); ++k) {
    partial += laplacian[pi[k]];
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (partial[j] < nu[j]) nu[j] = partial[j];
    }
  }
  return nu;
}

ExtremalSet make_extremal_set(const LatticeBasis& lattice, std::vector<Divisor> candidates) {
  std::set<Divisor> reps;
  for (const auto& c : candidates) reps.insert(lattice.reduce(c));
  ExtremalSet ext;
  ext.ambient_dim = lattice.ambient_dim();
  ext.representatives.assign(reps.begin(), reps.end());
  bool first = true;
  for (const auto& r : ext.representatives) {
    Integer g = 1 - degree(r);
    if (first || g < ext.g_min) ext.g_min = g;
    if (first || g > ext.g_max) ext.g_max = g;
    first = false;
  }
  return ext;
}

ExtremalSet extremal_set_graphical(const Multigraph& g, bool certify) {
  if (g.vertex_count() > 7) throw ResourceError("graphical extremal enumeration supports n <= 6");
  auto q = laplacian_matrix(g);
  LatticeBasis lattice = laplacian_lattice(g);
  const Divisor one = Divisor::ones(g.vertex_count());
  std::vector<Divisor> cand;
  for (const auto& pi : Permutation::all(g.vertex_count())) {
    cand.push_back(nu_of_permutation(q, pi) + one);
  }
  ExtremalSet ext = make_extremal_set(lattice, std::move(cand));
  if (certify) {
    for (const auto& r : ext.representatives) {
      if (!is_extremal(lattice, r)) {
        throw std::logic_error("candidate " + to_string(r) + " is not extremal");
      }
    }
  }
  return ext;
}

ExtremalSet extremal_set_laplacian(const std::vector<Divisor>& laplacian) {
  if (laplacian.size() > 7) throw ResourceError("Laplacian extremal enumeration supports n <= 6");
  std::vector<Divisor> rows(laplacian.begin(), laplacian.end() - 1);
  LatticeBasis lattice(rows);
  const Divisor one = Divisor::ones(laplacian.size());
  std::set<Divisor> seen;
  std::vector<Divisor> cand;
  for (const auto& pi : Permutation::all(laplacian.size())) {
    Divisor v = lattice.reduce(nu_of_permutation(laplacian, pi) + one);
    if (!seen.insert(v).second) continue;
    if (is_extremal(lattice, v)) cand.push_back(v);
  }
  return make_extremal_set(lattice, std::move(cand));
}

ExtremalSet extremal_set_general(const LatticeBasis& lattice) {
  const std::size_t n = lattice.rank();
  if (n > 4) throw ResourceError("general extremal scan supports n <= 4");
  Integer cells = picard_cardinality(lattice);
  if (cells > 200000) throw ResourceError("fundamental domain too large for the extremal scan");
  const auto& h = lattice.hermite_rows();
  std::vector<Integer> y(n, 0);
  std::vector<Divisor> found;
  for (;;) {
    Divisor d = Divisor::zero(n + 1);
    Integer s = 0;
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = y[k];
      s += y[k];
    }
    // Smallest last coordinate z with (y, z) in Sigma.  Sigma is closed
    // upwards and bounded below in degree.
    Integer hi = 1 - s;  // degree 1: always in Sigma
    Integer step = 1;
    Integer lo;
    for (;;) {
      lo = hi - step;
      d[n] = lo;
      if (!sigma_contains(lattice, d)) break;
      hi = lo;
      step *= 2;
      if (step > (Integer(1) << 40)) throw ResourceError("Sigma region not bounded below?");
    }
    while (hi - lo > 1) {
      Integer mid = floor_div(lo + hi, 2);
      d[n] = mid;
      if (sigma_contains(lattice, d)) hi = mid;
      else lo = mid;
    }
    d[n] = hi;
    if (is_extremal(lattice, d)) found.push_back(d);

    std::size_t k = 0;
    while (k < n && ++y[k] == h[k][k]) y[k++] = 0;
    if (k == n) break;
  }
  return make_extremal_set(lattice, std::move(found));
}

namespace {

// -V = V + t for some t.
bool centrally_symmetric(const std::vector<RationalPoint>& verts) {
  if (verts.empty()) return false;
  std::set<RationalPoint> vs(verts.begin(), verts.end());
  for (const auto& s : verts) {
    RationalPoint t = -(verts.front() + s);
    bool ok = true;
    for (const auto& v : verts) {
      if (!vs.count(-v - t)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

Classification classify(const ExtremalSet& ext, const LatticeBasis& lattice) {
  Classification c;
  c.uniform = ext.uniform();
  auto pairing = find_pairing(ext, lattice);
  c.reflection_invariant = pairing.has_value();
  if (pairing) c.t = pairing->t_sum;

  // Where Laplacian weights vanish, Crit V(O) depends on the triangulation;
  // in A_2 every regular-digraph basis is tried.
  std::vector<std::vector<RationalPoint>> cells;
  if (lattice.ambient_dim() == 3) {
    for (const auto& b : digraph_bases(lattice))
      cells.push_back(critical_vertices_of_origin(lattice, ext, b.laplacian()));
  } else {
    cells.push_back(critical_vertices_of_origin(lattice, ext));
  }
  for (const auto& verts : cells) {
    if (centrally_symmetric(verts)) {
      c.strongly_reflection_invariant = true;
      break;
    }
  }
  return c;
}

CanonicalPoint canonical_point(const ExtremalSet& ext, const LatticeBasis& lattice) {
  auto pairing = find_pairing(ext, lattice);
  if (!pairing) throw InvalidInput("lattice is not reflection invariant");
  const auto& reps = ext.representatives;
  const Integer m = static_cast<long long>(lattice.ambient_dim());
  CanonicalPoint cp;
  std::optional<std::size_t> best;
  std::set<Integer> sums;
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const Divisor& b = reps[pairing->mate[a]];
    Divisor w = pairing->t_sum - reps[a] - b;
    Integer j = -degree(w) / m;  // degree(w) is a multiple of n+1
    Divisor p = w + Divisor::ones(w.size()) * j;
    Divisor phi = b + p;
    cp.pairing.emplace_back(reps[a], phi);
    Integer deg = degree(reps[a] + phi);
    sums.insert(deg);
    if (!best || deg > degree(cp.pairing[*best].first + cp.pairing[*best].second)) best = a;
  }
  cp.k = -(cp.pairing[*best].first + cp.pairing[*best].second);
  cp.exact_pairs = sums.size() == 1;
  return cp;
}

}  // namespace rrlat
