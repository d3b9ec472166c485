#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/extremal_set.hpp"
#include "rrlat/graph.hpp"
#include "rrlat/lattice.hpp"

namespace rrlat {

// Total order on {0..n}: order()[0] is the smallest vertex.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> order);
  static Permutation identity(std::size_t size);
  // All (size)! orders, lexicographic.
  static std::vector<Permutation> all(std::size_t size);

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  const std::vector<std::size_t>& order() const { return order_; }

  // Full reversal of the order.
  Permutation reversed() const;
  // For orders ending in n: reverse the first n entries, keep n last.
  Permutation opposite() const;
  // Move the smallest element to the top.
  Permutation rotated() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> order_;
};

// Tropical sum (coordinate-wise minimum) of the partial sums
// q[pi(0)], q[pi(0)] + q[pi(1)], ..., of the Laplacian rows.
Divisor nu_of_permutation(const std::vector<Divisor>& laplacian, const Permutation& pi);

// Canonical representatives modulo L, sorted; g_min/g_max from degrees.
ExtremalSet make_extremal_set(const LatticeBasis& lattice, std::vector<Divisor> candidates);

// nu^pi + (1,...,1) over all orders, deduplicated modulo L.  With certify,
// each representative is checked with is_extremal.
ExtremalSet extremal_set_graphical(const Multigraph& g, bool certify = true);
// Same candidates for a digraph Laplacian; candidates failing is_extremal are
// dropped.  Complete only when all off-diagonal entries are positive.
ExtremalSet extremal_set_laplacian(const std::vector<Divisor>& laplacian);
// Exhaustive scan of one fundamental domain; any full-rank lattice.
ExtremalSet extremal_set_general(const LatticeBasis& lattice);

struct Classification {
  bool uniform = false;
  bool reflection_invariant = false;
  bool strongly_reflection_invariant = false;
  // T with -Crit(L) = Crit(L) - pi_0(T).
  std::optional<Divisor> t;
};

Classification classify(const ExtremalSet& ext, const LatticeBasis& lattice);

struct CanonicalPoint {
  Divisor k;
  // (nu, phi(nu)) for every representative nu.
  std::vector<std::pair<Divisor, Divisor>> pairing;
  // Every pair satisfies nu + phi(nu) = -K exactly.
  bool exact_pairs = false;
};

// Throws InvalidInput when the lattice is not reflection invariant.
CanonicalPoint canonical_point(const ExtremalSet& ext, const LatticeBasis& lattice);

}  // namespace rrlat
