#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/lattice.hpp"

namespace rrlat {

// g_i(u) = <e_i, u> with e_0 = (2,-1,-1), e_1 = (-1,2,-1), e_2 = (-1,-1,2).
Integer cone_functional(std::size_t i, const Divisor& u);
// C_i: g_i(u) >= 0 and g_j(u) <= 0 for j != i.
bool in_cone(std::size_t i, const Divisor& u);
// The positive cone containing u (u != 0); the cones meet only at O.
std::optional<std::size_t> cone_of(const Divisor& u);

// Lattice vectors with b_i in C_i, b0 + b1 + b2 = 0 and {b0, b1} a basis:
// the rows of a regular digraph Laplacian.
struct DigraphBasis {
  Divisor b0, b1, b2;
  std::size_t steps = 0;
  std::vector<Divisor> laplacian() const { return {b0, b1, b2}; }
};

DigraphBasis digraph_basis(const LatticeBasis& lattice);
// Every such triple.  Off-diagonal weights are bounded by |A_2 / L|, so the
// search is finite; several triples exist only when some weight vanishes.
std::vector<DigraphBasis> digraph_bases(const LatticeBasis& lattice);

struct A2Classification {
  bool strong = false;
  std::size_t critical_classes = 0;
  bool multi_tree = false;
};

A2Classification classify_a2(const LatticeBasis& lattice);

// Rows padded with a trailing 0, plus (0,...,0,-1,1).
LatticeBasis extend_family(const LatticeBasis& lattice);
// Divisor of L_{n+1} mapped to L_n: (D - D_{n+1} b_n) restricted to the
// first n+1 coordinates, where b_n = (0,...,0,-1,1).
Divisor restrict_divisor(const Divisor& d);

// Full-rank sub-lattice of A_2 with entries in [-bound, bound].
LatticeBasis random_a2_lattice(Rng& rng, std::int64_t bound = 12);

}  // namespace rrlat
