#pragma once

#include <cstddef>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/lattice.hpp"

namespace rrlat {

// n+1 affinely independent vertices in Q^n.
struct RationalSimplex {
  std::vector<std::vector<Rational>> vertices;

  explicit RationalSimplex(std::vector<std::vector<Rational>> v);
  std::size_t dimension() const { return vertices.size() - 1; }
  bool contains(const std::vector<Rational>& z) const;
};

struct MembershipInstance {
  LatticeBasis lattice;
  Divisor d;
  Integer scale;     // N
  RationalPoint x;   // image of the centroid, in H0
};

// S contains an integer point iff D is not in Sigma(L).
MembershipInstance reduce_simplex_to_membership(const RationalSimplex& s);

// Bounding-box scan; ResourceError beyond max_points candidates.
bool simplex_has_integer_point(const RationalSimplex& s, std::size_t max_points = 10000000);

using RationalMatrix = std::vector<std::vector<Rational>>;
// Throws InvalidInput when singular.
RationalMatrix inverse(RationalMatrix a);

}  // namespace rrlat
