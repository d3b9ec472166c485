#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/extremal_set.hpp"
#include "rrlat/lattice.hpp"

namespace rrlat {

// up: the simplex conv{b_i} with (b_i)_j = n if i = j else -1.
// down: its negative.
enum class Orientation { up, down };

struct SimplexBall {
  RationalPoint center;
  Rational radius;
  Orientation orientation = Orientation::up;

  SimplexBall(RationalPoint c, Rational r, Orientation o = Orientation::up);
  bool contains(const RationalPoint& x) const;
  std::vector<RationalPoint> vertices() const;
};

// up:   max_i (p_i - q_i) = |min_i (q_i - p_i)|
// down: max_i (q_i - p_i) = |min_i (p_i - q_i)|
// Both points must have the same degree.
Rational simplicial_distance(const RationalPoint& p, const RationalPoint& q,
                             Orientation o = Orientation::up);
Integer simplicial_distance(const Divisor& p, const Divisor& q, Orientation o = Orientation::up);

struct NearestPoint {
  Rational distance;
  Divisor nearest;  // lexicographically smallest among minimizers
};

// min over p in L of d_up(x, p); x must have degree 0.
NearestPoint h_distance(const LatticeBasis& lattice, const RationalPoint& x);

// No lattice point p with p >= D.
bool sigma_contains(const LatticeBasis& lattice, const Divisor& d);
// No lattice point p with p > D strictly.
bool closed_sigma_contains(const LatticeBasis& lattice, const Divisor& d);
bool is_extremal(const LatticeBasis& lattice, const Divisor& v);

struct CriticalPoint {
  RationalPoint location;
  Rational h_value;
  std::vector<Divisor> witnesses;  // witnesses[i] is tight at coordinate i only
};

std::optional<CriticalPoint> verify_critical(const LatticeBasis& lattice, const RationalPoint& c);

Rational covering_number(const ExtremalSet& ext);

// Critical vertices of the Voronoi cell of O.  Sorted, without duplicates.
// `generators` are n+1 vectors summing to O that span the lattice.  When they
// form a digraph Laplacian the cell is read off the simplices conv(B^pi);
// otherwise every critical point with O among its nearest points is kept.
std::vector<RationalPoint> critical_vertices_of_origin(const LatticeBasis& lattice,
                                                       const ExtremalSet& ext,
                                                       const std::vector<Divisor>& generators);
// Uses lattice.rows() completed by minus their sum.
std::vector<RationalPoint> critical_vertices_of_origin(const LatticeBasis& lattice,
                                                       const ExtremalSet& ext);

// min over critical points c of d_up(c, x).
Rational critical_distance(const LatticeBasis& lattice, const ExtremalSet& ext,
                           const RationalPoint& x);

struct DualitySample {
  RationalPoint x;
  Rational lattice_distance;   // h(x)
  Rational critical_distance;  // distance from Crit(L) to x
  bool in_b = false;           // h(x) <= t
  bool in_a = false;           // critical distance <= Cov - t
  bool interior_overlap = false;
  bool uncovered = false;
  bool identity = false;       // h(x) + critical distance = Cov
};

struct DualityReport {
  Rational t;
  Rational cov;
  std::vector<DualitySample> samples;
  std::size_t overlaps = 0;
  std::size_t uncovered = 0;
  std::size_t identity_failures = 0;
  bool ok() const { return overlaps == 0 && uncovered == 0; }
};

DualityReport duality_probe(const LatticeBasis& lattice, const ExtremalSet& ext, const Rational& t,
                            const std::vector<RationalPoint>& samples);

struct RenderLayers {
  bool lattice = true;
  bool critical = true;
  bool voronoi = true;
  std::optional<Rational> arrangement_t;
};

// SVG picture of an A_2 sub-lattice.  radius bounds |x_i| of drawn points.
std::string svg_render_2d(const LatticeBasis& lattice, const ExtremalSet& ext,
                          const RenderLayers& layers, const Integer& radius);

}  // namespace rrlat
