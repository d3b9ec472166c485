#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/numeric.hpp"

namespace rrlat {

struct LatticeBox {
  Divisor lower;
  Divisor upper;
};

// Full-rank sub-lattice of A_n given by n rows of length n+1.
//
// The Hermite normal form is computed on construction from the first n
// coordinates (projection A_n -> Z^n dropping the last coordinate is an
// isomorphism), and kept as full rows of length n+1.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::vector<Divisor> rows);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return rows_.size() + 1; }
  const std::vector<Divisor>& rows() const { return rows_; }
  // Upper triangular in the first n coordinates, positive pivots, entries
  // above a pivot reduced into [0, pivot).
  const std::vector<Divisor>& hermite_rows() const { return hermite_; }

  bool contains(const Divisor& v) const;
  bool contains(const RationalPoint& v) const;
  // Integer coefficients with respect to rows(), if v is in the lattice.
  std::optional<std::vector<Integer>> coefficients(const Divisor& v) const;
  Divisor combination(const std::vector<Integer>& coeffs) const;
  // Canonical representative of v + L: first n coordinates reduced into
  // [0, pivot_k).
  Divisor reduce(const Divisor& v) const;
  bool same_lattice(const LatticeBasis& other) const;

 private:
  std::optional<std::vector<Integer>> hermite_coefficients(const Divisor& v) const;

  std::vector<Divisor> rows_;
  std::vector<Divisor> hermite_;
  Matrix transform_;  // hermite_ = transform_ * rows_
};

bool lattice_contains(const LatticeBasis& lattice, const Divisor& v);

// |A_n / L|.
Integer picard_cardinality(const LatticeBasis& lattice);
// Smith normal form diagonal of the rows in the basis {e_i - e_{i+1}}.
std::vector<Integer> picard_invariant_factors(const LatticeBasis& lattice);

// Visits every lattice point in the box exactly once.  The visitor returns
// false to stop early; the function then returns false.
bool for_each_lattice_point(const LatticeBasis& lattice, const LatticeBox& box,
                            const std::function<bool(const Divisor&)>& visit);
std::vector<Divisor> enumerate_lattice_points(const LatticeBasis& lattice,
                                              const LatticeBox& box);

// Text format: first line n+1, then n rows.
LatticeBasis parse_lattice(std::string_view text);
std::string format_lattice(const LatticeBasis& lattice);

}  // namespace rrlat
