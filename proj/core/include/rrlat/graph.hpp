#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/lattice.hpp"

namespace rrlat {

using Edge = std::tuple<std::size_t, std::size_t, std::int64_t>;

// Connected loopless multigraph on vertices 0..n.
class Multigraph {
 public:
  Multigraph(std::size_t vertices, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return mult_.size(); }
  std::int64_t mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
  std::int64_t degree(std::size_t v) const;
  std::int64_t edge_count() const;
  // m - n
  std::int64_t genus() const;
  std::vector<Edge> edges() const;

 private:
  std::vector<std::vector<std::int64_t>> mult_;
};

// Directed multigraph with in-degree = out-degree everywhere and connected
// underlying graph.  arc(i, j) counts arcs i -> j.
class RegularDigraph {
 public:
  RegularDigraph(std::size_t vertices, const std::vector<Edge>& arcs);
  explicit RegularDigraph(const Multigraph& g);

  std::size_t vertex_count() const { return arc_.size(); }
  std::int64_t arc(std::size_t i, std::size_t j) const { return arc_[i][j]; }
  std::int64_t out_degree(std::size_t v) const;
  std::int64_t arc_count() const;
  std::vector<Edge> arcs() const;

 private:
  std::vector<std::vector<std::int64_t>> arc_;
};

// All n+1 rows of the Laplacian Q; row i is deg(i) e_i - sum_j b_ij e_j.
std::vector<Divisor> laplacian_matrix(const Multigraph& g);
std::vector<Divisor> laplacian_matrix(const RegularDigraph& g);
// First n rows.
LatticeBasis laplacian_lattice(const Multigraph& g);
LatticeBasis laplacian_lattice(const RegularDigraph& g);

Divisor canonical_divisor(const Multigraph& g);
Integer spanning_tree_count(const Multigraph& g);
Integer acyclic_orientations_unique_source(const Multigraph& g, std::size_t source);
// Total orders of the vertices modulo rotation and swaps of consecutive
// non-adjacent vertices.
Integer cyclic_order_count(const Multigraph& g);

// {"vertices": k, "edges": [[i, j, mult], ...]} or lines "i j mult".
Multigraph parse_graph(std::string_view text);
RegularDigraph parse_digraph(std::string_view text);
std::string graph_to_json(const Multigraph& g);

}  // namespace rrlat
