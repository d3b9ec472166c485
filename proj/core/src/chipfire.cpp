#include "rrlat/chipfire.hpp"

#include <algorithm>

#include "rrlat/rank.hpp"

namespace rrlat {

Configuration::Configuration(Divisor c, std::shared_ptr<const Multigraph> g)
    : chips(std::move(c)), graph(std::move(g)) {
  if (!graph) throw InvalidInput("configuration needs a graph");
  if (chips.size() != graph->vertex_count()) throw InvalidInput("configuration length mismatch");
}

Configuration fire(const Configuration& cfg, std::size_t v) {
  const auto& g = *cfg.graph;
  if (v >= g.vertex_count()) throw InvalidInput("vertex out of range");
  Divisor c = cfg.chips;
  c[v] -= g.degree(v);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (u != v) c[u] += g.mult(u, v);
  }
  return {std::move(c), cfg.graph};
}

Configuration fire_script(const Configuration& cfg, const std::vector<std::size_t>& script) {
  Configuration c = cfg;
  for (std::size_t v : script) c = fire(c, v);
  return c;
}

Winnability winnable(const Configuration& cfg, std::size_t script_budget) {
  LatticeBasis lattice = laplacian_lattice(*cfg.graph);
  LinearSystem ls = linear_system_nonempty(lattice, cfg.chips);
  Winnability w;
  if (!ls.nonempty) return w;
  w.winnable = true;
  w.target = ls.witness;
  // chips - target = sum_i c_i row_i(Q) over the first n rows; firing i
  // subtracts row_i(Q), and the all-ones kernel lets us shift c to c >= 0.
  auto coeffs = lattice.coefficients(cfg.chips - *ls.witness);
  if (!coeffs) throw std::logic_error("winnable: difference left the lattice");
  std::vector<Integer> c = *coeffs;
  c.push_back(0);
  Integer low = *std::min_element(c.begin(), c.end());
  Integer total = 0;
  for (auto& x : c) {
    x -= low;
    total += x;
  }
  if (total > script_budget) return w;
  std::vector<std::size_t> script;
  for (std::size_t v = 0; v < c.size(); ++v) {
    for (Integer k = 0; k < c[v]; ++k) script.push_back(v);
  }
  w.script = std::move(script);
  return w;
}

Configuration kc_minus(const Configuration& cfg) {
  return {canonical_divisor(*cfg.graph) - cfg.chips, cfg.graph};
}

}  // namespace rrlat
