#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "rrlat/divisor.hpp"
#include "rrlat/graph.hpp"

namespace rrlat {

struct Configuration {
  Divisor chips;
  std::shared_ptr<const Multigraph> graph;

  Configuration(Divisor c, std::shared_ptr<const Multigraph> g);
};

// v sends one chip along each incident edge (debt allowed).
Configuration fire(const Configuration& cfg, std::size_t v);
Configuration fire_script(const Configuration& cfg, const std::vector<std::size_t>& script);

struct Winnability {
  bool winnable = false;
  std::optional<Divisor> target;                   // effective configuration reached
  std::optional<std::vector<std::size_t>> script;  // vertex indices, in firing order
};

// Decided by the linear system of the divisor.  Scripts longer than
// script_budget firings are omitted; the target is still reported.
Winnability winnable(const Configuration& cfg, std::size_t script_budget = 100000);

// K - C with K the canonical divisor.
Configuration kc_minus(const Configuration& cfg);

}  // namespace rrlat
