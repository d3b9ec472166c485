#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rrlat/divisor.hpp"

namespace rrlat {

// One extremal representative per class modulo L.
struct ExtremalSet {
  std::size_t ambient_dim = 0;
  std::vector<Divisor> representatives;
  Integer g_min = 0;
  Integer g_max = 0;
  std::optional<Divisor> reflection_vector;

  std::size_t class_count() const { return representatives.size(); }
  bool uniform() const { return g_min == g_max; }
};

}  // namespace rrlat
