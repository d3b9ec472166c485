#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rrlat/extremal.hpp"
#include "rrlat/rank.hpp"
#include "rrlat/reduction.hpp"

namespace rrlat {

// Compact, key-ordered JSON.  Integers beyond 64 bits are emitted as strings.
std::string extremal_to_json(const ExtremalSet& ext, const Classification* cls = nullptr,
                             const CanonicalPoint* canonical = nullptr);
std::string report_to_json(const RrReport& rep);
std::string report_to_json(const WeakRrReport& rep);
std::string script_to_json(const std::vector<std::size_t>& script);

// [[v00, v01, ...], ...] where each entry is an integer, a "p/q" string or a
// [p, q] pair.
RationalSimplex parse_simplex_json(std::string_view text);

}  // namespace rrlat
