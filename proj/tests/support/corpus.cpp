#include "support/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace rrlat::testing {

Multigraph k3() { return Multigraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}); }

Multigraph weighted_triangle() { return Multigraph(3, {{0, 1, 3}, {0, 2, 2}, {1, 2, 2}}); }

Multigraph path3() { return Multigraph(3, {{0, 1, 1}, {1, 2, 1}}); }

Multigraph complete(std::size_t vertices) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices; ++i) {
    for (std::size_t j = i + 1; j < vertices; ++j) e.emplace_back(i, j, 1);
  }
  return Multigraph(vertices, e);
}

namespace {

bool connected(std::size_t v, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = v;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!(mask >> k & 1)) continue;
    auto a = find(pairs[k].first), b = find(pairs[k].second);
    if (a != b) parent[a] = b, --comps;
  }
  return comps == 1;
}

std::uint32_t canonical_mask(std::size_t v, std::uint32_t mask,
                             const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<int>> index(v, std::vector<int>(v, -1));
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    index[pairs[k].first][pairs[k].second] = index[pairs[k].second][pairs[k].first] =
        static_cast<int>(k);
  }
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~0u;
  do {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1) m |= 1u << index[perm[pairs[k].first]][perm[pairs[k].second]];
    }
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<NamedGraph> connected_simple_graphs(std::size_t max_vertices) {
  std::vector<NamedGraph> out;
  for (std::size_t v = 2; v <= max_vertices; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) pairs.emplace_back(i, j);
    }
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      if (!connected(v, mask, pairs)) continue;
      if (!seen.insert(canonical_mask(v, mask, pairs)).second) continue;
      std::vector<Edge> e;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1) e.emplace_back(pairs[k].first, pairs[k].second, 1);
      }
      out.push_back({"simple" + std::to_string(v) + "_" + std::to_string(mask), Multigraph(v, e)});
    }
  }
  return out;
}

std::vector<NamedGraph> random_multigraphs(std::size_t count, std::size_t max_vertices,
                                           std::size_t max_edges, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<NamedGraph> out;
  while (out.size() < count) {
    auto v = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long long>(max_vertices)));
    auto m = static_cast<std::size_t>(
        uniform_int(rng, static_cast<long long>(v - 1), static_cast<long long>(max_edges)));
    std::vector<std::vector<std::int64_t>> mult(v, std::vector<std::int64_t>(v, 0));
    // random spanning tree first, then extra edges
    for (std::size_t i = 1; i < v; ++i) {
      auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(i - 1)));
      ++mult[j][i];
    }
    for (std::size_t k = v - 1; k < m; ++k) {
      auto a = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(v - 1)));
      auto b = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(v - 2)));
      if (b >= a) ++b;
      ++mult[std::min(a, b)][std::max(a, b)];
    }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = i + 1; j < v; ++j) {
        if (mult[i][j] > 0) e.emplace_back(i, j, mult[i][j]);
      }
    }
    out.push_back({"multi" + std::to_string(out.size()), Multigraph(v, e)});
  }
  return out;
}

std::vector<NamedGraph> graph_corpus() {
  auto out = connected_simple_graphs(5);
  auto extra = random_multigraphs(20, 4, 10, 20240917);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

LatticeBasis random_lattice(Rng& rng, std::size_t n, std::int64_t bound) {
  for (;;) {
    std::vector<Divisor> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Divisor r = Divisor::zero(n + 1);
      Integer sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        r[j] = uniform_int(rng, -bound, bound);
        sum += r[j];
      }
      r[n] = -sum;
      rows.push_back(r);
    }
    bool in_range = true;
    for (auto& r : rows) in_range = in_range && r[n] >= -bound && r[n] <= bound;
    if (!in_range) continue;
    Matrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    }
    if (determinant(m) != 0) return LatticeBasis(rows);
  }
}

LatticeBasis a2_example() { return LatticeBasis({Divisor{7, -7, 0}, Divisor{-3, 11, -8}}); }

LatticeBasis family_l2() { return LatticeBasis({Divisor{2, -2, 0}, Divisor{-1, 3, -2}}); }

}  // namespace rrlat::testing
