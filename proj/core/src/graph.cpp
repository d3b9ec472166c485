#include "rrlat/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace rrlat {

namespace {

using Adj = std::vector<std::vector<std::int64_t>>;

Adj build(std::size_t vertices, const std::vector<Edge>& edges, bool symmetric) {
  if (vertices < 2) throw InvalidInput("graph needs at least 2 vertices");
  Adj a(vertices, std::vector<std::int64_t>(vertices, 0));
  for (const auto& [i, j, m] : edges) {
    if (i >= vertices || j >= vertices) throw InvalidInput("edge endpoint out of range");
    if (i == j) throw InvalidInput("loops are not allowed");
    if (m < 0) throw InvalidInput("negative edge multiplicity");
    a[i][j] += m;
    if (symmetric) a[j][i] += m;
  }
  return a;
}

bool connected(const Adj& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < n; ++u) {
      if (!seen[u] && (a[v][u] > 0 || a[u][v] > 0)) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

std::vector<Divisor> laplacian_of(const Adj& a) {
  const std::size_t n = a.size();
  std::vector<Divisor> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> r(n, 0);
    std::int64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      r[j] = -a[i][j];
      d += a[i][j];
    }
    r[i] = d;
    rows.emplace_back(std::move(r));
  }
  return rows;
}

std::vector<Edge> parse_edges(std::string_view text, std::size_t& vertices) {
  std::vector<Edge> edges;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    try {
      auto j = nlohmann::json::parse(text);
      vertices = j.at("vertices").get<std::size_t>();
      const auto& list = j.contains("edges") ? j.at("edges") : j.at("arcs");
      for (const auto& e : list) {
        std::int64_t m = e.size() > 2 ? e.at(2).get<std::int64_t>() : 1;
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), m);
      }
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("bad graph JSON: ") + e.what());
    }
    return edges;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  vertices = 0;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<long long> v;
    long long x;
    while (ls >> x) v.push_back(x);
    if (v.empty()) continue;
    if (v.size() == 1 && edges.empty() && declared == 0) {
      declared = static_cast<std::size_t>(v[0]);
      continue;
    }
    if (v.size() < 2 || v.size() > 3 || v[0] < 0 || v[1] < 0) {
      throw InvalidInput("edge line must be 'i j [mult]': " + line);
    }
    std::int64_t m = v.size() == 3 ? v[2] : 1;
    edges.emplace_back(v[0], v[1], m);
    vertices = std::max<std::size_t>(vertices, std::max(v[0], v[1]) + 1);
  }
  if (declared) vertices = std::max(vertices, declared);
  return edges;
}

}  // namespace

Multigraph::Multigraph(std::size_t vertices, const std::vector<Edge>& edges)
    : mult_(build(vertices, edges, true)) {
  if (!connected(mult_)) throw InvalidInput("graph is not connected");
}

std::int64_t Multigraph::degree(std::size_t v) const {
  return std::accumulate(mult_[v].begin(), mult_[v].end(), std::int64_t{0});
}

std::int64_t Multigraph::edge_count() const {
  std::int64_t m = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) m += degree(v);
  return m / 2;
}

std::int64_t Multigraph::genus() const {
  return edge_count() - static_cast<std::int64_t>(vertex_count()) + 1;
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < vertex_count(); ++j) {
      if (mult_[i][j] > 0) e.emplace_back(i, j, mult_[i][j]);
    }
  }
  return e;
}

RegularDigraph::RegularDigraph(std::size_t vertices, const std::vector<Edge>& arcs)
    : arc_(build(vertices, arcs, false)) {
  for (std::size_t v = 0; v < vertices; ++v) {
    std::int64_t in = 0, out = 0;
    for (std::size_t u = 0; u < vertices; ++u) {
      out += arc_[v][u];
      in += arc_[u][v];
    }
    if (in != out) {
      throw InvalidInput("digraph is not regular at vertex " + std::to_string(v));
    }
  }
  if (!connected(arc_)) throw InvalidInput("digraph is not connected");
}

RegularDigraph::RegularDigraph(const Multigraph& g) {
  arc_.assign(g.vertex_count(), std::vector<std::int64_t>(g.vertex_count(), 0));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = 0; j < g.vertex_count(); ++j) arc_[i][j] = g.mult(i, j);
  }
}

std::int64_t RegularDigraph::out_degree(std::size_t v) const {
  return std::accumulate(arc_[v].begin(), arc_[v].end(), std::int64_t{0});
}

std::int64_t RegularDigraph::arc_count() const {
  std::int64_t m = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) m += out_degree(v);
  return m;
}

std::vector<Edge> RegularDigraph::arcs() const {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertex_count(); ++i) {
    for (std::size_t j = 0; j < vertex_count(); ++j) {
      if (arc_[i][j] > 0) e.emplace_back(i, j, arc_[i][j]);
    }
  }
  return e;
}

std::vector<Divisor> laplacian_matrix(const Multigraph& g) {
  Adj a(g.vertex_count(), std::vector<std::int64_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = 0; j < g.vertex_count(); ++j) a[i][j] = g.mult(i, j);
  }
  return laplacian_of(a);
}

std::vector<Divisor> laplacian_matrix(const RegularDigraph& g) {
  Adj a(g.vertex_count(), std::vector<std::int64_t>(g.vertex_count()));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t j = 0; j < g.vertex_count(); ++j) a[i][j] = g.arc(i, j);
  }
  return laplacian_of(a);
}

LatticeBasis laplacian_lattice(const Multigraph& g) {
  auto q = laplacian_matrix(g);
  q.pop_back();
  return LatticeBasis(std::move(q));
}

LatticeBasis laplacian_lattice(const RegularDigraph& g) {
  auto q = laplacian_matrix(g);
  q.pop_back();
  return LatticeBasis(std::move(q));
}

Divisor canonical_divisor(const Multigraph& g) {
  std::vector<Integer> k;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) k.emplace_back(g.degree(v) - 2);
  return Divisor(std::move(k));
}

Integer spanning_tree_count(const Multigraph& g) {
  auto q = laplacian_matrix(g);
  const std::size_t n = g.vertex_count() - 1;
  Matrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = q[i][j];
  }
  return determinant(std::move(m));
}

Integer acyclic_orientations_unique_source(const Multigraph& g, std::size_t source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw InvalidInput("source vertex out of range");
  std::vector<std::pair<std::size_t, std::size_t>> simple;
  for (const auto& [i, j, m] : g.edges()) simple.emplace_back(i, j);
  if (simple.size() > 24) throw ResourceError("too many edges for orientation enumeration");
  const std::uint64_t total = std::uint64_t{1} << simple.size();
  Integer count = 0;
  std::vector<int> indeg(n);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(indeg.begin(), indeg.end(), 0);
    for (auto& o : out) o.clear();
    for (std::size_t e = 0; e < simple.size(); ++e) {
      auto [a, b] = simple[e];
      if (mask >> e & 1) std::swap(a, b);
      out[a].push_back(b);
      ++indeg[b];
    }
    std::size_t sources = 0;
    bool ok = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (indeg[v] == 0) {
        ++sources;
        if (v != source) ok = false;
      }
    }
    if (!ok || sources != 1) continue;
    std::vector<std::size_t> queue{source};
    std::size_t seen = 0;
    while (seen < queue.size()) {
      std::size_t v = queue[seen++];
      for (std::size_t u : out[v]) {
        if (--indeg[u] == 0) queue.push_back(u);
      }
    }
    if (queue.size() == n) ++count;
  }
  return count;
}

Integer cyclic_order_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 8) throw ResourceError("cyclic_order_count supports at most 8 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::vector<std::size_t>> orders;
  do {
    index.emplace(perm, orders.size());
    orders.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> parent(orders.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };

  for (std::size_t k = 0; k < orders.size(); ++k) {
    const auto& o = orders[k];
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (g.mult(o[i], o[i + 1]) == 0) {
        auto s = o;
        std::swap(s[i], s[i + 1]);
        unite(k, index.at(s));
      }
    }
    auto r = o;
    std::rotate(r.begin(), r.begin() + 1, r.end());
    unite(k, index.at(r));
  }
  Integer classes = 0;
  for (std::size_t k = 0; k < orders.size(); ++k) if (find(k) == k) ++classes;
  return classes;
}

Multigraph parse_graph(std::string_view text) {
  std::size_t vertices = 0;
  auto edges = parse_edges(text, vertices);
  return Multigraph(vertices, edges);
}

RegularDigraph parse_digraph(std::string_view text) {
  std::size_t vertices = 0;
  auto arcs = parse_edges(text, vertices);
  return RegularDigraph(vertices, arcs);
}

std::string graph_to_json(const Multigraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b, m] : g.edges()) j["edges"].push_back({a, b, m});
  return j.dump();
}

}  // namespace rrlat
