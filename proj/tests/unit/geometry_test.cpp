#include <gtest/gtest.h>

#include "rrlat/extremal.hpp"
#include "rrlat/geometry.hpp"
#include "rrlat/graph.hpp"
#include "rrlat/rank.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace rrlat;
using namespace rrlat::testing;

namespace {

RationalPoint pt(std::initializer_list<long long> v) { return RationalPoint(Divisor(v)); }

RationalPoint random_h0(Rng& rng, std::size_t m, std::int64_t den) {
  std::vector<Rational> c(m);
  Rational s = 0;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    c[i] = Rational(uniform_int(rng, -8 * den, 8 * den), den);
    s += c[i];
  }
  c[m - 1] = -s;
  return RationalPoint(c);
}

}  // namespace

TEST(Distance, Examples) {
  EXPECT_EQ(simplicial_distance(pt({0, 0, 0}), pt({1, -1, 0})), 1);
  EXPECT_EQ(simplicial_distance(pt({4, -1, -3}), pt({4, -1, -3})), 0);
  EXPECT_EQ(simplicial_distance(pt({0, 0, 0}), pt({5, -2, -3})), 3);
  EXPECT_EQ(simplicial_distance(pt({5, -2, -3}), pt({0, 0, 0}), Orientation::down), 3);
  EXPECT_EQ(simplicial_distance(pt({5, -2, -3}), pt({0, 0, 0})), 5);
  EXPECT_EQ(simplicial_distance(Divisor{1, 2}, Divisor{0, 3}), 1);
}

TEST(Distance, RejectsDegreeMismatch) {
  EXPECT_THROW(simplicial_distance(pt({1, 0, 0}), pt({0, 0, 0})), InvalidInput);
}

TEST(Ball, Vertices) {
  SimplexBall ball(pt({0, 0, 0}), 1);
  auto v = ball.vertices();
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], pt({2, -1, -1}));
  for (const auto& x : v) EXPECT_EQ(simplicial_distance(ball.center, x), 1);
  EXPECT_TRUE(ball.contains(pt({1, 0, -1})));
  EXPECT_FALSE(ball.contains(pt({-2, 1, 1})));
  EXPECT_THROW(SimplexBall(pt({1, 0, 0}), 1), InvalidInput);
}

TEST(HDistance, Examples) {
  auto L = laplacian_lattice(k3());
  auto at_origin = h_distance(L, pt({0, 0, 0}));
  EXPECT_EQ(at_origin.distance, 0);
  EXPECT_EQ(at_origin.nearest, (Divisor{0, 0, 0}));
  auto h = h_distance(L, project_H0(Divisor{0, -1, -2}));
  EXPECT_EQ(h.distance, 1);
  // Minimizers are O, (2,-1,-1) and (1,1,-2); smallest is O.
  EXPECT_EQ(h.nearest, (Divisor{0, 0, 0}));
}

TEST(HDistance, WeightedTriangleCriticalValue) {
  auto g = weighted_triangle();
  auto L = laplacian_lattice(g);
  auto ext = extremal_set_graphical(g);
  for (const auto& nu : ext.representatives) {
    EXPECT_EQ(h_distance(L, project_H0(nu)).distance, Rational(7, 3));
  }
}

TEST(Sigma, Examples) {
  auto L = laplacian_lattice(k3());
  EXPECT_FALSE(sigma_contains(L, Divisor{-1, 0, 0}));
  // O dominates it, so it lies only in the closed region.
  EXPECT_FALSE(sigma_contains(L, Divisor{0, -1, -2}));
  EXPECT_TRUE(closed_sigma_contains(L, Divisor{0, -1, -2}));
  EXPECT_TRUE(sigma_contains(L, Divisor{1, 0, -1}));
  EXPECT_FALSE(sigma_contains(L, Divisor{0, 0, 0}));
  EXPECT_TRUE(sigma_contains(L, Divisor{1, 0, 0}));
}

TEST(Extremal, Examples) {
  auto L = laplacian_lattice(k3());
  EXPECT_TRUE(is_extremal(L, Divisor{1, 0, -1}));
  EXPECT_FALSE(is_extremal(L, Divisor{1, 0, 0}));
  EXPECT_FALSE(is_extremal(L, Divisor{0, 0, 0}));
  auto a2 = a2_example();
  EXPECT_FALSE(is_extremal(a2, Divisor{-2, 1, -7}));
  EXPECT_TRUE(is_extremal(a2, Divisor{1, -6, -7}));
}

TEST(Critical, Examples) {
  auto L = laplacian_lattice(k3());
  auto cp = verify_critical(L, pt({1, 0, -1}));
  ASSERT_TRUE(cp.has_value());
  EXPECT_EQ(cp->h_value, 1);
  EXPECT_EQ(cp->witnesses,
            (std::vector<Divisor>{{0, 0, 0}, {2, -1, -1}, {1, 1, -2}}));
  EXPECT_FALSE(verify_critical(L, pt({0, 0, 0})).has_value());
  EXPECT_FALSE(verify_critical(a2_example(), project_H0(Divisor{-3, 0, -8})).has_value());
  EXPECT_TRUE(verify_critical(a2_example(), project_H0(Divisor{0, -7, -8})).has_value());
}

TEST(Critical, WitnessesAreTightAtOneFacet) {
  auto L = laplacian_lattice(weighted_triangle());
  auto ext = extremal_set_graphical(weighted_triangle());
  for (const auto& nu : ext.representatives) {
    auto c = project_H0(nu);
    auto cp = verify_critical(L, c);
    ASSERT_TRUE(cp.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& w = cp->witnesses[i];
      EXPECT_EQ(simplicial_distance(c, RationalPoint(w)), cp->h_value);
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(Rational(w[j]) == c[j] - cp->h_value, i == j);
      }
    }
  }
}

TEST(Covering, Examples) {
  EXPECT_EQ(covering_number(extremal_set_graphical(k3())), 1);
  EXPECT_EQ(covering_number(extremal_set_graphical(weighted_triangle())), Rational(7, 3));
  EXPECT_EQ(covering_number(extremal_set_graphical(path3())), Rational(2, 3));
}

TEST(Duality, Examples) {
  auto g = k3();
  auto L = laplacian_lattice(g);
  auto ext = extremal_set_graphical(g);
  auto origin = duality_probe(L, ext, 0, {pt({0, 0, 0})});
  EXPECT_TRUE(origin.samples[0].in_b);
  EXPECT_FALSE(origin.samples[0].interior_overlap);
  EXPECT_EQ(origin.samples[0].critical_distance, 1);

  auto crit = duality_probe(L, ext, 1, {pt({1, 0, -1})});
  EXPECT_TRUE(crit.samples[0].in_b);
  EXPECT_EQ(crit.samples[0].lattice_distance, 1);
  EXPECT_EQ(crit.samples[0].critical_distance, 0);

  // Points on the segment from O to a critical point split the covering radius.
  for (int k = 0; k <= 6; ++k) {
    RationalPoint x = pt({1, 0, -1}) * Rational(k, 6);
    auto rep = duality_probe(L, ext, Rational(k, 6), {x});
    EXPECT_EQ(rep.samples[0].lattice_distance, Rational(k, 6));
    EXPECT_TRUE(rep.samples[0].identity);
    EXPECT_TRUE(rep.ok());
  }
  EXPECT_THROW(duality_probe(L, ext, 2, {}), InvalidInput);
}

TEST(Render, ProducesSvg) {
  auto L = laplacian_lattice(weighted_triangle());
  auto ext = extremal_set_graphical(weighted_triangle());
  auto svg = svg_render_2d(L, ext, {}, 8);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("voronoi"), std::string::npos);
  EXPECT_EQ(svg, svg_render_2d(L, ext, {}, 8));
  RenderLayers none{false, false, false, std::nullopt};
  auto bare = svg_render_2d(L, ext, none, 8);
  EXPECT_EQ(bare.find("<circle"), std::string::npos);
}

TEST(GeometryProperty, DistanceAxioms) {
  Rng rng(29);
  auto L = laplacian_lattice(weighted_triangle());
  for (int it = 0; it < 300; ++it) {
    auto p = random_h0(rng, 3, 4), q = random_h0(rng, 3, 4), r = random_h0(rng, 3, 4);
    EXPECT_GE(simplicial_distance(p, q) + simplicial_distance(q, r), simplicial_distance(p, r));
    EXPECT_EQ(simplicial_distance(p, q), simplicial_distance(q, p, Orientation::down));
    Rational lam(uniform_int(rng, 0, 12), 12);
    RationalPoint mid = p * (1 - lam) + r * lam;
    EXPECT_EQ(simplicial_distance(p, mid) + simplicial_distance(mid, r), simplicial_distance(p, r));
    RationalPoint v(L.combination({uniform_int(rng, -3, 3), uniform_int(rng, -3, 3)}));
    EXPECT_EQ(simplicial_distance(p - v, q - v), simplicial_distance(p, q));
  }
}

TEST(GeometryProperty, SigmaMatchesRank) {
  for (const auto& [name, g] : random_multigraphs(8, 3, 5, 1234)) {
    auto L = laplacian_lattice(g);
    Rng rng(5);
    for (int it = 0; it < 30; ++it) {
      Divisor d = Divisor::zero(g.vertex_count());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = uniform_int(rng, -4, 2);
      EXPECT_EQ(sigma_contains(L, d), rank_bruteforce(L, -d).rank == -1) << name;
      EXPECT_EQ(sigma_contains(L, d), !oracle_dominated(L.rows(), d)) << name;
    }
  }
}

TEST(GeometryProperty, ClosedSigmaShift) {
  Rng rng(31);
  auto L = laplacian_lattice(weighted_triangle());
  for (int it = 0; it < 200; ++it) {
    Divisor d{uniform_int(rng, -8, 3), uniform_int(rng, -8, 3), uniform_int(rng, -8, 3)};
    // Closed test: no p with p > D - 1 strictly, i.e. p >= D.
    Divisor shifted = d - Divisor::ones(3);
    EXPECT_EQ(sigma_contains(L, d), closed_sigma_contains(L, shifted));
    bool strict = false;
    for (const auto& p : oracle_enumerate(L.rows(), shifted + Divisor::ones(3),
                                          shifted + Divisor::ones(3) * 30)) {
      (void)p;
      strict = true;
    }
    EXPECT_EQ(closed_sigma_contains(L, shifted), !strict);
  }
}

TEST(GeometryProperty, CriticalPointsAreProjectedExtremals) {
  for (const auto& [name, g] : connected_simple_graphs(4)) {
    auto L = laplacian_lattice(g);
    auto ext = extremal_set_graphical(g);
    for (const auto& nu : ext.representatives) {
      EXPECT_TRUE(verify_critical(L, project_H0(nu)).has_value()) << name;
    }
    // Every critical vertex of the cell of O comes from an extremal class.
    for (const auto& c : critical_vertices_of_origin(L, ext)) {
      auto cp = verify_critical(L, c);
      ASSERT_TRUE(cp.has_value()) << name;
      bool matched = false;
      for (const auto& nu : ext.representatives) {
        if (L.contains(project_H0(nu) - c)) matched = true;
      }
      EXPECT_TRUE(matched) << name;
    }
  }
}

TEST(GeometryProperty, LaplacianCoveringBound) {
  Rng rng(37);
  for (const auto& [name, g] : graph_corpus()) {
    if (g.vertex_count() > 4) continue;
    auto L = laplacian_lattice(g);
    Rational bound(g.edge_count(), static_cast<long long>(g.vertex_count()));
    for (int it = 0; it < 20; ++it) {
      auto x = random_h0(rng, g.vertex_count(), 5);
      EXPECT_LE(h_distance(L, x).distance, bound) << name;
    }
  }
}

TEST(GeometryProperty, CriticalClassesAtMostFactorial) {
  for (const auto& [name, g] : graph_corpus()) {
    auto ext = extremal_set_graphical(g);
    std::size_t fact = 1;
    for (std::size_t k = 2; k < g.vertex_count(); ++k) fact *= k;
    EXPECT_LE(ext.class_count(), fact) << name;
  }
}
