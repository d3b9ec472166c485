#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "rrlat/chipfire.hpp"
#include "rrlat/extremal.hpp"
#include "rrlat/rank.hpp"
#include "support/corpus.hpp"

using namespace rrlat;
using namespace rrlat::testing;

namespace {

std::shared_ptr<const Multigraph> share(Multigraph g) {
  return std::make_shared<const Multigraph>(std::move(g));
}

}  // namespace

TEST(Fire, Examples) {
  auto g = share(k3());
  EXPECT_EQ(fire({Divisor{3, 0, 0}, g}, 0).chips, (Divisor{1, 1, 1}));
  auto w = share(weighted_triangle());
  EXPECT_EQ(fire({Divisor{7, 0, 0}, w}, 0).chips, (Divisor{2, 3, 2}));
  // Firing every other vertex undoes a firing.
  Configuration c{Divisor{4, -1, 2}, w};
  EXPECT_EQ(fire_script(fire(c, 1), {0, 2}).chips, c.chips);
  EXPECT_THROW(fire(c, 3), InvalidInput);
}

TEST(Winnable, Examples) {
  auto g = share(k3());
  auto w = winnable({Divisor{-1, 1, 1}, g});
  EXPECT_TRUE(w.winnable);
  EXPECT_EQ(*w.target, (Divisor{1, 0, 0}));
  ASSERT_TRUE(w.script.has_value());
  EXPECT_EQ(fire_script({Divisor{-1, 1, 1}, g}, *w.script).chips, *w.target);
  EXPECT_FALSE(winnable({Divisor{-1, 0, 0}, g}).winnable);
  EXPECT_FALSE(winnable({Divisor{1, -1, 0}, g}).winnable);
}

TEST(Winnable, ScriptBudget) {
  auto g = share(weighted_triangle());
  auto w = winnable({Divisor{60, -40, -14}, g}, 3);
  EXPECT_TRUE(w.winnable);
  EXPECT_TRUE(w.target.has_value());
  EXPECT_FALSE(w.script.has_value());
}

TEST(KcMinus, Examples) {
  EXPECT_EQ(kc_minus({Divisor{0, 0, 0}, share(k3())}).chips, (Divisor{0, 0, 0}));
  Configuration c{Divisor{1, 1, 1}, share(weighted_triangle())};
  EXPECT_EQ(kc_minus(c).chips, (Divisor{2, 2, 1}));
  EXPECT_EQ(kc_minus(kc_minus(c)).chips, c.chips);
}

TEST(ChipfireProperty, DegreeAndReachability) {
  Rng rng(401);
  for (const auto& [name, g0] : graph_corpus()) {
    auto g = share(g0);
    auto L = laplacian_lattice(g0);
    const std::size_t v = g0.vertex_count();
    for (int it = 0; it < 5; ++it) {
      Divisor d = random_divisor(rng, v, uniform_int(rng, -3, 6), 4);
      std::vector<std::size_t> script;
      for (int k = 0; k < 8; ++k) {
        script.push_back(static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(v - 1))));
      }
      auto end = fire_script({d, g}, script);
      EXPECT_EQ(degree(end.chips), degree(d)) << name;
      EXPECT_TRUE(L.contains(end.chips - d)) << name;

      // Every lattice vector is realized by some script.
      std::vector<Integer> coeffs(v - 1);
      for (auto& c : coeffs) c = uniform_int(rng, -3, 3);
      Divisor target = d - L.combination(coeffs);
      coeffs.push_back(0);
      Integer low = *std::min_element(coeffs.begin(), coeffs.end());
      std::vector<std::size_t> s2;
      for (std::size_t i = 0; i < v; ++i) {
        for (Integer k = low; k < coeffs[i]; ++k) s2.push_back(i);
      }
      EXPECT_EQ(fire_script({d, g}, s2).chips, target) << name;
    }
  }
}

TEST(ChipfireProperty, WinnabilityMatchesRank) {
  Rng rng(409);
  for (const auto& [name, g0] : graph_corpus()) {
    if (g0.vertex_count() > 4) continue;
    auto g = share(g0);
    auto L = laplacian_lattice(g0);
    auto ext = extremal_set_graphical(g0);
    for (int it = 0; it < 8; ++it) {
      Divisor d = random_divisor(rng, g0.vertex_count(), uniform_int(rng, -2, g0.genus() + 2), 4);
      auto w = winnable({d, g});
      EXPECT_EQ(w.winnable, rank_extremal(L, d, ext).rank >= 0) << name;
      if (degree(d) > g0.genus()) EXPECT_TRUE(w.winnable) << name;
      if (w.script) EXPECT_EQ(fire_script({d, g}, *w.script).chips, *w.target) << name;
    }
  }
}

TEST(ChipfireProperty, RiemannRochOnConfigurations) {
  auto g0 = weighted_triangle();
  auto g = share(g0);
  auto L = laplacian_lattice(g0);
  auto ext = extremal_set_graphical(g0);
  Rng rng(419);
  for (int it = 0; it < 40; ++it) {
    Configuration c{random_divisor(rng, 3, uniform_int(rng, -5, 15), 6), g};
    Integer lhs = rank_extremal(L, c.chips, ext).rank - rank_extremal(L, kc_minus(c).chips, ext).rank;
    EXPECT_EQ(lhs, degree(c.chips) - g0.genus() + 1);
  }
}
