#include <gtest/gtest.h>

#include "rrlat/a2.hpp"
#include "rrlat/extremal.hpp"
#include "rrlat/graph.hpp"
#include "rrlat/rank.hpp"
#include "support/corpus.hpp"

using namespace rrlat;
using namespace rrlat::testing;

namespace {

void expect_cone_basis(const LatticeBasis& L, const DigraphBasis& b) {
  EXPECT_TRUE(in_cone(0, b.b0));
  EXPECT_TRUE(in_cone(1, b.b1));
  EXPECT_TRUE(in_cone(2, b.b2));
  EXPECT_EQ(b.b0 + b.b1 + b.b2, Divisor::zero(3));
  EXPECT_TRUE(L.same_lattice(LatticeBasis({b.b0, b.b1})));
}

}  // namespace

TEST(Cones, Functionals) {
  EXPECT_EQ(cone_functional(0, Divisor{7, -7, 0}), 21);
  EXPECT_TRUE(in_cone(0, Divisor{7, -7, 0}));
  EXPECT_TRUE(in_cone(1, Divisor{-3, 11, -8}));
  EXPECT_TRUE(in_cone(2, Divisor{-4, -4, 8}));
  EXPECT_EQ(cone_of(Divisor{-1, -1, 2}), 2u);
  EXPECT_FALSE(cone_of(Divisor{0, 0, 0}).has_value());
}

TEST(DigraphBasis, Examples) {
  auto a2 = a2_example();
  auto b = digraph_basis(a2);
  expect_cone_basis(a2, b);
  EXPECT_EQ(b.b0, (Divisor{7, -7, 0}));
  EXPECT_EQ(b.b1, (Divisor{-3, 11, -8}));

  auto k = laplacian_lattice(k3());
  auto bk = digraph_basis(k);
  expect_cone_basis(k, bk);
  EXPECT_EQ(bk.b0, (Divisor{2, -1, -1}));

  LatticeBasis root({Divisor{1, -1, 0}, Divisor{0, 1, -1}});
  expect_cone_basis(root, digraph_basis(root));
}

TEST(ClassifyA2, Examples) {
  auto a = classify_a2(a2_example());
  EXPECT_FALSE(a.strong);
  EXPECT_EQ(a.critical_classes, 1u);
  EXPECT_FALSE(a.multi_tree);

  auto f = classify_a2(family_l2());
  EXPECT_FALSE(f.strong);
  EXPECT_EQ(f.critical_classes, 1u);
  EXPECT_FALSE(f.multi_tree);

  auto t = classify_a2(LatticeBasis({Divisor{1, 0, -1}, Divisor{0, 1, -1}}));
  EXPECT_TRUE(t.strong);

  auto tree = classify_a2(LatticeBasis({Divisor{0, 2, -2}, Divisor{3, 0, -3}}));
  EXPECT_TRUE(tree.multi_tree);
  EXPECT_TRUE(tree.strong);
  EXPECT_EQ(tree.critical_classes, 1u);
}

TEST(Family, Extension) {
  auto l3 = extend_family(family_l2());
  EXPECT_EQ(l3.rows(), (std::vector<Divisor>{{2, -2, 0, 0}, {-1, 3, -2, 0}, {0, 0, -1, 1}}));
  EXPECT_EQ(picard_cardinality(l3), picard_cardinality(family_l2()));
  auto l4 = extend_family(l3);
  EXPECT_EQ(picard_cardinality(l4), picard_cardinality(family_l2()));
  EXPECT_EQ(restrict_divisor(Divisor{1, 2, 3, 4}), (Divisor{1, 2, 7}));
}

TEST(Family, RankCorrespondence) {
  auto l2 = family_l2();
  auto l3 = extend_family(l2);
  auto e2 = extremal_set_general(l2);
  auto e3 = extremal_set_general(l3);
  Rng rng(211);
  for (int it = 0; it < 30; ++it) {
    Divisor d = random_divisor(rng, 4, uniform_int(rng, -2, 6), 3);
    EXPECT_EQ(rank_extremal(l3, d, e3).rank, rank_extremal(l2, restrict_divisor(d), e2).rank)
        << to_string(d);
  }
}

TEST(Family, ExtremalLift) {
  auto l2 = family_l2();
  auto l3 = extend_family(l2);
  auto e2 = extremal_set_general(l2);
  auto e3 = extremal_set_general(l3);
  ASSERT_EQ(e2.class_count(), e3.class_count());
  for (const auto& v : e2.representatives) {
    Divisor lifted = Divisor::zero(4);
    for (std::size_t i = 0; i < 3; ++i) lifted[i] = v[i];
    bool found = false;
    for (const auto& w : e3.representatives) found = found || l3.contains(w - lifted);
    EXPECT_TRUE(found) << to_string(v);
  }
}

TEST(A2Property, RandomCorpus) {
  Rng rng(307);
  for (int it = 0; it < 40; ++it) {
    auto L = random_a2_lattice(rng, 12);
    auto b = digraph_basis(L);
    expect_cone_basis(L, b);
    auto ext = extremal_set_general(L);
    auto cls = classify(ext, L);
    EXPECT_TRUE(cls.reflection_invariant);
    auto a = classify_a2(L);
    EXPECT_EQ(a.strong, cls.strongly_reflection_invariant) << format_lattice(L);
    EXPECT_EQ(a.critical_classes, ext.class_count()) << format_lattice(L);
    EXPECT_EQ(a.strong, a.critical_classes == 2 || a.multi_tree);
  }
}
