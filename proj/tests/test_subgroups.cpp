#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace avgord;
using oracle::perm;

namespace {

PermGroup a4() { return families::alternating(4); }
PermGroup s3() { return families::symmetric(3); }
PermGroup d8() { return PermGroup({perm("(0 1 2 3)", 4), perm("(0 2)", 4)}); }

Subgroup klein_in(const PermGroup& g) {
  Permutation gens[] = {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)};
  return generated_subgroup(g, gens);
}

}  // namespace

TEST(Normality, KnownCases) {
  auto g = a4();
  EXPECT_TRUE(is_normal(g, klein_in(g)));
  auto s = s3();
  Permutation t[] = {perm("(0 1)", 3)};
  EXPECT_FALSE(is_normal(s, generated_subgroup(s, t)));
  EXPECT_TRUE(is_normal(s, whole_group(s)));
  EXPECT_THROW(is_normal(s, klein_in(g)), InvalidArgument);
}

TEST(Normality, NormalSubgroupsMatchFilterOracle) {
  for (const auto& g : {s3(), a4(), d8(), families::symmetric(4), families::quaternion8(), families::dihedral(12)}) {
    oracle::PermSet all(g.elements().begin(), g.elements().end());
    std::set<oracle::PermSet> expected;
    for (auto& h : all_subgroups(g)) {
      auto m = oracle::members_of(h);
      if (oracle::normal_in(m, all)) expected.insert(m);
    }
    auto normals = normal_subgroups(g);
    std::set<oracle::PermSet> got;
    for (const auto& n : normals) got.insert(oracle::members_of(n));
    EXPECT_EQ(got, expected) << "order " << g.order();
    EXPECT_EQ(got.size(), normals.size());
  }
  EXPECT_EQ(normal_subgroups(s3()).size(), 3u);
  EXPECT_EQ(normal_subgroups(a4()).size(), 3u);
  auto c12 = families::cyclic(12);
  EXPECT_EQ(normal_subgroups(c12).size(), all_subgroups(c12).size());
}

TEST(Quotient, OrdersAndStructure) {
  auto g = a4();
  auto q = quotient(g, klein_in(g));
  EXPECT_EQ(q.order(), 3u);
  EXPECT_EQ(quotient(g, whole_group(g)).order(), 1u);
  auto d = d8();
  auto z = center(d);
  ASSERT_EQ(z.order(), 2u);
  auto dq = quotient(d, z);
  EXPECT_EQ(dq.order(), 4u);
  EXPECT_TRUE(is_elementary_abelian(dq, 2));
  Permutation t[] = {perm("(0 1)", 3)};
  auto s = s3();
  EXPECT_THROW(quotient(s, generated_subgroup(s, t)), InvalidArgument);
}

TEST(Quotient, ProjectionIsAHomomorphism) {
  auto g = families::symmetric(4);
  for (const auto& n : normal_subgroups(g)) {
    auto qp = quotient_with_projection(g, n);
    EXPECT_EQ(qp.group.order() * n.order(), g.order());
    for (ElemId a = 0; a < g.order(); a += 5)
      for (ElemId b = 0; b < g.order(); b += 3)
        EXPECT_EQ(qp.projection[g.mul(a, b)], qp.group.mul(qp.projection[a], qp.projection[b]));
    for (ElemId x : n.members()) EXPECT_EQ(qp.projection[x], PermGroup::identity);
  }
}

TEST(Derived, MatchesCommutatorClosureOracle) {
  for (const auto& g : {a4(), s3(), d8(), families::symmetric(4), families::alternating(5), families::cyclic(6)}) {
    oracle::PermSet all(g.elements().begin(), g.elements().end());
    EXPECT_EQ(oracle::members_of(derived_subgroup(g)), oracle::derived(all, g.degree())) << g.order();
  }
  EXPECT_EQ(derived_subgroup(a4()).order(), 4u);
  EXPECT_EQ(derived_subgroup(s3()).order(), 3u);
  EXPECT_TRUE(derived_subgroup(families::cyclic(7)).is_trivial());
}

TEST(Derived, NormalWithAbelianQuotient) {
  for (const auto& e : shipped_catalog()) {
    auto g = e.group();
    auto d = derived_subgroup(g);
    EXPECT_TRUE(is_normal(g, d)) << e.label();
    EXPECT_TRUE(is_abelian(quotient(g, d))) << e.label();
  }
}

TEST(Frattini, KnownCases) {
  EXPECT_TRUE(frattini_subgroup(a4()).is_trivial());
  EXPECT_EQ(frattini_subgroup(families::cyclic(4)).order(), 2u);
  EXPECT_TRUE(frattini_subgroup(families::elementary_abelian(2, 4)).is_trivial());
  EXPECT_TRUE(frattini_subgroup(families::elementary_abelian(3, 2)).is_trivial());
  EXPECT_EQ(frattini_subgroup(d8()).order(), 2u);
}

TEST(Frattini, IsIntersectionOfMaximals) {
  auto g = families::symmetric(4);
  auto maxes = maximal_subgroups(g);
  ElementSet meet = maxes.front().set();
  for (const auto& m : maxes) meet = meet & m.set();
  EXPECT_EQ(frattini_subgroup(g).set(), meet);
}

TEST(Center, FittingAndCores) {
  EXPECT_EQ(center(d8()).order(), 2u);
  auto a = a4();
  EXPECT_TRUE(center(a).is_trivial());
  EXPECT_EQ(fitting_subgroup(a), klein_in(a));
  auto d = d8();
  EXPECT_TRUE(fitting_subgroup(d).is_whole());
  EXPECT_EQ(p_core(a4(), 2).order(), 4u);
  EXPECT_TRUE(p_core(a4(), 3).is_trivial());
  EXPECT_TRUE(p_core(families::symmetric(3), 2).is_trivial());
}

TEST(Center, CommutingScanOracle) {
  for (const auto& g : {d8(), families::quaternion8(), families::dihedral(12), families::symmetric(4)}) {
    oracle::PermSet z;
    for (const auto& x : g.elements()) {
      bool central = true;
      for (const auto& y : g.elements()) central = central && compose(x, y) == compose(y, x);
      if (central) z.insert(x);
    }
    EXPECT_EQ(oracle::members_of(center(g)), z);
  }
}

TEST(Sylow, KnownCases) {
  EXPECT_EQ(sylow_subgroup(s3(), 3).order(), 3u);
  auto a = a4();
  EXPECT_EQ(sylow_subgroup(a, 2), klein_in(a));
  auto c12 = families::cyclic(12);
  auto p = sylow_subgroup(c12, 2);
  EXPECT_EQ(p.order(), 4u);
  EXPECT_EQ(exponent(p.as_group()), 4u);
  EXPECT_THROW(sylow_subgroup(s3(), 5), InvalidArgument);
}

TEST(Sylow, CountsMatchLatticeFilter) {
  for (const auto& g : {families::symmetric(4), families::alternating(5), a4(), families::dihedral(20)}) {
    for (std::uint64_t p : prime_divisors(g.order())) {
      const std::size_t target = p_part(g.order(), p);
      std::size_t expected = 0;
      for (const auto& h : all_subgroups(g)) expected += h.order() == target;
      auto syl = sylow_subgroups(g, p);
      EXPECT_EQ(syl.size(), expected) << "p=" << p;
      EXPECT_EQ(syl.size() % p, 1u);
      for (const auto& h : syl) EXPECT_EQ(h.order(), target);
      EXPECT_EQ(sylow_subgroup(g, p), syl.front());
    }
  }
}

TEST(DirectProduct, Orders) {
  auto c2 = families::cyclic(2), c3 = families::cyclic(3);
  auto c6 = direct_product(c2, c3);
  EXPECT_EQ(c6.order(), 6u);
  EXPECT_EQ(order_spectrum(c6).count(6), 2u);
  EXPECT_EQ(direct_product(d8(), c2).order(), 16u);
  auto a = a4();
  EXPECT_TRUE(is_isomorphic(direct_product(a, PermGroup::trivial()), a));
  Limits small;
  small.max_order = 50;
  EXPECT_THROW(direct_product(families::symmetric(4, small), families::cyclic(3, small)), SizeLimitError);
}
