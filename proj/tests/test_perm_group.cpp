#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace avgord;
using oracle::perm;

namespace {

PermGroup a4() { return PermGroup({perm("(0 1 2)", 4), perm("(0 1)(2 3)", 4)}); }
PermGroup d8() { return PermGroup({perm("(0 1 2 3)", 4), perm("(0 2)", 4)}); }

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(PermGroup, EnumeratesExpectedOrders) {
  EXPECT_EQ(PermGroup({perm("(0 1 2 3)", 4)}).order(), 4u);
  EXPECT_EQ(a4().order(), 12u);
  EXPECT_EQ(d8().order(), 8u);
  EXPECT_EQ(PermGroup::trivial(3).order(), 1u);
}

TEST(PermGroup, ElementsMatchNaiveClosure) {
  std::vector<std::vector<Permutation>> cases = {
      {perm("(0 1 2)", 4), perm("(0 1)(2 3)", 4)},
      {perm("(0 1 2 3)", 4), perm("(0 2)", 4)},
      {perm("(0 1 2 3 4)", 5), perm("(0 1)", 5)},
      {perm("(0 1)(2 3)", 6), perm("(4 5)", 6), perm("(0 2)(1 3)", 6)}};
  for (const auto& gens : cases) {
    PermGroup g(gens);
    auto naive = oracle::closure(gens, gens.front().degree());
    ASSERT_EQ(g.order(), naive.size());
    for (const auto& x : g.elements()) EXPECT_TRUE(naive.count(x));
  }
}

TEST(PermGroup, StructuralInvariants) {
  for (const auto& g : {a4(), d8(), families::symmetric(5), families::dihedral(18)}) {
    EXPECT_EQ(factorial(g.degree()) % g.order(), 0u);
    EXPECT_TRUE(g.element(PermGroup::identity).is_identity());
    EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
    for (ElemId x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.element(g.inv(x)), g.element(x).inverse());
      EXPECT_EQ(g.order_of(x), oracle::order_by_powers(g.element(x)));
    }
  }
}

TEST(PermGroup, MultiplicationAgreesWithCompose) {
  auto g = families::symmetric(4);
  for (ElemId a = 0; a < g.order(); ++a)
    for (ElemId b = 0; b < g.order(); ++b)
      ASSERT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b)));
}

TEST(PermGroup, LargeGroupWithoutTableStillMultiplies) {
  auto g = families::symmetric(7);  // 5040 elements, above the table limit
  ASSERT_EQ(g.order(), 5040u);
  for (ElemId a = 0; a < g.order(); a += 97)
    for (ElemId b = 0; b < g.order(); b += 131)
      ASSERT_EQ(g.element(g.mul(a, b)), compose(g.element(a), g.element(b)));
}

TEST(PermGroup, SizeLimitIsExplicit) {
  Limits small;
  small.max_order = 100;
  EXPECT_THROW(families::symmetric(5, small), SizeLimitError);
  EXPECT_NO_THROW(families::symmetric(4, small));
}

TEST(PermGroup, ConstructorErrors) {
  EXPECT_THROW(PermGroup(std::vector<Permutation>{}), InvalidArgument);
  EXPECT_THROW(PermGroup({perm("(0 1)", 2), perm("(0 1)", 3)}), InvalidArgument);
}

TEST(PermGroup, FindAndIdOf) {
  auto g = a4();
  EXPECT_TRUE(g.find(perm("(0 2 1)", 4)).has_value());
  EXPECT_FALSE(g.find(perm("(0 1)", 4)).has_value());
  EXPECT_THROW(g.id_of(perm("(0 1)", 4)), InvalidArgument);
}

TEST(Subgroup, GeneratedSubgroups) {
  auto g = a4();
  ElemId id[] = {PermGroup::identity};
  EXPECT_TRUE(generated_subgroup(g, id).is_trivial());
  ElemId three[] = {g.id_of(perm("(0 1 2)", 4))};
  auto c3 = generated_subgroup(g, three);
  EXPECT_EQ(c3.order(), oracle::closure({perm("(0 1 2)", 4)}, 4).size());
  EXPECT_EQ(c3.order(), 3u);
  EXPECT_TRUE(generated_subgroup(g, g.generator_ids()).is_whole());
  ElemId bad[] = {static_cast<ElemId>(g.order())};
  EXPECT_THROW(generated_subgroup(g, bad), InvalidArgument);
  Permutation outside[] = {perm("(0 1)", 4)};
  EXPECT_THROW(generated_subgroup(g, outside), InvalidArgument);
}

TEST(Subgroup, FromMembersChecksClosure) {
  auto g = a4();
  ElementSet s(g.order());
  s.insert(PermGroup::identity);
  s.insert(g.id_of(perm("(0 1 2)", 4)));
  EXPECT_THROW(subgroup_from_members(g, s), InvalidArgument);
  s.insert(g.id_of(perm("(0 2 1)", 4)));
  EXPECT_EQ(subgroup_from_members(g, s).order(), 3u);
}

namespace {

void expect_lattice_matches_oracle(const PermGroup& g) {
  auto mine = all_subgroups(g);
  auto naive = oracle::all_subgroups(oracle::PermSet(g.elements().begin(), g.elements().end()));
  ASSERT_EQ(mine.size(), naive.size());
  std::set<oracle::PermSet> expected(naive.begin(), naive.end());
  for (const auto& h : mine) {
    EXPECT_EQ(g.order() % h.order(), 0u);
    EXPECT_TRUE(expected.count(oracle::members_of(h)));
  }
}

}  // namespace

TEST(Lattice, SmallGroupsMatchBruteForce) {
  expect_lattice_matches_oracle(PermGroup({perm("(0 1)", 2)}));
  expect_lattice_matches_oracle(a4());
  expect_lattice_matches_oracle(d8());
  expect_lattice_matches_oracle(families::elementary_abelian(2, 3));
  expect_lattice_matches_oracle(families::quaternion8());
  EXPECT_EQ(all_subgroups(PermGroup({perm("(0 1)", 2)})).size(), 2u);
  EXPECT_EQ(all_subgroups(a4()).size(), 10u);
  EXPECT_EQ(all_subgroups(d8()).size(), 10u);
}

TEST(Lattice, SortedByOrderThenMembers) {
  auto subs = all_subgroups(families::symmetric(4));
  EXPECT_EQ(subs.size(), 30u);
  for (std::size_t i = 1; i < subs.size(); ++i) {
    EXPECT_LE(subs[i - 1].order(), subs[i].order());
    if (subs[i - 1].order() == subs[i].order()) {
      EXPECT_TRUE(lex_less(subs[i - 1], subs[i]));
    }
  }
  EXPECT_TRUE(subs.front().is_trivial());
  EXPECT_TRUE(subs.back().is_whole());
}

TEST(Lattice, ElementaryAbelianOfOrder64) {
  auto subs = all_subgroups(families::elementary_abelian(2, 6));
  EXPECT_EQ(subs.size(), 2825u);  // sum of Gaussian binomials [6 k]_2
}

TEST(Lattice, CapIsExplicit) {
  Limits small;
  small.lattice_cap = 20;
  EXPECT_THROW(all_subgroups(families::symmetric(4, small)), SizeLimitError);
}

TEST(Lattice, LatticeIsDeterministic) {
  auto a = all_subgroups(families::symmetric(4));
  auto b = all_subgroups(families::symmetric(4));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(oracle::members_of(a[i]), oracle::members_of(b[i]));
}
