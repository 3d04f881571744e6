#include <gtest/gtest.h>

#include "eqmodel/perm_group.hpp"

using namespace eqmodel;

TEST(PermGroupTest, NamedGroupOrders)
{
  std::vector<std::pair<std::string, std::size_t>> const expected{
      {"cyclic-1", 1},     {"cyclic-2", 2},      {"cyclic-6", 6},        {"klein-4", 4},
      {"symmetric-3", 6},  {"dihedral-8", 8},    {"quaternion-8", 8},    {"alternating-4", 12},
      {"symmetric-4", 24}, {"symmetric-5", 120}, {"dihedral-10", 10}};
  for (auto const &[name, order] : expected)
    EXPECT_EQ(order, named_group(name).order()) << name;
}

TEST(PermGroupTest, UnknownNamesThrow)
{
  EXPECT_THROW(named_group("symmetric-6"), UnknownGroupError);
  EXPECT_THROW(named_group("cyclic-0"), UnknownGroupError);
  EXPECT_THROW(named_group("mathieu-11"), UnknownGroupError);
  EXPECT_THROW(named_group("dihedral-7"), UnknownGroupError);
}

TEST(PermGroupTest, IdentityIsElementZero)
{
  for (auto const &name : corpus_group_names()) {
    auto G = named_group(name);
    EXPECT_TRUE(G.element(FiniteGroup::kIdentity).is_identity()) << name;
  }
}

// The multiplication table agrees with composing the permutations directly.
TEST(PermGroupTest, MultiplicationMatchesComposition)
{
  for (auto const &name : corpus_group_names()) {
    auto G = named_group(name);
    for (std::size_t a = 0; a < G.order(); ++a) {
      EXPECT_EQ(G.multiply(a, G.inverse(a)), FiniteGroup::kIdentity);
      for (std::size_t b = 0; b < G.order(); ++b) {
        auto const &pa = G.element(a), &pb = G.element(b);
        std::vector<std::size_t> images(G.degree());
        for (std::size_t p = 0; p < G.degree(); ++p)
          images[p] = pa(pb(p));
        ASSERT_EQ(G.element(G.multiply(a, b)).images(), images) << name;
      }
    }
  }
}

TEST(PermGroupTest, WordsReproduceElements)
{
  auto G = named_group("symmetric-4");
  for (std::size_t e = 0; e < G.order(); ++e) {
    std::size_t acc = FiniteGroup::kIdentity;
    auto w = G.word(e);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      acc = G.multiply(G.generator_indices()[*it], acc);
    EXPECT_EQ(acc, e);
  }
}

TEST(PermGroupTest, Abelian)
{
  EXPECT_TRUE(named_group("cyclic-6").is_abelian());
  EXPECT_TRUE(named_group("klein-4").is_abelian());
  EXPECT_FALSE(named_group("quaternion-8").is_abelian());
  EXPECT_FALSE(named_group("symmetric-3").is_abelian());
}

TEST(PermGroupTest, CyclesAreOneBased)
{
  auto p = Permutation::from_cycles(3, {{1, 2, 3}});
  EXPECT_EQ(p.images(), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_TRUE((p * p * p).is_identity());
  EXPECT_EQ(p.inverse() * p, Permutation::identity(3));
}
