#include <set>

#include <gtest/gtest.h>

#include "eqmodel/subgroup_lattice.hpp"

using namespace eqmodel;

namespace {

// Every subset closed under multiplication that contains the identity.
// Fine for |G| <= 12.
std::set<std::vector<std::size_t>> brute_force_subgroups(FiniteGroup const &G)
{
  std::set<std::vector<std::size_t>> out;
  std::size_t n = G.order();
  for (std::uint32_t mask = 1; mask < (1u << n); mask += 2) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        s.push_back(i);
    bool closed = true;
    for (auto a : s)
      for (auto b : s)
        closed = closed && (mask >> G.multiply(a, b) & 1);
    if (closed)
      out.insert(s);
  }
  return out;
}

}  // namespace

TEST(SubgroupLatticeTest, EnumerationMatchesBruteForce)
{
  for (std::string name : {"cyclic-6", "klein-4", "symmetric-3", "dihedral-8", "quaternion-8", "alternating-4"}) {
    auto G = make_group(named_group(name));
    std::set<std::vector<std::size_t>> found;
    for (auto const &H : all_subgroups(G))
      found.insert(H.members);
    EXPECT_EQ(found, brute_force_subgroups(*G)) << name;
  }
}

TEST(SubgroupLatticeTest, ClassCounts)
{
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> const expected{
      {"cyclic-1", 1, 1},  {"cyclic-6", 4, 4},      {"klein-4", 5, 5},
      {"symmetric-3", 6, 4}, {"dihedral-8", 10, 8}, {"quaternion-8", 6, 6},
      {"alternating-4", 10, 5}, {"symmetric-4", 30, 11}};
  for (auto const &[name, subgroups, classes] : expected) {
    auto G = make_group(named_group(name));
    ConjugacyClassTable t(G);
    EXPECT_EQ(t.subgroup_count(), subgroups) << name;
    EXPECT_EQ(t.size(), classes) << name;
  }
}

TEST(SubgroupLatticeTest, WeylOrdersSymmetric3)
{
  auto G = make_group(named_group("symmetric-3"));
  ConjugacyClassTable t(G);
  std::vector<std::size_t> orders;
  for (auto const &H : t.representatives())
    orders.push_back(weyl_group(G, H).order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{6, 1, 2, 1}));
}

TEST(SubgroupLatticeTest, WeylOrdersKlein4)
{
  auto G = make_group(named_group("klein-4"));
  ConjugacyClassTable t(G);
  std::vector<std::size_t> orders;
  for (auto const &H : t.representatives())
    orders.push_back(weyl_group(G, H).order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{4, 2, 2, 2, 1}));
}

// |N_G H| by direct search against |W| * |H|.
TEST(SubgroupLatticeTest, WeylOrderIsNormalizerOverSubgroup)
{
  for (auto const &name : corpus_group_names()) {
    auto G = make_group(named_group(name));
    ConjugacyClassTable t(G);
    for (auto const &H : t.representatives()) {
      std::size_t n = 0;
      for (std::size_t g = 0; g < G->order(); ++g)
        n += conjugate(H, g) == H;
      EXPECT_EQ(n, normalizer(G, H).order());
      EXPECT_EQ(n, weyl_group(G, H).order() * H.order()) << name;
    }
  }
}

TEST(SubgroupLatticeTest, ConjugatesPartitionTheSubgroups)
{
  auto G = make_group(named_group("symmetric-4"));
  ConjugacyClassTable t(G);
  std::size_t total = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    total += t.conjugates(i).size();
    for (auto const &K : t.conjugates(i))
      EXPECT_EQ(t.class_of(K), i);
  }
  EXPECT_EQ(total, all_subgroups(G).size());
}

TEST(SubgroupLatticeTest, StrictSubconjugacy)
{
  auto G = make_group(named_group("symmetric-3"));
  ConjugacyClassTable t(G);
  auto const &e = t.representative(0);
  auto const &c2 = t.representative(1);
  auto const &c3 = t.representative(2);
  EXPECT_TRUE(is_subconjugate(G, e, c2, true));
  EXPECT_FALSE(is_subconjugate(G, c2, c2, true));
  EXPECT_TRUE(is_subconjugate(G, c2, c2, false));
  EXPECT_FALSE(is_subconjugate(G, c2, c3, false));
  EXPECT_EQ(family_below(t, c3, false), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(family_below(t, c3, true), (std::vector<std::size_t>{0}));
}

TEST(SubgroupLatticeTest, RejectsNonSubgroups)
{
  auto G = make_group(named_group("symmetric-3"));
  EXPECT_THROW(make_subgroup(G, {0, 1, 2}), Error);
}
