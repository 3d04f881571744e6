#include <gtest/gtest.h>

#include "eqmodel/burnside_ring.hpp"

using namespace eqmodel;

namespace {

// |(G/K)^H| by counting cosets gK with H g K = g K.
std::size_t fixed_cosets(GroupPtr const &G, Subgroup const &K, Subgroup const &H)
{
  std::vector<bool> seen(G->order());
  std::size_t count = 0;
  for (std::size_t g = 0; g < G->order(); ++g) {
    if (seen[g])
      continue;
    for (auto k : K.members)
      seen[G->multiply(g, k)] = true;
    bool fixed = true;
    for (auto h : H.members)
      fixed = fixed && K.contains(G->multiply(G->inverse(g), G->multiply(h, g)));
    count += fixed;
  }
  return count;
}

}  // namespace

TEST(BurnsideRingTest, MarksCyclic2)
{
  auto ring = make_burnside_ring(make_group(named_group("cyclic-2")));
  EXPECT_EQ(ring->marks()[0], (std::vector<Rational>{2, 0}));
  EXPECT_EQ(ring->marks()[1], (std::vector<Rational>{1, 1}));
}

TEST(BurnsideRingTest, MarksMatchFixedCosetCount)
{
  for (auto const &name : corpus_group_names()) {
    auto G = make_group(named_group(name));
    auto ring = make_burnside_ring(G);
    auto const &reps = ring->classes().representatives();
    for (std::size_t k = 0; k < reps.size(); ++k)
      for (std::size_t h = 0; h < reps.size(); ++h)
        ASSERT_EQ(ring->marks()[k][h], Rational(static_cast<unsigned long>(fixed_cosets(G, reps[k], reps[h]))))
            << name << " " << k << " " << h;
  }
}

TEST(BurnsideRingTest, ProductCyclic2)
{
  auto ring = make_burnside_ring(make_group(named_group("cyclic-2")));
  auto x = BurnsideElement::basis(ring, 0);
  auto y = burnside_multiply(x, x);
  EXPECT_EQ(y.coeffs, (std::vector<Rational>{2, 0}));
}

TEST(BurnsideRingTest, IdempotentsCyclic2)
{
  auto ring = make_burnside_ring(make_group(named_group("cyclic-2")));
  EXPECT_EQ(idempotent(ring, 0).coeffs, (std::vector<Rational>{Rational(1, 2), 0}));
  EXPECT_EQ(idempotent(ring, 1).coeffs, (std::vector<Rational>{Rational(-1, 2), 1}));
}

// The marks of e_H are the indicator of (H): compute them by hand from the
// coefficients and the coset counts.
TEST(BurnsideRingTest, IdempotentMarksAreIndicators)
{
  for (std::string name : {"symmetric-3", "dihedral-8", "alternating-4", "symmetric-4"}) {
    auto G = make_group(named_group(name));
    auto ring = make_burnside_ring(G);
    auto const &reps = ring->classes().representatives();
    for (std::size_t c = 0; c < reps.size(); ++c) {
      auto e = idempotent(ring, c);
      for (std::size_t h = 0; h < reps.size(); ++h) {
        Rational mark = 0;
        for (std::size_t k = 0; k < reps.size(); ++k)
          mark += e.coeffs[k] * static_cast<unsigned long>(fixed_cosets(G, reps[k], reps[h]));
        EXPECT_EQ(mark, Rational(h == c ? 1 : 0)) << name << " class " << c;
      }
    }
  }
}

TEST(BurnsideRingTest, MultiplicationIsMarkwise)
{
  auto ring = make_burnside_ring(make_group(named_group("dihedral-8")));
  for (std::size_t a = 0; a < ring->rank(); ++a)
    for (std::size_t b = 0; b < ring->rank(); ++b) {
      auto x = BurnsideElement::basis(ring, a), y = BurnsideElement::basis(ring, b);
      auto mx = marks_hom(x), my = marks_hom(y), mxy = marks_hom(burnside_multiply(x, y));
      for (std::size_t h = 0; h < ring->rank(); ++h)
        EXPECT_EQ(mxy[h], mx[h] * my[h]);
    }
}

TEST(BurnsideRingTest, RestrictionOfTransitiveSet)
{
  // res^{C2}_e [C2/e] = 2 [e/e]
  auto G = make_group(named_group("cyclic-2"));
  auto ring = make_burnside_ring(G);
  auto r = restriction(trivial_subgroup(G), BurnsideElement::basis(ring, 0));
  EXPECT_EQ(r.coeffs, (std::vector<Rational>{2}));
}

TEST(BurnsideRingTest, FamilyIdempotentOfWholeGroupIsUnit)
{
  auto G = make_group(named_group("quaternion-8"));
  auto ring = make_burnside_ring(G);
  EXPECT_EQ(family_idempotent(ring, whole_group(G), false), BurnsideElement::unit(ring));
  EXPECT_TRUE(family_idempotent(ring, trivial_subgroup(G), true).is_zero());
}
