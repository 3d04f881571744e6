#include <gtest/gtest.h>

#include "eqmodel/algebraic_model.hpp"
#include "eqmodel/random_objects.hpp"

using namespace eqmodel;

TEST(AlgebraicModelTest, ParallelMatchesSerial)
{
  for (std::string name : {"dihedral-8", "alternating-4"}) {
    auto G = make_group(named_group(name));
    auto a = build_model(G, 2), b = build_model_serial(G, 2);
    ASSERT_EQ(a.factors.size(), b.factors.size());
    for (std::size_t c = 0; c < a.factors.size(); ++c) {
      EXPECT_EQ(a.factors[c].subgroup, b.factors[c].subgroup);
      EXPECT_EQ(*a.factors[c].weyl, *b.factors[c].weyl);
      EXPECT_EQ(a.factors[c].idempotent, b.factors[c].idempotent);
    }
  }
}

TEST(AlgebraicModelTest, ModelChecks)
{
  auto model = build_model(make_group(named_group("symmetric-3")), 2);
  auto r = check_model(model);
  EXPECT_TRUE(r.passed()) << r.first_failure();
  std::vector<std::size_t> orders;
  for (auto const &f : model.factors)
    orders.push_back(f.weyl->order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{6, 1, 2, 1}));
}

TEST(AlgebraicModelTest, UnitEndomorphisms)
{
  auto model = build_model(make_group(named_group("klein-4")), 1);
  auto U = model_unit(model);
  auto h = homotopy_classes(model, U, U);
  EXPECT_EQ(h.total, (GradedDims{{0, 4 + 2 + 2 + 2 + 1}}));
}

TEST(AlgebraicModelTest, ShapeIsChecked)
{
  auto model = build_model(make_group(named_group("cyclic-2")), 1);
  ModelObject X{{sphere(model.factors[0].weyl, 0)}};
  EXPECT_THROW(check_shape(model, X), InvalidInputError);
  X.components.push_back(sphere(make_group(named_group("cyclic-3")), 0));
  EXPECT_THROW(check_shape(model, X), InvalidInputError);
}

TEST(AlgebraicModelTest, HomotopyClassesAgreeBothWays)
{
  auto model = build_model(make_group(named_group("cyclic-4")), 1);
  Rng rng(31);
  for (int k = 0; k < 10; ++k) {
    auto X = random_model_object(model, rng), Y = random_model_object(model, rng);
    auto a = homotopy_classes(model, X, Y), b = homotopy_classes_via_hom_complex(model, X, Y);
    EXPECT_EQ(a.total, b.total);
    EXPECT_EQ(a.per_class, b.per_class);
  }
}

TEST(AlgebraicModelTest, EndomorphismCheck)
{
  auto model = build_model(make_group(named_group("quaternion-8")), 1);
  for (std::size_t c = 0; c < model.factors.size(); ++c) {
    auto r = endomorphism_check(model, c);
    EXPECT_TRUE(r.passed()) << c << " " << r.detail;
  }
}

TEST(AlgebraicModelTest, RefusesLargeGroups)
{
  EXPECT_THROW(build_model(make_group(named_group("symmetric-5")), 3), Error);
}
