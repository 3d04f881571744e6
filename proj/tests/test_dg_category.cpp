#include <gtest/gtest.h>

#include "eqmodel/dg_category.hpp"
#include "eqmodel/random_objects.hpp"

using namespace eqmodel;

TEST(DGCategoryTest, ChainComplexCategoryIsACategory)
{
  Rng rng(21);
  for (int k = 0; k < 5; ++k) {
    std::vector<ChainComplex> objs{random_small_complex(rng), random_small_complex(rng),
                                   random_small_complex(rng)};
    auto E = chain_complex_category(objs);
    auto r = check_category(*E, k);
    EXPECT_TRUE(r.passed()) << r.first_failure();
  }
}

TEST(DGCategoryTest, RandomCategoriesAreCategories)
{
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(s);
    auto C = random_category(rng);
    auto r = check_category(*C.category, s);
    EXPECT_TRUE(r.passed()) << r.first_failure();
  }
}

TEST(DGCategoryTest, IdentityFunctorIsQuasiIsomorphism)
{
  Rng rng(4);
  auto C = random_category(rng);
  auto F = identity_functor(C.category);
  EXPECT_TRUE(check_functor(F).passed());
  EXPECT_TRUE(is_quasi_isomorphism(F));
}

// Homology of hom(X, X) for X = Q in degrees 0 and 1 sits in degrees -1, 0, 1.
TEST(DGCategoryTest, ConnectiveCoverDetectsNegativeHomology)
{
  auto X = ChainComplex::of_vector_spaces(0, {1, 1}, {Matrix(1, 1)});
  auto E = chain_complex_category({X});
  EXPECT_EQ(homology_dims(E->hom(0, 0)), (GradedDims{{-1, 1}, {0, 2}, {1, 1}}));
  auto zz = connective_cover_category(E);
  EXPECT_FALSE(is_quasi_isomorphism(zz.inclusion));
}

TEST(DGCategoryTest, ConnectiveCoverOfConnectiveCategory)
{
  // X concentrated in degree 0: hom homology lives in degree 0 only.
  auto X = ChainComplex::of_vector_spaces(0, {2}, {});
  auto E = chain_complex_category({X});
  auto zz = connective_cover_category(E);
  EXPECT_TRUE(is_quasi_isomorphism(zz.inclusion));
  EXPECT_TRUE(is_quasi_isomorphism(zz.to_homology));
  EXPECT_TRUE(check_category(*homology_category(E)).passed());
}

TEST(DGCategoryTest, ReportNamesFirstFailure)
{
  Report r;
  r.checks.push_back({"a", true, 3, ""});
  r.checks.push_back({"b", false, 2, "objects (0,1)"});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure(), "b: objects (0,1)");
}
