#include <gtest/gtest.h>

#include "eqmodel/ea_category.hpp"

using namespace eqmodel;

namespace {

GroupPtr group(std::string const &name)
{
  return make_group(named_group(name));
}

// Expand a combination of basis maps into a matrix V_i -> V_j.
Matrix as_matrix(EaStructure const &S, int i, int j, SparseVec const &f)
{
  Matrix out(S.points(j), S.points(i));
  for (auto const &[b, c] : f.entries())
    out = out + S.as_matrix(i, j, b).scaled(c);
  return out;
}

}  // namespace

TEST(EaCategoryTest, HomDimensions)
{
  auto ea = build_Ea_for_group(group("symmetric-3"), 2);
  auto const &S = *ea.structure;
  EXPECT_EQ(S.hom_dim(0, 0), 1u);
  EXPECT_EQ(S.hom_dim(0, 1), 1u);
  EXPECT_EQ(S.hom_dim(1, 1), 6u);
  EXPECT_EQ(S.hom_dim(2, 1), 36u);
  EXPECT_EQ(ea.category->hom(2, 2).dims(), (GradedDims{{0, 216}}));
}

// dim E(i,j) = dim hom(V_i, V_j)^W computed from the permutation characters.
TEST(EaCategoryTest, HomDimensionIsEquivariantHomDimension)
{
  for (std::string name : {"cyclic-3", "klein-4", "symmetric-3"}) {
    auto ea = build_Ea_for_group(group(name), 2);
    auto const &S = *ea.structure;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        EXPECT_EQ(S.hom_dim(i, j), equivariant_hom_dimension(S.object_rep(i), S.object_rep(j)))
            << name << " " << i << " " << j;
  }
}

TEST(EaCategoryTest, BasisMapsAreEquivariant)
{
  auto ea = build_Ea_for_group(group("symmetric-3"), 2);
  auto const &S = *ea.structure;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (std::size_t f = 0; f < S.hom_dim(i, j); ++f)
        ASSERT_TRUE(is_equivariant(S.as_matrix(i, j, f), S.object_rep(i), S.object_rep(j)));
}

// Composition by orbit counting against multiplying the matrices.
TEST(EaCategoryTest, CompositionMatchesMatrixProduct)
{
  for (std::string name : {"cyclic-2", "cyclic-3", "symmetric-3"}) {
    auto ea = build_Ea_for_group(group(name), 2);
    auto const &S = *ea.structure;
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) {
          if (S.hom_dim(i, j) * S.hom_dim(j, k) > 2000)
            continue;
          for (std::size_t f = 0; f < S.hom_dim(i, j); ++f)
            for (std::size_t g = 0; g < S.hom_dim(j, k); ++g)
              ASSERT_EQ(as_matrix(S, i, k, S.compose_basis(i, j, k, g, f)), S.as_matrix(j, k, g) * S.as_matrix(i, j, f))
                  << name << " " << i << j << k << " g=" << g << " f=" << f;
        }
  }
}

TEST(EaCategoryTest, IdentityIsIdentityMatrix)
{
  auto ea = build_Ea_for_group(group("quaternion-8"), 2);
  for (int a = 0; a <= 2; ++a)
    EXPECT_TRUE(as_matrix(*ea.structure, a, a, ea.structure->identity(a)).is_identity());
}

TEST(EaCategoryTest, RightTranslationsComposeContravariantly)
{
  auto W = group("symmetric-3");
  auto ea = build_Ea_for_group(W, 1);
  auto const &S = *ea.structure;
  for (std::size_t a = 0; a < W->order(); ++a)
    for (std::size_t b = 0; b < W->order(); ++b)
      EXPECT_EQ(S.compose_basis(1, 1, 1, S.right_translation(a), S.right_translation(b)),
                SparseVec::unit(S.right_translation(W->multiply(b, a))));
}

TEST(EaCategoryTest, AugmentationAndTranslation)
{
  auto W = group("cyclic-3");
  auto ea = build_Ea_for_group(W, 2);
  auto const &S = *ea.structure;
  Matrix aug = S.as_matrix(1, 0, S.augmentation());
  EXPECT_EQ(aug, Matrix::from_dense({{1, 1, 1}}));
  // v ↦ (v s1, v s2) sends e to the point s itself
  for (std::size_t s = 0; s < S.points(2); ++s)
    EXPECT_EQ(S.apply(1, 2, S.translate_to(2, s), FiniteGroup::kIdentity), SparseVec::unit(s));
}

TEST(EaCategoryTest, StructureChecks)
{
  auto ea = build_Ea_for_group(group("klein-4"), 2);
  auto c = check_category(*ea.category, 1);
  EXPECT_TRUE(c.passed()) << c.first_failure();
  auto m = check_monoidal(*ea.category, ea.monoidal, 1);
  EXPECT_TRUE(m.passed()) << m.first_failure();
  EXPECT_FALSE(ea.monoidal.tensor_objects(1, 2).has_value());
}

TEST(EaCategoryTest, WeylGroupOfSubgroup)
{
  auto G = group("symmetric-3");
  ConjugacyClassTable t(G);
  auto ea = build_Ea(G, t.representative(2), 2);  // C3, W = C2
  EXPECT_EQ(ea.structure->order(), 2u);
  EXPECT_EQ(ea.category->hom(2, 1).dims(), (GradedDims{{0, 4}}));
}
