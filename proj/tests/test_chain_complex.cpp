#include <gtest/gtest.h>

#include "eqmodel/chain_complex.hpp"
#include "eqmodel/random_objects.hpp"

using namespace eqmodel;

namespace {

GroupPtr group(std::string const &name)
{
  return make_group(named_group(name));
}

bool squares_to_zero(ChainComplex const &x)
{
  for (int n = x.lo() + 2; n <= x.hi(); ++n)
    if (!(x.differential(n - 1) * x.differential(n)).is_zero())
      return false;
  return true;
}

}  // namespace

TEST(RepresentationTest, AverageProjectorCyclic2)
{
  auto P = average_projector(GRepresentation::regular(group("cyclic-2")));
  Rational h(1, 2);
  EXPECT_EQ(P, Matrix::from_dense({{h, h}, {h, h}}));
}

TEST(RepresentationTest, ParallelProjectorMatchesSerial)
{
  for (std::string name : {"symmetric-3", "quaternion-8", "symmetric-4"}) {
    auto G = group(name);
    auto v = tensor(GRepresentation::regular(G), GRepresentation::on_cosets(G, trivial_subgroup(G)));
    EXPECT_EQ(average_projector(v), average_projector_serial(v)) << name;
  }
}

// dim V^G = (1/|G|) Σ_g trace ρ(g)
TEST(RepresentationTest, FixedDimensionIsAverageTrace)
{
  auto G = group("alternating-4");
  ConjugacyClassTable t(G);
  for (auto const &H : t.representatives()) {
    auto v = tensor(GRepresentation::on_cosets(G, H), GRepresentation::on_cosets(G, H));
    Rational trace = 0;
    for (std::size_t g = 0; g < G->order(); ++g)
      for (std::size_t i = 0; i < v.dim(); ++i)
        trace += v.action(g).at(i, i);
    trace /= static_cast<unsigned long>(G->order());
    EXPECT_EQ(Rational(static_cast<unsigned long>(fixed_dimension(v))), trace);
  }
}

TEST(ChainComplexTest, Sphere)
{
  auto s = sphere(group("cyclic-2"), 3);
  EXPECT_EQ(s.dims(), (GradedDims{{3, 2}}));
  EXPECT_EQ(s.term(3).action(1), Matrix::from_dense({{0, 1}, {1, 0}}));
}

TEST(ChainComplexTest, FixedPointsOfRegularSphere)
{
  EXPECT_EQ(fixed_points(sphere(group("cyclic-2"), 0)).dims(), (GradedDims{{0, 1}}));
}

TEST(ChainComplexTest, HomotopyEndomorphismsOfRegularSphere)
{
  auto s = sphere(group("cyclic-2"), 0);
  EXPECT_EQ(homotopy_hom(s, s), (GradedDims{{0, 2}}));
}

TEST(ChainComplexTest, DiskIsAcyclicAndSoIsItsTensor)
{
  auto G = group("symmetric-3");
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    auto X = random_complex(G, rng);
    EXPECT_TRUE(tensor(disk(G, 1), X).is_acyclic());
    EXPECT_TRUE(tensor(disk(trivial_group(), 2), fixed_points(X)).is_acyclic());
  }
}

TEST(ChainComplexTest, TensorAndHomSquareToZero)
{
  auto G = group("klein-4");
  Rng rng(5);
  for (int k = 0; k < 10; ++k) {
    auto X = random_complex(G, rng), Y = random_complex(G, rng);
    EXPECT_TRUE(squares_to_zero(tensor(X, Y)));
    EXPECT_TRUE(squares_to_zero(hom_complex(X, Y)));
  }
}

// Künneth over Q: dims of H(X⊗Y) are the convolution of the homology dims.
TEST(ChainComplexTest, Kunneth)
{
  auto G = group("cyclic-3");
  Rng rng(9);
  for (int k = 0; k < 10; ++k) {
    auto X = random_complex(G, rng), Y = random_complex(G, rng);
    GradedDims expect;
    for (auto [i, a] : homology_dims(X))
      for (auto [j, b] : homology_dims(Y))
        expect[i + j] += a * b;
    EXPECT_EQ(homology_dims(tensor(X, Y)), expect);
  }
}

TEST(ChainComplexTest, SymmetryIsInvolution)
{
  auto G = group("cyclic-2");
  Rng rng(1);
  auto X = random_complex(G, rng), Y = random_complex(G, rng);
  auto s = symmetry(X, Y), t = symmetry(Y, X);
  EXPECT_EQ(t * s, ChainMap::identity(tensor(X, Y)));
}

TEST(ChainComplexTest, ChainMapValidation)
{
  auto G = group("cyclic-2");
  auto s = sphere(G, 0);
  // swapping coordinates is equivariant, a projection onto one is not
  EXPECT_NO_THROW(ChainMap(s, s, {Matrix::from_dense({{0, 1}, {1, 0}})}));
  EXPECT_THROW(ChainMap(s, s, {Matrix::from_dense({{1, 0}, {0, 0}})}), Error);
}

TEST(ChainComplexTest, ConnectiveCoverAndTruncation)
{
  auto X = ChainComplex::of_vector_spaces(-1, {1, 2, 1}, {Matrix::from_dense({{1, 0}}), Matrix(2, 1)});
  EXPECT_EQ(homology_dims(X), (GradedDims{{0, 1}, {1, 1}}));
  auto c = connective_cover(X);
  EXPECT_EQ(c.complex.dims(), (GradedDims{{0, 1}, {1, 1}}));
  EXPECT_TRUE(is_homology_isomorphism(c.map));
  auto h = h0_truncation(c.complex);
  EXPECT_EQ(homology_dims(h.complex), (GradedDims{{0, 1}}));
}

TEST(ChainComplexTest, PushoutProductOfGeneratingCofibrations)
{
  auto G = group("symmetric-3");
  auto pp = pushout_product(generating_cofibration(G, 1), generating_cofibration(G, 1));
  auto q = cokernel(pp).complex;
  EXPECT_EQ(q.total_dim(), 36u);
  EXPECT_EQ(q.dims(), (GradedDims{{2, 36}}));
}

TEST(ChainComplexTest, GradedFixedHomAgreesWithHomComplex)
{
  auto G = group("dihedral-8");
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    auto X = random_complex(G, rng), Y = random_complex(G, rng);
    EXPECT_EQ(graded_fixed_hom_dims(X, Y), homotopy_hom(X, Y));
  }
}

// f ◇ (0 -> D^n QG): both ends are acyclic and the map is injective.
TEST(ChainComplexTest, PushoutProductWithAcyclicCofibration)
{
  auto G = group("cyclic-3");
  for (int k = 0; k < 3; ++k) {
    auto pp = pushout_product(generating_cofibration(G, k), generating_acyclic_cofibration(G, 1));
    EXPECT_GT(pp.source().total_dim(), 0u);
    EXPECT_TRUE(pp.source().is_acyclic());
    EXPECT_TRUE(pp.target().is_acyclic());
    for (int n = pp.source().lo(); n <= pp.source().hi(); ++n)
      if (pp.source().dim(n) > 0)
        EXPECT_EQ(rank(pp.component(n)), pp.source().dim(n));
  }
}
