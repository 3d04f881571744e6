#include <gtest/gtest.h>

#include "eqmodel/dg_modules.hpp"
#include "eqmodel/random_objects.hpp"

using namespace eqmodel;

namespace {

GroupPtr group(std::string const &name)
{
  return make_group(named_group(name));
}

std::vector<GradedDims> value_dims(DGModule const &M)
{
  std::vector<GradedDims> out;
  for (int a = 0; a < M.size(); ++a)
    out.push_back(M.value(a).dims());
  return out;
}

}  // namespace

TEST(DGModuleTest, FreeModuleDims)
{
  auto G = group("symmetric-3");
  ConjugacyClassTable t(G);
  auto ea = build_Ea(G, t.representative(2), 2);  // W = C2
  auto F1 = free_module(ea.category, 1);
  EXPECT_EQ(value_dims(F1), (std::vector<GradedDims>{{{0, 1}}, {{0, 2}}, {{0, 4}}}));
  EXPECT_TRUE(check_module(F1).passed());
  EXPECT_THROW(free_module(ea.category, 3), InvalidInputError);
}

TEST(DGModuleTest, GeneratorTensorOfF1IsRegular)
{
  auto W = group("cyclic-2");
  auto ea = build_Ea_for_group(W, 2);
  auto T = tensor_with_generators(free_module(ea.category, 1));
  ASSERT_EQ(T.dims(), (GradedDims{{0, 2}}));
  EXPECT_EQ(T.term(0).action(1), Matrix::from_dense({{0, 1}, {1, 0}}));
}

TEST(DGModuleTest, UnderhomOfRegularSphere)
{
  for (std::string name : {"cyclic-3", "symmetric-3"}) {
    auto W = group(name);
    auto ea = build_Ea_for_group(W, 2);
    auto U = underhom_generators(sphere(W, 0), ea.category);
    EXPECT_EQ(U.value(1).dims(), (GradedDims{{0, W->order()}}));
    EXPECT_EQ(U.value(0).dims(), (GradedDims{{0, 1}}));
    EXPECT_TRUE(check_module(U).passed());
  }
}

TEST(DGModuleTest, UnderhomRejectsOtherGroups)
{
  auto ea = build_Ea_for_group(group("cyclic-3"), 1);
  EXPECT_THROW(underhom_generators(sphere(group("cyclic-2"), 0), ea.category), InvalidInputError);
}

TEST(DGModuleTest, CounitIsHomologyIsomorphism)
{
  auto W = group("klein-4");
  auto ea = build_Ea_for_group(W, 1);
  Rng rng(17);
  for (int k = 0; k < 10; ++k)
    EXPECT_TRUE(is_homology_isomorphism(counit(random_complex(W, rng), ea.category)));
}

TEST(DGModuleTest, CoYonedaOnRandomModules)
{
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(s);
    auto C = random_category(rng);
    auto M = random_module(C, rng);
    for (int b = 0; b < C.category->size(); ++b) {
      auto coend = coyoneda_coend(M, b);
      EXPECT_EQ(coend.complex().dims(), M.value(b).dims());
      EXPECT_TRUE(is_homology_isomorphism(coyoneda_map(M, b, coend)));
    }
  }
}

// One object with hom Q: the coend of F is F(•,•) itself.
TEST(DGModuleTest, CoendOverPoint)
{
  auto X = ChainComplex::of_vector_spaces(0, {2}, {});
  auto E = chain_complex_category({ChainComplex::of_vector_spaces(0, {1}, {})});
  Bifunctor F{E, {0}, [&](int, int) { return X; },
              [](int, int, int, std::size_t x, std::size_t phi) { return SparseVec::unit(x, phi == 0 ? 1 : 0); },
              [](int, int, int, std::size_t phi, std::size_t x) { return SparseVec::unit(x, phi == 0 ? 1 : 0); }};
  Coend c(F);
  EXPECT_EQ(c.complex().dims(), (GradedDims{{0, 2}}));
}

TEST(DGModuleTest, BoxProductOfFreeModules)
{
  auto ea = build_Ea_for_group(group("cyclic-3"), 2);
  ReducedBox box(free_module(ea.category, 1), free_module(ea.category, 1));
  for (int a = 0; a <= 2; ++a)
    EXPECT_EQ(box.at(a).dims(), ea.category->hom(a, 2).dims()) << a;
  auto r = check_monoidality(box);
  EXPECT_TRUE(r.passed()) << r.first_failure();
}

TEST(DGModuleTest, BoxNeedsTwoGenerators)
{
  auto ea = build_Ea_for_group(group("cyclic-2"), 1);
  EXPECT_THROW(ReducedBox(free_module(ea.category, 0), free_module(ea.category, 1)), TruncationError);
}

TEST(DGModuleTest, FullBoxProductMatchesReduction)
{
  auto ea = build_Ea_for_group(group("cyclic-2"), 2);
  Rng rng(8);
  auto M = random_ea_module(ea.category, rng), N = random_ea_module(ea.category, rng);
  ReducedBox box(M, N);
  auto full = box_product_over(M, N, ea.monoidal, {0, 1});
  for (int a = 0; a <= 2; ++a)
    EXPECT_EQ(box.at(a).dims(), full.value(a).dims());
  EXPECT_THROW(box_product_over(M, N, ea.monoidal, {0, 1, 2}), TruncationError);
}

TEST(DGModuleTest, UnitOnFreeModule)
{
  auto ea = build_Ea_for_group(group("symmetric-3"), 2);
  auto F = std::make_shared<DGModule const>(free_module(ea.category, 1));
  auto u = unit(F);
  EXPECT_TRUE(check_module_map(u).passed());
  EXPECT_TRUE(is_weak_equivalence(u));
}

TEST(DGModuleTest, ModuleMapsOutOfFreeModuleAreValues)
{
  // Yoneda: maps F_a -> N are the degree-0 cycles of N(a).
  auto W = group("cyclic-2");
  auto ea = build_Ea_for_group(W, 1);
  Rng rng(2);
  auto X = random_complex(W, rng);
  auto U = underhom_generators(X, ea.category);
  for (int a = 0; a <= 1; ++a) {
    auto const &v = U.value(a);
    std::size_t cycles = v.dim(0) - (v.dim(0) ? rank(v.differential(0)) : 0);
    EXPECT_EQ(module_map_dimension(free_module(ea.category, a), U), cycles);
  }
}

TEST(DGModuleTest, DirectSumDims)
{
  auto ea = build_Ea_for_group(group("cyclic-2"), 1);
  auto S = direct_sum(free_module(ea.category, 0), free_module(ea.category, 1));
  EXPECT_EQ(value_dims(S), (std::vector<GradedDims>{{{0, 2}}, {{0, 3}}}));
  EXPECT_TRUE(check_module(S).passed());
}
