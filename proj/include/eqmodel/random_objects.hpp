#pragma once

#include <cstdint>
#include <random>

#include "eqmodel/algebraic_model.hpp"
#include "eqmodel/dg_modules.hpp"

namespace eqmodel {

using Rng = std::mt19937_64;

struct RandomComplexOptions
{
  std::size_t max_dim = 6;  // per degree
  int max_window = 5;       // number of degrees
  int min_degree = -2;
  int max_degree = 2;       // lowest degree is drawn from [min_degree, max_degree]
};

/// A bounded complex of QW-modules: spheres and disks on permutation modules
/// Q[W/K] (index ≤ 6), with every degree then twisted by a random
/// equivariant automorphism so that the differentials are not block-diagonal.
ChainComplex random_complex(GroupPtr const &W, Rng &rng, RandomComplexOptions const &opt = {});

/// A complex of vector spaces of total dimension 1 or 2 in degrees -1..1.
ChainComplex random_small_complex(Rng &rng);

struct RandomCategory
{
  CategoryPtr category;
  std::vector<ChainComplex> objects;
};
/// Full subcategory of Ch(Q) on 1-3 small complexes (hom dims ≤ 4).
RandomCategory random_category(Rng &rng);

/// a ↦ hom(X_a, Y), acting by precomposition.
DGModule hom_module(RandomCategory const &C, ChainComplex const &Y);
/// A represented hom module, a free module, or a direct sum of two of these.
DGModule random_module(RandomCategory const &C, Rng &rng);

/// underhom(Y) for random Y, F_0 or F_1.
DGModule random_ea_module(CategoryPtr const &E, Rng &rng, RandomComplexOptions const &opt = {});

/// One random complex per class.
ModelObject random_model_object(AlgebraicModel const &model, Rng &rng, RandomComplexOptions const &opt = {});

}  // namespace eqmodel
