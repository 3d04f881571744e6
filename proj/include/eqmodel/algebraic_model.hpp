#pragma once

#include <vector>

#include "eqmodel/burnside_ring.hpp"
#include "eqmodel/ea_category.hpp"

namespace eqmodel {

/// Groups above this order are refused by build_model.
inline constexpr std::size_t kMaxModelGroupOrder = 120;
/// Largest hom dimension |W|^{2 n_max - 1} a factor may have.
inline constexpr std::size_t kMaxEaHomDim = std::size_t(1) << 24;

/// One factor Ch(QW_GH-mod) of the model, for one conjugacy class (H).
struct ModelFactor
{
  Subgroup subgroup;   // class representative H
  GroupPtr weyl;       // W_G H
  EaCategory ea;       // E_a^H
  BurnsideElement idempotent;  // e_H
};

/// ∏_{(H) ≤ G} Ch(QW_GH-mod), factors in class order.
struct AlgebraicModel
{
  GroupPtr group;
  int n_max = 0;
  BurnsideRingPtr burnside;
  std::vector<ModelFactor> factors;
};

/// Factors are built in parallel across classes.
AlgebraicModel build_model(GroupPtr const &G, int n_max);
/// Same, one class after another. Reference for the parallel version.
AlgebraicModel build_model_serial(GroupPtr const &G, int n_max);

/// One factor per class, |W| = |N_G H|/|H|, idempotents orthogonal and summing to 1.
Report check_model(AlgebraicModel const &model);

/// An object of the model: one complex per class, over that class's Weyl group.
struct ModelObject
{
  std::vector<ChainComplex> components;
};

/// Throws InvalidInputError unless X has one component per class over the right group.
void check_shape(AlgebraicModel const &model, ModelObject const &X);

/// QW_GH in degree 0 at class `cls`, zero elsewhere.
ModelObject unit_at(AlgebraicModel const &model, std::size_t cls);
/// QW_GH in degree 0 at every class.
ModelObject model_unit(AlgebraicModel const &model);

struct HomotopyClasses
{
  std::vector<GradedDims> per_class;
  GradedDims total;
};

/// Per class, graded dims of hom(H_*(X_H), H_*(Y_H))^{W_GH}, and their sum.
HomotopyClasses homotopy_classes(AlgebraicModel const &model, ModelObject const &X, ModelObject const &Y);
/// The same numbers via H_*(hom(X_H, Y_H)^{W_GH}).
HomotopyClasses homotopy_classes_via_hom_complex(AlgebraicModel const &model, ModelObject const &X,
                                                 ModelObject const &Y);

/// The degree-0 endomorphisms E(1,1) of the generator against QW.
struct EndomorphismReport
{
  std::size_t cls = 0;
  std::size_t weyl_order = 0;
  std::size_t dimension = 0;
  bool basis_bijective = false;  // w ↦ R_{w^-1} hits every basis vector once
  bool table_matches = false;    // R_{a^-1} ∘ R_{b^-1} = R_{(ab)^-1}, via compose and via matrices
  std::string detail;

  bool passed() const { return dimension == weyl_order && basis_bijective && table_matches; }
};
EndomorphismReport endomorphism_check(AlgebraicModel const &model, std::size_t cls);

}  // namespace eqmodel
