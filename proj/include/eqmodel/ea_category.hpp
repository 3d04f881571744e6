#pragma once

#include <vector>

#include "eqmodel/dg_category.hpp"
#include "eqmodel/subgroup_lattice.hpp"

namespace eqmodel {

/// Combinatorics of E_a for a group W: object i is the permutation module
/// V_i = Q[W^i] (V_0 = Q), and E(i,j) = hom_Q(V_i, V_j)^W.
///
/// An equivariant map is a W-invariant function on W^i × W^j, so E(i,j) has
/// the basis of W-orbit indicators. A pair (x, y) is written as one tuple of
/// length i+j (source coordinates first); the orbit representative has first
/// coordinate e and the remaining i+j-1 coordinates, read base |W|, give the
/// basis index. Hence dim E(i,j) = |W|^{i+j-1} for i+j ≥ 1.
class EaStructure
{
public:
  EaStructure(GroupPtr W, int n_max);

  GroupPtr const &weyl() const { return w_; }
  int n_max() const { return n_max_; }
  std::size_t order() const { return w_->order(); }

  /// |W|^i
  std::size_t points(int i) const;
  std::size_t hom_dim(int i, int j) const;

  std::vector<std::size_t> point_tuple(int i, std::size_t p) const;
  std::size_t point_index(std::vector<std::size_t> const &t) const;
  /// g·p under the diagonal left action on W^i.
  std::size_t act_on_point(std::size_t g, int i, std::size_t p) const;

  /// Basis index of the orbit of (x, y).
  std::size_t orbit_index(std::vector<std::size_t> const &tuple) const;
  std::size_t orbit_index(int i, std::size_t x, int j, std::size_t y) const;
  /// Canonical representative (x, y) of basis element f of E(i,j).
  std::pair<std::size_t, std::size_t> representative(int i, int j, std::size_t f) const;

  /// f(x) in V_j for basis element f of E(i,j) and basis point x of V_i.
  SparseVec apply(int i, int j, std::size_t f, std::size_t x) const;
  /// Matrix of basis element f as a map V_i -> V_j.
  Matrix as_matrix(int i, int j, std::size_t f) const;

  SparseVec compose_basis(int i, int j, int k, std::size_t g, std::size_t f) const;
  SparseVec tensor_basis(int a, int b, int c, int d, std::size_t f, std::size_t g) const;
  SparseVec identity(int a) const;
  SparseVec symmetry(int a, int b) const;

  /// Basis element of E(1,1) acting as v ↦ v·w.
  std::size_t right_translation(std::size_t w) const;
  /// Basis element of E(1,i) acting as v ↦ v·s = (v s_1, …, v s_i) for the point s ∈ W^i.
  std::size_t translate_to(int i, std::size_t s) const;
  /// Basis element of E(1,0): the augmentation QW -> Q.
  std::size_t augmentation() const;

  /// V_i as a W-representation.
  GRepresentation object_rep(int i) const;

private:
  GroupPtr w_;
  int n_max_;
  std::vector<std::size_t> powers_;  // |W|^k
};

struct EaCategory
{
  CategoryPtr category;
  MonoidalDGStructure monoidal;
  std::shared_ptr<EaStructure const> structure;
};

/// E_a^H: the category above for W = W_G H, objects 0..n_max, with a⊗b = a+b
/// when a+b ≤ n_max.
EaCategory build_Ea(GroupPtr const &G, Subgroup const &H, int n_max);
/// Same construction straight from a group W.
EaCategory build_Ea_for_group(GroupPtr const &W, int n_max);

}  // namespace eqmodel
