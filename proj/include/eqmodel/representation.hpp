#pragma once

#include <memory>
#include <vector>

#include "eqmodel/linalg.hpp"
#include "eqmodel/perm_group.hpp"
#include "eqmodel/subgroup_lattice.hpp"

namespace eqmodel {

/// The group of order one, shared by every complex of plain rational vector spaces.
GroupPtr const &trivial_group();

/// A finite-dimensional rational representation of G, stored as one matrix
/// per generator. Matrices for other elements come from the group's fixed
/// breadth-first factorization and are cached on first use.
class GRepresentation
{
public:
  GRepresentation();
  /// Validates sizes and the homomorphism property (every generator times
  /// every element agrees with the multiplication table).
  GRepresentation(GroupPtr G, std::size_t dim, std::vector<Matrix> generator_action,
                  bool validate = true);

  static GRepresentation trivial(GroupPtr G, std::size_t dim);
  static GRepresentation regular(GroupPtr const &G);
  /// Permutation representation; images[k][p] is the image of point p
  /// under generator k.
  static GRepresentation permutation(GroupPtr G, std::size_t points,
                                     std::vector<std::vector<std::size_t>> const &images);
  /// Q[G/H] on left cosets.
  static GRepresentation on_cosets(GroupPtr const &G, Subgroup const &H);

  GroupPtr const &group() const;
  std::size_t dim() const;
  std::vector<Matrix> const &generator_action() const;

  Matrix const &action(std::size_t element) const;
  std::vector<Matrix> const &element_actions() const;

  bool same_group(GRepresentation const &other) const;

private:
  struct Data;
  std::shared_ptr<Data const> data_;
};

/// Diagonal action on V ⊗ W (Kronecker order: V index major).
GRepresentation tensor(GRepresentation const &v, GRepresentation const &w);
GRepresentation direct_sum(GRepresentation const &v, GRepresentation const &w);
/// hom_Q(V, W) with g·f = ρ_W(g) f ρ_V(g)^-1, maps vectorized column-major.
GRepresentation hom(GRepresentation const &v, GRepresentation const &w);
/// Restriction of the action to an invariant subspace with the given basis columns.
GRepresentation restrict_to(GRepresentation const &v, Matrix const &basis);
/// Induced action on V / (invariant subspace), given its cokernel data.
GRepresentation quotient_of(GRepresentation const &v, Cokernel const &q);

/// |G|^-1 Σ_g ρ(g), summed with an OpenMP reduction over group elements.
Matrix average_projector(GRepresentation const &v);
/// Same sum, single thread, in element order. Reference for the parallel kernel.
Matrix average_projector_serial(GRepresentation const &v);

/// Reduced column-echelon basis of V^G.
Matrix fixed_subspace_basis(GRepresentation const &v);
std::size_t fixed_dimension(GRepresentation const &v);

/// dim hom_G(V, W)
std::size_t equivariant_hom_dimension(GRepresentation const &v, GRepresentation const &w);

bool is_equivariant(Matrix const &f, GRepresentation const &source, GRepresentation const &target);

}  // namespace eqmodel
