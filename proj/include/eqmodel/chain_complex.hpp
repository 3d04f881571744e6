#pragma once

#include <map>
#include <memory>
#include <vector>

#include "eqmodel/linalg.hpp"
#include "eqmodel/representation.hpp"

namespace eqmodel {

/// Graded dimensions with zero entries omitted.
using GradedDims = std::map<int, std::size_t>;

/// A bounded chain complex of rational G-representations.
///
/// Terms live in the window [lo, hi]; everything outside is zero. The
/// differential d_n maps degree n to degree n-1. Basis vectors of the whole
/// complex are numbered degree by degree from lo upwards (see offset()).
class ChainComplex
{
public:
  /// The zero complex over the trivial group.
  ChainComplex();
  /// `differentials[k]` is d_{lo+k+1}. Validates d∘d = 0 and equivariance
  /// unless `validate` is false.
  ChainComplex(GroupPtr G, int lo, std::vector<GRepresentation> terms,
               std::vector<Matrix> differentials, bool validate = true);

  static ChainComplex zero(GroupPtr G);
  static ChainComplex concentrated(GRepresentation const &term, int degree);
  /// Complex of plain vector spaces from dimensions and differentials.
  static ChainComplex of_vector_spaces(int lo, std::vector<std::size_t> dims,
                                       std::vector<Matrix> differentials, bool validate = true);

  GroupPtr const &group() const { return data_->group; }
  int lo() const { return data_->lo; }
  int hi() const { return data_->lo + static_cast<int>(data_->terms.size()) - 1; }
  bool empty() const { return data_->terms.empty(); }

  std::size_t dim(int n) const;
  GradedDims dims() const;
  std::size_t total_dim() const { return data_->total; }
  /// Global index of the first basis vector in degree n.
  std::size_t offset(int n) const;
  int degree_of(std::size_t global_index) const;

  /// Zero representation outside the window.
  GRepresentation term(int n) const;
  /// d_n: X_n -> X_{n-1}; a correctly sized zero matrix outside the window.
  Matrix differential(int n) const;

  bool is_acyclic() const;
  bool has_zero_differential() const;

private:
  struct Data
  {
    GroupPtr group;
    int lo = 0;
    std::vector<GRepresentation> terms;
    std::vector<Matrix> differentials;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
  };
  std::shared_ptr<Data const> data_;
};

/// A degree-preserving equivariant chain map.
class ChainMap
{
public:
  ChainMap() = default;
  /// components[k] is f_{source.lo()+k}. Validates shapes, f d = d f and
  /// equivariance unless `validate` is false.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components,
           bool validate = true);

  static ChainMap identity(ChainComplex const &x);
  static ChainMap zero(ChainComplex const &source, ChainComplex const &target);

  ChainComplex const &source() const { return source_; }
  ChainComplex const &target() const { return target_; }
  /// f_n, zero outside the source window.
  Matrix component(int n) const;

  /// Apply to a vector in the global basis of the source.
  SparseVec apply(SparseVec const &x) const;

  friend ChainMap operator*(ChainMap const &g, ChainMap const &f);
  friend bool operator==(ChainMap const &a, ChainMap const &b);

  bool is_chain_map() const;
  bool is_equivariant() const;

private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<Matrix> components_;
};

/// dX applied to a vector in the global basis.
SparseVec boundary(ChainComplex const &x, SparseVec const &v);
/// The degree-n part of a global vector, in the local basis of X_n.
SparseVec degree_part(ChainComplex const &x, SparseVec const &v, int n);
/// Local vector of X_n placed in the global basis.
SparseVec from_degree(ChainComplex const &x, SparseVec const &local, int n);

// Constructions ---------------------------------------------------------------

/// QG in degree n.
ChainComplex sphere(GroupPtr const &G, int n);
/// QG in degrees n and n-1 joined by the identity.
ChainComplex disk(GroupPtr const &G, int n);
/// S^{n-1}QG -> D^nQG
ChainMap generating_cofibration(GroupPtr const &G, int n);
/// 0 -> D^nQG
ChainMap generating_acyclic_cofibration(GroupPtr const &G, int n);

ChainComplex direct_sum(ChainComplex const &x, ChainComplex const &y);
/// (X[k])_n = X_{n-k} with differential (-1)^k d.
ChainComplex shift(ChainComplex const &x, int k);

/// Diagonal action; ∂(x⊗y) = ∂x⊗y + (-1)^|x| x⊗∂y. Degree n is the direct
/// sum of X_i ⊗ Y_{n-i} over increasing i.
ChainComplex tensor(ChainComplex const &x, ChainComplex const &y);
ChainMap tensor(ChainMap const &f, ChainMap const &g);

/// Index bookkeeping for the basis of tensor(X, Y): basis vector x_i ⊗ y_j.
class TensorBasis
{
public:
  TensorBasis(ChainComplex x, ChainComplex y);

  ChainComplex const &complex() const { return product_; }
  /// Global index of x⊗y for global basis indices of X and Y.
  std::size_t index(std::size_t ix, std::size_t iy) const;
  std::pair<std::size_t, std::size_t> split(std::size_t index) const;
  /// Bilinear extension of index(); no signs.
  SparseVec combine(SparseVec const &x, SparseVec const &y) const;

private:
  ChainComplex x_, y_, product_;
  std::map<std::pair<int, int>, std::size_t> block_offset_;  // (n, i) -> offset in degree n
};
/// x⊗y ↦ (-1)^{|x||y|} y⊗x
ChainMap symmetry(ChainComplex const &x, ChainComplex const &y);

/// hom_Q(X, Y)_n = ∏_k hom(X_k, Y_{n+k}), (∂f) = ∂f - (-1)^|f| f∂, conjugation action.
/// Degree n is the direct sum over increasing k; each block is vectorized column-major.
ChainComplex hom_complex(ChainComplex const &x, ChainComplex const &y);
/// Index bookkeeping for hom_complex(X, Y). Basis vectors are matrix units
/// sending one basis vector of X_k to one basis vector of Y_{n+k}.
class HomBasis
{
public:
  struct Unit
  {
    int degree;         // n
    int source_degree;  // k
    std::size_t row;    // local index in Y_{n+k}
    std::size_t col;    // local index in X_k
  };

  HomBasis(ChainComplex x, ChainComplex y);

  ChainComplex const &complex() const { return hom_; }
  ChainComplex const &source() const { return x_; }
  ChainComplex const &target() const { return y_; }
  Unit decode(std::size_t index) const;
  std::size_t encode(Unit const &u) const;
  /// f(x) for f in hom(X, Y) and x in X, both in global bases.
  SparseVec apply(SparseVec const &f, SparseVec const &x) const;

private:
  ChainComplex x_, y_, hom_;
  std::map<std::pair<int, int>, std::size_t> block_offset_;  // (n, k) -> offset in degree n
};

/// Composition hom(Y, Z) ⊗ hom(X, Y) -> hom(X, Z) on matrix units.
SparseVec compose_units(HomBasis const &yz, HomBasis const &xy, HomBasis const &xz,
                        std::size_t g, std::size_t f);

/// φ ↦ g ∘ φ ∘ f for f: X' -> X, g: Y -> Y'.
ChainMap hom_map(ChainMap const &f, ChainMap const &g);

struct FixedPoints
{
  ChainComplex complex;            // over the trivial group
  std::map<int, Matrix> inclusion; // basis of X_n^G inside X_n
};
FixedPoints fixed_points_with_inclusion(ChainComplex const &x);
ChainComplex fixed_points(ChainComplex const &x);

/// ε*: the same complex with every group element acting as the identity.
ChainComplex trivial_action(ChainComplex const &m, GroupPtr const &G);
/// ε*(M) ⊗ X
ChainComplex tensor_ch_over_base(ChainComplex const &m, ChainComplex const &x);

/// Homology in one degree: H_n = ker d_n / im d_{n+1}.
struct HomologyDegree
{
  GRepresentation rep;       // induced action on H_n
  Matrix cycles;             // basis of ker d_n (columns)
  Matrix representatives;    // cycle representing each homology basis vector
  Matrix quotient;           // cycle coordinates -> homology coordinates

  /// Homology class of a cycle given in the basis of X_n.
  SparseVec project(SparseVec const &cycle) const;
};

class Homology
{
public:
  explicit Homology(ChainComplex const &x);

  ChainComplex const &complex() const { return complex_; }
  HomologyDegree const &at(int n) const;
  GradedDims dims() const;
  /// H_*(X) as a complex with zero differential.
  ChainComplex as_complex() const;

private:
  ChainComplex complex_;
  std::map<int, HomologyDegree> degrees_;
  HomologyDegree empty_;
};

GradedDims homology_dims(ChainComplex const &x);
/// H_n(f) in the chosen homology bases.
Matrix induced_on_homology(ChainMap const &f, Homology const &hs, Homology const &ht, int n);
bool is_homology_isomorphism(ChainMap const &f);

struct Pushout
{
  ChainComplex complex;
  ChainMap leg_b;  // B -> P
  ChainMap leg_c;  // C -> P
};
/// B ∐_A C for f: A -> B, g: A -> C.
Pushout pushout(ChainMap const &f, ChainMap const &g);
/// B⊗C ∐_{A⊗C} A⊗D -> B⊗D for f: A -> B, g: C -> D.
ChainMap pushout_product(ChainMap const &f, ChainMap const &g);

struct QuotientComplex
{
  ChainComplex complex;
  ChainMap projection;
};
QuotientComplex cokernel(ChainMap const &f);

struct Truncation
{
  ChainComplex complex;
  ChainMap map;
};
/// C_0 X with its inclusion into X.
Truncation connective_cover(ChainComplex const &x);
/// H_0 X in degree 0 with the quotient map C_0 X -> H_0 X.
Truncation h0_truncation(ChainComplex const &x);

/// H_*(hom_Q(X, Y)^G): homotopy classes of maps, graded.
GradedDims homotopy_hom(ChainComplex const &x, ChainComplex const &y);
/// Σ_k dim hom_G(H_k X, H_{n+k} Y), graded by n. Computed from characters of
/// the homology representations, independently of homotopy_hom.
GradedDims graded_fixed_hom_dims(ChainComplex const &x, ChainComplex const &y);

}  // namespace eqmodel
