#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "eqmodel/dg_category.hpp"
#include "eqmodel/ea_category.hpp"

namespace eqmodel {

/// A right module over a DG category: a complex M(a) per object and actions
/// M(b) ⊗ E(a,b) -> M(a), x ⊗ φ ↦ x·φ, given on basis vectors.
///
/// Signs: d(x·φ) = dx·φ + (-1)^|x| x·dφ and (x·g)·f = x·(g∘f).
class DGModule
{
public:
  /// x a basis index of M(b), φ a basis index of E(a,b) ↦ x·φ ∈ M(a).
  using ActBasis = std::function<SparseVec(int a, int b, std::size_t x, std::size_t phi)>;

  DGModule(CategoryPtr base, std::vector<ChainComplex> values, ActBasis act);

  CategoryPtr const &base() const { return base_; }
  int size() const { return static_cast<int>(values_.size()); }
  ChainComplex const &value(int a) const { return values_.at(static_cast<std::size_t>(a)); }

  SparseVec act_basis(int a, int b, std::size_t x, std::size_t phi) const;
  /// Bilinear extension of act_basis.
  SparseVec act(int a, int b, SparseVec const &x, SparseVec const &phi) const;

private:
  CategoryPtr base_;
  std::vector<ChainComplex> values_;
  ActBasis act_;
};

/// Unit, associativity and Leibniz laws of the action, sampled on large homs.
Report check_module(DGModule const &M, std::uint64_t seed = 0);

/// F_a = E(-, a), acting by composition.
DGModule free_module(CategoryPtr const &E, int a);
DGModule zero_module(CategoryPtr const &E);
DGModule direct_sum(DGModule const &M, DGModule const &N);
/// Global basis index of M(a) (resp. N(a)) inside (M ⊕ N)(a).
SparseVec include_left(DGModule const &M, DGModule const &N, int a, SparseVec const &x);
SparseVec include_right(DGModule const &M, DGModule const &N, int a, SparseVec const &y);

struct ModuleMap
{
  std::shared_ptr<DGModule const> source;
  std::shared_ptr<DGModule const> target;
  std::vector<ChainMap> components;  // f(a): M(a) -> N(a)

  ChainMap const &at(int a) const { return components.at(static_cast<std::size_t>(a)); }
};

/// Components are chain maps and f(x·φ) = f(x)·φ.
Report check_module_map(ModuleMap const &f, std::uint64_t seed = 0);
/// Every component a homology isomorphism.
bool is_weak_equivalence(ModuleMap const &f);
ModuleMap identity_map(std::shared_ptr<DGModule const> const &M);

/// Dimension of the space of degree-0 module maps M -> N commuting with d,
/// found as the kernel of the full linear system. Small inputs only.
std::size_t module_map_dimension(DGModule const &M, DGModule const &N);

// Coends ----------------------------------------------------------------------

/// F: C^op ⊗ C -> Ch(Q) given on a subset of objects of C. F(b,c) is
/// contravariant in b and covariant in c.
///
/// covariant: x ∈ F(b,c), φ ∈ C(c,c2) ↦ φ·x ∈ F(b,c2)
/// contravariant: x ∈ F(b,c), φ ∈ C(b2,b) ↦ x·φ ∈ F(b2,c)
/// Both include the Koszul sign of moving φ to its side.
struct Bifunctor
{
  CategoryPtr base;
  std::vector<int> objects;
  std::function<ChainComplex(int b, int c)> value;
  std::function<SparseVec(int b, int c, int c2, std::size_t x, std::size_t phi)> covariant;
  std::function<SparseVec(int b2, int b, int c, std::size_t phi, std::size_t x)> contravariant;
};

/// ∫^d F(d,d): the quotient of ⊕_d F(d,d) by φ·x - (-1)^{|x||φ|} x·φ for
/// x ∈ F(b,c), φ ∈ C(c,b). Throws InvalidInputError when the relations are
/// not a subcomplex (the actions are not chain maps).
class Coend
{
public:
  explicit Coend(Bifunctor F);

  ChainComplex const &complex() const { return complex_; }
  Bifunctor const &bifunctor() const { return f_; }
  ChainComplex const &diagonal(int d) const;

  /// Class of x ∈ F(d,d).
  SparseVec project(int d, SparseVec const &x) const;
  /// A representative of coend basis vector b, split over the diagonal terms.
  std::vector<std::pair<int, SparseVec>> representative(std::size_t b) const;

private:
  std::size_t slot(int d) const;

  Bifunctor f_;
  std::vector<ChainComplex> diag_;
  std::map<int, std::vector<std::size_t>> block_offset_;  // degree -> offset per slot
  std::map<int, std::size_t> ambient_dim_;
  std::map<int, Cokernel> quotient_;
  ChainComplex complex_;
};

/// ∫^a G(a) ⊗ C(b, a).
Coend coyoneda_coend(DGModule const &G, int b);
/// [x ⊗ ψ] ↦ x·ψ, the canonical map to G(b).
ChainMap coyoneda_map(DGModule const &G, int b, Coend const &coend);
/// b ↦ ∫^a G(a) ⊗ C(b, a) as a module.
DGModule coyoneda_module(DGModule const &G);

/// Dimensions of ∫^b (∫^a G(a) ⊗ C(b,a)) ⊗ C(x0,b) and of
/// ∫^a G(a) ⊗ (∫^b C(b,a) ⊗ C(x0,b)).
std::pair<GradedDims, GradedDims> fubini_dims(DGModule const &G, int x0);

// Change of scalars -------------------------------------------------------------

DGModule restrict_scalars(EnrichedFunctor const &psi, DGModule const &N);
/// (M ⊗_E D)(d) = ∫^a M(a) ⊗ D(d, ψa).
DGModule extend_scalars(EnrichedFunctor const &psi, DGModule const &M);
/// x ↦ [x ⊗ id_{ψa}], as a map M -> restrict(extend(M)).
ModuleMap extension_unit(EnrichedFunctor const &psi, std::shared_ptr<DGModule const> const &M);

// Box product -------------------------------------------------------------------

/// M □ N evaluated by the full coend over pairs drawn from `objects`:
/// (M□N)(a) = ∫^{b,c} M(b) ⊗ N(c) ⊗ E(a, b⊗c). Throws TruncationError naming
/// the first (b,c) whose tensor is out of range.
DGModule box_product_over(DGModule const &M, DGModule const &N, MonoidalDGStructure const &S,
                          std::vector<int> const &objects);

/// M □ N over E_a, computed through the generating object 1 as
/// (M(1) ⊗ N(1) ⊗ Q[E(a,2)])_{W×W}. Needs n_max ≥ 2.
class ReducedBox
{
public:
  ReducedBox(DGModule const &M, DGModule const &N);

  /// Value at one object (built on first use).
  ChainComplex const &at(int a) const;
  DGModule module() const;

  /// Basis vector b of (M□N)(a) as r ⊗ key with r ∈ M(1) ⊗ N(1).
  std::pair<SparseVec, std::size_t> representative(int a, std::size_t b) const;
  /// Class of r ⊗ key in (M□N)(a).
  SparseVec project(int a, SparseVec const &r, std::size_t key) const;

  TensorBasis const &pair_basis() const { return *pair_; }
  /// x ⊗ y ↦ (x·R_u) ⊗ (y·R_v)
  SparseVec translate(std::size_t u, std::size_t v, SparseVec const &r) const;
  /// Key of (R_{u^-1} ⊗ R_{v^-1}) ∘ f.
  std::size_t translate_key(int a, std::size_t u, std::size_t v, std::size_t f) const;

  DGModule const &left() const { return *m_; }
  DGModule const &right() const { return *n_; }

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::shared_ptr<DGModule const> m_, n_;
  std::shared_ptr<TensorBasis const> pair_;
};

// The generator adjunction over E_a ---------------------------------------------

/// The W-action on M(1) by z ↦ z·R_g, one global matrix per element of W.
std::vector<Matrix> right_translations(DGModule const &M);

/// M ⊗_E G = ∫^i M(i) ⊗ V_i, evaluated as M(1) with W acting by z ↦ z·R_g.
ChainComplex tensor_with_generators(DGModule const &M);
/// The same coend computed in full over the given objects, with the
/// comparison map [x ⊗ s] ↦ x·h_s to tensor_with_generators(M).
struct FullGeneratorTensor
{
  Coend coend;
  ChainMap comparison;  // over the trivial group
};
FullGeneratorTensor tensor_with_generators_full(DGModule const &M, std::vector<int> const &objects);
/// Comparison map is a well-defined W-equivariant chain isomorphism.
Report check_generator_reduction(DGModule const &M, std::vector<int> const &objects);

/// i ↦ hom_Q(V_i, X)^W. For i ≥ 1 the coordinates are the values on the
/// points with first coordinate e; for i = 0 the coordinates of a fixed vector.
DGModule underhom_generators(ChainComplex const &X, CategoryPtr const &E);

/// M ⊗_E G -> X for M = underhom(X): u ↦ u(e).
ChainMap counit(ChainComplex const &X, CategoryPtr const &E);
/// M -> underhom(M ⊗_E G): x ↦ (s ↦ [x ⊗ s]).
ModuleMap unit(std::shared_ptr<DGModule const> const &M);

/// Φ: (M□N)(1) -> (M ⊗_E G) ⊗ (N ⊗_E G), [x ⊗ y ⊗ (e; y1, y2)] ↦ x·R_{y1} ⊗ y·R_{y2}.
ChainMap monoidality_map(ReducedBox const &box);
/// Φ well defined on coinvariants, a chain map, W-equivariant and invertible.
Report check_monoidality(ReducedBox const &box, std::uint64_t seed = 0);

/// F_0 □ M -> M, [x ⊗ y ⊗ f] ↦ y·((x ⊗ id_1) ∘ f).
ModuleMap unit_collapse(ReducedBox const &box);

}  // namespace eqmodel
