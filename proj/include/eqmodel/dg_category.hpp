#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqmodel/chain_complex.hpp"

namespace eqmodel {

/// Input data that fails its own structural laws (as opposed to a property
/// that is merely false).
struct InvalidInputError : Error
{
  using Error::Error;
};

/// Outcome of a battery of identity checks.
struct CheckResult
{
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample when failed
};

struct Report
{
  std::vector<CheckResult> checks;

  bool passed() const;
  /// "name: detail" of the first failure, empty when everything passed.
  std::string first_failure() const;
};

/// How many basis tuples an identity is checked on before switching from
/// exhaustive to seeded sampling.
inline constexpr std::size_t kExhaustiveBudget = 4096;
inline constexpr std::size_t kSampleBudget = 96;

class EaStructure;

/// A finite Ch(Q)-enriched category. Hom complexes are complexes of vector
/// spaces; composition E(b,c) ⊗ E(a,b) -> E(a,c) is given on pairs of basis
/// vectors and extended bilinearly, so that hom complexes too large to
/// materialize as matrices never are.
class DGCategory
{
public:
  /// g ∈ E(b,c), f ∈ E(a,b) basis indices ↦ g∘f ∈ E(a,c).
  using ComposeBasis =
      std::function<SparseVec(int a, int b, int c, std::size_t g, std::size_t f)>;

  DGCategory(std::vector<std::string> labels, std::vector<ChainComplex> homs,
             ComposeBasis compose, std::vector<SparseVec> identities);

  int size() const { return static_cast<int>(labels_.size()); }
  std::string const &label(int a) const { return labels_.at(static_cast<std::size_t>(a)); }
  ChainComplex const &hom(int a, int b) const;
  SparseVec const &identity(int a) const { return identities_.at(static_cast<std::size_t>(a)); }

  SparseVec compose_basis(int a, int b, int c, std::size_t g, std::size_t f) const;
  SparseVec compose(int a, int b, int c, SparseVec const &g, SparseVec const &f) const;

  /// Set for categories of the form E_a (see ea_category.hpp).
  std::shared_ptr<EaStructure const> ea;

private:
  std::vector<std::string> labels_;
  std::vector<ChainComplex> homs_;
  ComposeBasis compose_;
  std::vector<SparseVec> identities_;
};

using CategoryPtr = std::shared_ptr<DGCategory const>;

/// Associativity, unit laws and the Leibniz rule
/// d(g∘f) = dg∘f + (-1)^|g| g∘df, exhaustively on small homs and sampled on
/// large ones.
Report check_category(DGCategory const &E, std::uint64_t seed = 0);

/// Full subcategory of Ch(Q) on the given complexes (over the trivial group).
CategoryPtr chain_complex_category(std::vector<ChainComplex> const &objects);

/// Enriched functor given extensionally: object map plus one chain map per
/// ordered pair, maps[a * n + b]: E(a,b) -> D(Fa, Fb).
struct EnrichedFunctor
{
  CategoryPtr source;
  CategoryPtr target;
  std::vector<int> object_map;
  std::vector<ChainMap> maps;

  ChainMap const &on_hom(int a, int b) const;
  SparseVec apply(int a, int b, SparseVec const &f) const;
};

EnrichedFunctor identity_functor(CategoryPtr const &E);
/// Compatibility with composition and identities, plus shapes.
Report check_functor(EnrichedFunctor const &F, std::uint64_t seed = 0);

/// Object map bijective and every hom map a homology isomorphism. Throws
/// InvalidInputError when the functor data fails check_functor.
bool is_quasi_isomorphism(EnrichedFunctor const &F, std::uint64_t seed = 0);

/// (H_*E)(a,b) = H_*(E(a,b)) with the induced composition.
CategoryPtr homology_category(CategoryPtr const &E);

/// E <- C_0 E -> H_0 E
struct ConnectiveZigZag
{
  CategoryPtr cover;       // C_0 E
  CategoryPtr degree_zero; // H_0 E
  EnrichedFunctor inclusion;    // C_0 E -> E
  EnrichedFunctor to_homology;  // C_0 E -> H_0 E
};
ConnectiveZigZag connective_cover_category(CategoryPtr const &E);

/// Symmetric monoidal structure on a (possibly truncated) DG category.
struct MonoidalDGStructure
{
  /// a⊗b, or nullopt outside the truncation range.
  std::function<std::optional<int>(int, int)> tensor_objects;
  int unit = 0;
  /// f ∈ E(a,c), g ∈ E(b,d) basis indices ↦ f⊗g ∈ E(a⊗b, c⊗d).
  std::function<SparseVec(int a, int b, int c, int d, std::size_t f, std::size_t g)> tensor_basis;
  /// The symmetry isomorphism in E(a⊗b, b⊗a).
  std::function<SparseVec(int a, int b)> symmetry;

  SparseVec tensor(int a, int b, int c, int d, SparseVec const &f, SparseVec const &g) const;
};

/// Interchange with composition, identities, strict unit and associativity,
/// naturality and involutivity of the symmetry, and the hexagon, on every
/// in-range tuple of objects. Failures name the offending tuple.
Report check_monoidal(DGCategory const &E, MonoidalDGStructure const &M, std::uint64_t seed = 0);

}  // namespace eqmodel
