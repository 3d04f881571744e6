#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqmodel/algebraic_model.hpp"
#include "eqmodel/dg_modules.hpp"

namespace eqmodel {

/// The lemma suites run by `verify`. Every suite is deterministic for a given
/// seed and stops recording detail at its first counterexample.
struct SuiteResult
{
  std::string name;
  Report report;

  bool passed() const { return report.passed(); }
};

struct VerifyOptions
{
  int n_max = 3;
  /// n_max for the module-level suites (box product, adjunction).
  int module_n_max = 2;
  std::uint64_t seed = 0;
  std::size_t random_complexes = 100;
  std::size_t adjunction_complexes = 50;
  std::size_t monoidal_pairs = 20;
  std::size_t coend_modules = 50;
  std::size_t model_pairs = 50;
};

SuiteResult burnside_splitting_suite(GroupPtr const &G);
SuiteResult restriction_vanishing_suite(GroupPtr const &G);
SuiteResult family_idempotent_suite(GroupPtr const &G);
SuiteResult pushout_product_suite(GroupPtr const &G);
SuiteResult fixed_point_homology_suite(GroupPtr const &G, VerifyOptions const &opt);
SuiteResult generator_lemma_suite(GroupPtr const &G, VerifyOptions const &opt);
/// Both legs of E_a <- C_0 E_a -> H_0 E_a are quasi-isomorphisms for every class.
SuiteResult formality_suite(AlgebraicModel const &model, VerifyOptions const &opt);
/// A category with homology in degree -1 must fail the zig-zag.
SuiteResult formality_negative_control();
SuiteResult ea_structure_suite(AlgebraicModel const &model, VerifyOptions const &opt);
SuiteResult endomorphism_suite(AlgebraicModel const &model);
SuiteResult model_suite(AlgebraicModel const &model);
/// Counit, unit on free modules and strong monoidality, per class.
SuiteResult adjunction_suite(AlgebraicModel const &module_model, VerifyOptions const &opt);
/// Module laws, free box products, the box unit and change of scalars, for
/// classes with |W| ≤ 6.
SuiteResult module_suite(AlgebraicModel const &module_model, VerifyOptions const &opt);
SuiteResult coend_suite(VerifyOptions const &opt);
SuiteResult classification_suite(AlgebraicModel const &model, VerifyOptions const &opt);

/// Every suite for one group.
std::vector<SuiteResult> run_verify(GroupPtr const &G, VerifyOptions const &opt);

}  // namespace eqmodel
