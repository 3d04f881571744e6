#pragma once

#include <string>

#include "json.hpp"

#include "eqmodel/algebraic_model.hpp"
#include "eqmodel/verify.hpp"

namespace eqmodel {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings ("3", "-1/2").
Json to_json(Rational const &q);
Rational rational_from_json(Json const &j);

/// {"rows": r, "cols": c, "entries": [[i, j, "p/q"], ...]}, column-major order.
Json to_json(Matrix const &m);
Matrix matrix_from_json(Json const &j);

/// {"degree": n, "generators": [[images...], ...]}, 0-based images.
Json to_json(FiniteGroup const &G);
FiniteGroup group_from_json(Json const &j);

/// A corpus name, or a path to a group file. UnknownGroupError if neither.
GroupPtr load_group(std::string const &name_or_path);

/// {"lo", "hi", "terms": {"n": {"dim", "action"}}, "differentials": {"n": matrix}}.
/// Differential n maps degree n to degree n-1.
Json to_json(ChainComplex const &x);
/// The group comes from a "group" field (name, path or inline group) when
/// present, and from `fallback` otherwise.
ChainComplex complex_from_json(Json const &j, GroupPtr const &fallback = nullptr);

/// {"components": [complex per class]}; components default to the Weyl group.
ModelObject model_object_from_json(Json const &j, AlgebraicModel const &model);
Json to_json(ModelObject const &x);

/// [[n, d], ...] ascending, zero entries dropped.
Json to_json(GradedDims const &d);

Json to_json(Subgroup const &H);
Json to_json(Report const &r);
Json to_json(SuiteResult const &s);

/// Parse a file; ParseError on I/O or syntax errors.
Json read_json_file(std::string const &path);

}  // namespace eqmodel
