#pragma once

#include <string>

#include <json.hpp>

#include "schemoid/algebra.hpp"
#include "schemoid/constructors.hpp"
#include "schemoid/repcat.hpp"
#include "schemoid/schemoid.hpp"

namespace schemoid::io {

using json = nlohmann::json;

/// Reads a JSON document from a path, or standard input for "-".
/// Throws ParseError.
json read_json(const std::string& path);

/// Integers stay integers; other rationals become "p/q" strings.
json scalar_to_json(const Scalar& v);
Scalar scalar_from_json(const json& j);
json matrix_to_json(const Matrix& m);
/// Rows of a matrix; an empty list gives 0 x cols (cols must be supplied).
Matrix matrix_from_json(const json& j, const Field& k, std::size_t rows, std::size_t cols);

json category_to_json(const FinCat& c);
CategoryData category_data_from_json(const json& j);
FinCat category_from_json(const json& j);

/// Category format plus "blocks" and optional "block_labels" /
/// "object_labels", tagged with "format": 1.
json schemoid_to_json(const Schemoid& s);
Schemoid schemoid_from_json(const json& j);

/// {"vertices": n, "faces": [[1, 2], ...]} with 1-based vertices; the
/// listed faces are closed downward.
SimplicialComplex complex_from_json(const json& j);
/// {"points": n, "opens": [[1], [1, 2], ...]} with 1-based points.
FiniteSpace space_from_json(const json& j);
/// {"points": n, "relation": [[...], ...], "labels": [...]}.
AssociationScheme scheme_from_json(const json& j);
/// {"table": [[...], ...]} or a name such as "Z4", "S3", "D4", "Q8".
GroupTable group_from_json(const json& j);
GroupTable group_by_name(const std::string& name);

/// {"obj": [...], "mor": [...]}.
json functor_to_json(const Functor& f);
Functor functor_from_json(const json& j);

/// {"format": 1, "field": "F2", "dims": [...], "block_mats": {"<block>": rows}}.
/// Block keys are block indices or block labels. The field in the file wins
/// over `fallback`.
json rep_to_json(const FunctorRep& r);
FunctorRep rep_from_json(const json& j, SchemoidPtr s, const Field& fallback);

json algebra_to_json(const FDAlgebra& a);

}  // namespace schemoid::io
