#pragma once

#include <nlohmann/json.hpp>

#include "qsw/hecke.hpp"
#include "qsw/module.hpp"

namespace qsw {

using Json = nlohmann::json;

Json to_json(const ParamSpec& p);
ParamSpec param_from_json(const Json& j);

/// {"rows", "cols", "entries": [[i, j, "value"], ...]} with row-major entries.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Weight& w);
Json to_json(const TorusCharacter& chi);
Json to_json(const Vec& v);

/// Module interchange document: rank, param, labels, weights (or null),
/// shift (or null) and the sparse generator matrices.
Json to_json(const WeightModule& m);
/// Builds a module from its document without checking relations; inverses
/// of the torus matrices are recomputed when absent.
WeightModule module_from_json(const Json& j);

Json to_json(const RelationReport& r);
Json to_json(const SchurWeylReport& r);

}  // namespace qsw
