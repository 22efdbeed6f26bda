#pragma once

#include <json.hpp>

#include "matos/coloration.hpp"
#include "matos/families.hpp"
#include "matos/matroid.hpp"

namespace matos {

/// Matroid wire format:
///   {"name": str, "n": int, "backing":
///     {"circuits": [[int]]} | {"bases": [[int]]} |
///     {"vectors": {"rows": int, "cols": int, "entries": [["p/q", ...]]}}}
/// Elements are 1-based; circuits are written sorted by (size, lex).
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

/// {"classes": [[int]]} in canonical class order.
nlohmann::json coloration_to_json(const Coloration& pi);
Coloration coloration_from_json(const nlohmann::json& j, int n);

nlohmann::json rat_matrix_to_json(const RatMatrix& m);
RatMatrix rat_matrix_from_json(const nlohmann::json& j);

/// Quadratic entries serialize as {"a": "p/q", "b": "p/q", "d": int}.
nlohmann::json quad_matrix_to_json(const QuadMatrix& m);

Matroid read_matroid_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace matos
