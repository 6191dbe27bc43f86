#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "classgraph/group.hpp"

namespace cg {

/// Group file schema, permutation variant:
///   { "label": string, "degree": int, "generators": [[int,...],...] }
/// Cayley-table variant:
///   { "label": string, "order": n, "table": [[int,...] n x n], "identity": int }
FiniteGroup group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const FiniteGroup& g);

FiniteGroup load_group(const std::string& path);
void save_group(const FiniteGroup& g, const std::string& path);

/// Sidecar schema: { "subgroups": { name: [elem index,...], ... } }
nlohmann::json subgroup_list_json(const FiniteGroup& g,
                                  const std::vector<std::pair<std::string, Subgroup>>& named);

}  // namespace cg
