#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "convdiff/cayley.hpp"
#include "convdiff/digraph.hpp"
#include "convdiff/finite_map.hpp"
#include "convdiff/group.hpp"

namespace convdiff {

// Group:   { "order": n, "table": [[...]], "names": [...] }   names optional
// Digraph: { "size": n, "nbhd": [[...], ...] }
// Map:     { "dom_size": n, "cod_size": m, "values": [...] }

nlohmann::json to_json(const FiniteGroup &group);
FiniteGroup group_from_json(const nlohmann::json &doc);

nlohmann::json to_json(const ReflexiveDigraph &digraph);
ReflexiveDigraph digraph_from_json(const nlohmann::json &doc);

nlohmann::json to_json(const FiniteMap &map);
FiniteMap map_from_json(const nlohmann::json &doc);

/// Maps plus adjacency lists by index.
nlohmann::json to_json(const DiffSpace &space);

nlohmann::json read_json_file(const std::string &path);

/// Graphviz text of the reflexive reduction: loops dropped, mutual pairs drawn
/// once with dir=none, edges ordered by source then target. Empty `names`
/// labels vertices by index.
std::string emit_dot(const ReflexiveDigraph &digraph,
                     const std::vector<std::string> &names = {});

} // namespace convdiff
