#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lrorder/filling.hpp"
#include "lrorder/poset.hpp"

namespace lrorder {

nlohmann::json type_to_json(const FillingType& type);

/// {"beta": [...], "gamma": [...], "alpha": [...], "rows": [[...], ...], "word": "..."}
nlohmann::json filling_to_json(const LRFilling& f);

/// Reads the general grid form {"beta":[...],"gamma":[...],"rows":[[...],...]}.
/// "alpha" is optional; when absent the content is read off the entries.
/// If expected is non-null the parsed type must equal it (TypeMismatch).
LRFilling filling_from_json(const nlohmann::json& j, const TypePtr& expected = nullptr);

/// Filling argument as accepted on the command line:
///   "w=2,3,2,1,1,1"  column word on the given type (required),
///   "{...}"          inline JSON grid form,
///   anything else    path to a JSON file in grid form.
LRFilling parse_filling(std::string_view arg, const TypePtr& type);

/// Graphviz digraph: nodes labeled by column words, edges from the larger to
/// the smaller filling, nodes of equal rank on one level.
std::string to_dot(const PosetGraph& p);

/// Nodes, cover edges, ranks, extremes, gradedness and the lattice check.
nlohmann::json poset_to_json(const PosetGraph& p);

} // namespace lrorder
