#pragma once

#include <string>
#include <string_view>

#include "sepcert/graph.hpp"

namespace sepcert {

/// Graphviz digraph with one node per vertex (named vertex + 1, the base
/// double-circled) and one arc per edge pair in its positive orientation.
/// Arcs are listed by source, then letter, then target.
std::string to_dot(const LabeledGraph& g, std::string_view name);

/// Writes to_dot(g, name) to `path`; throws Error on I/O failure.
void export_dot(const LabeledGraph& g, std::string_view name, const std::string& path);

}  // namespace sepcert
