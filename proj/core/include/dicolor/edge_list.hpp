#pragma once

#include <string>

#include "dicolor/lmatrix.hpp"

namespace dicolor {

/// Line-oriented edge-list text:
///   p <n>          vertex count, exactly once, first directive
///   a <u> <v>      arc with 1-based vertex names
///   l <v> <label>  optional label line (default label 0)
///   #              starts a comment
/// Vertices without an `l` line carry label 0. Duplicate arcs collapse;
/// duplicate `l` lines for one vertex are an error.
LabeledDigraph parse_edge_list(const std::string& text);

/// Canonical form: LF newlines, single spaces, arcs sorted ascending,
/// label lines for every vertex when any label is nonzero.
std::string serialize_edge_list(const LabeledDigraph& ld);
std::string serialize_edge_list(const Digraph& d);

std::string export_dot(const Digraph& d);
std::string export_dot(const LabeledDigraph& ld);

/// Parses "v3" or "3" into a 0-based vertex id, range-checked.
VertexId parse_vertex_token(const std::string& token, int vertex_count);

}  // namespace dicolor
