#pragma once

#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/limits.hpp"

namespace dicolor {

/// A proper coloring of an undirected graph. colors[v] is in 1..color_count
/// and the color set is exactly {1, ..., color_count}.
struct GraphColoring {
    int color_count = 0;
    std::vector<int> colors;
};

/// Minimum proper coloring, exact.
///
/// Iterative deepening on the color count with backtracking; vertices are
/// assigned in descending-degree order and a fresh color index may exceed
/// the current maximum by at most one. The witness is canonical: colors are
/// renumbered by first occurrence along vertex index order, and among
/// optimal colorings the search's deterministic first hit is returned.
GraphColoring chromatic_number_exact(const UndirectedGraph& g,
                                     int limit = limits::kChromaticExact);

/// First-fit along `order`: each vertex receives the smallest positive color
/// absent among its already-colored neighbors.
GraphColoring greedy_color_graph(const UndirectedGraph& g, const std::vector<VertexId>& order);

}  // namespace dicolor
