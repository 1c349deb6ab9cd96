#pragma once

#include <utility>
#include <vector>

#include "dicolor/chromatic.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/limits.hpp"

namespace dicolor {

/// A permutation of the vertex set; position 0 is colored first.
using VertexOrder = std::vector<VertexId>;

/// An ordered list of (vertex, color) pairs covering the vertex set.
///
/// The vertices form a permutation and the colors used are exactly
/// {1, ..., color_count()}.
class SequenceColoring {
public:
    static SequenceColoring from_pairs(std::vector<std::pair<VertexId, int>> pairs);

    const std::vector<std::pair<VertexId, int>>& pairs() const { return pairs_; }
    int vertex_count() const { return static_cast<int>(pairs_.size()); }
    int color_count() const { return color_count_; }

    VertexOrder order() const;
    /// colors indexed by vertex id.
    std::vector<int> colors_by_vertex() const;

    bool operator==(const SequenceColoring& other) const { return pairs_ == other.pairs_; }

private:
    SequenceColoring() = default;

    std::vector<std::pair<VertexId, int>> pairs_;
    int color_count_ = 0;
};

struct SequenceViolation {
    int position_tail = 0;  // position of the arc's tail in the sequence
    int position_head = 0;  // position of the arc's head (later than the tail)
    Arc arc;

    bool operator==(const SequenceViolation&) const = default;
};

struct SequenceCheck {
    bool valid = false;
    std::vector<SequenceViolation> violations;
};

/// Checks the coloring rule along the sequence: whenever an arc's tail is
/// colored before its head, the head's color must differ.
SequenceCheck validate_sequence_coloring(const Digraph& d, const SequenceColoring& s);

/// Graph with an edge {u, v} for every arc pointing forward in `order`
/// (tail earlier than head). Arcs pointing backward contribute nothing.
UndirectedGraph forward_constraint_graph(const Digraph& d, const VertexOrder& order);

enum class SeqMode { kExact, kGreedy };

struct SeqResult {
    int color_count = 0;
    SequenceColoring sequence;
};

/// Minimum colors that a valid sequence with this order can use: the
/// chromatic number of the forward constraint graph, with a witness.
SeqResult s_number_exact(const Digraph& d, const VertexOrder& order,
                         int limit = limits::kChromaticExact);

/// First-fit along the order against already-colored in-neighbors only.
SeqResult s_number_greedy(const Digraph& d, const VertexOrder& order);

struct OrderScan {
    int color_count = 0;
    VertexOrder order;  // lexicographically smallest order attaining the value
};

/// Minimum of the per-order number over all p! orders.
OrderScan min_over_orders(const Digraph& d, SeqMode mode, int limit = limits::kOrderScan);

/// Maximum of the per-order number over all p! orders.
OrderScan max_over_orders(const Digraph& d, SeqMode mode, int limit = limits::kOrderScan);
OrderScan max_over_orders(const UndirectedGraph& g, SeqMode mode,
                          int limit = limits::kOrderScan);

/// Extremes of both modes collected in a single scan over all orders.
struct OrderScanStats {
    OrderScan min_exact;
    OrderScan max_exact;
    OrderScan min_greedy;
    OrderScan max_greedy;
};

OrderScanStats scan_orders(const Digraph& d, int limit = limits::kOrderScan);

/// The n-vertex digraph with every forward arc (i, j), i < j, paired with
/// the natural order. First-fit along that order needs exactly n colors,
/// although the digraph is acyclic.
std::pair<Digraph, VertexOrder> transitive_tournament(int n);

}  // namespace dicolor
