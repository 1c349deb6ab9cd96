#pragma once

#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/limits.hpp"
#include "dicolor/seq_coloring.hpp"

namespace dicolor {

/// Order-independent vertex coloring; colors are exactly {1..color_count}.
class Coloring {
public:
    static Coloring from_colors(std::vector<int> colors_by_vertex);

    const std::vector<int>& colors() const { return colors_; }
    int vertex_count() const { return static_cast<int>(colors_.size()); }
    int color_count() const { return color_count_; }

    /// Classes listed by color 1..k; members ascending.
    std::vector<std::vector<VertexId>> classes() const;

    bool operator==(const Coloring& other) const { return colors_ == other.colors_; }

private:
    Coloring() = default;

    std::vector<int> colors_;
    int color_count_ = 0;
};

/// Disjoint nonempty classes covering the vertex set.
struct ColorClassPartition {
    std::vector<std::vector<VertexId>> classes;

    bool operator==(const ColorClassPartition&) const = default;
};

struct ColoringCheck {
    bool valid = false;
    /// When valid: an order under which the sequence (order, coloring) obeys
    /// the coloring rule.
    VertexOrder realizing_order;
    /// When invalid: a monochromatic directed cycle.
    std::vector<VertexId> monochromatic_cycle;
};

/// A coloring is achievable by some sequence iff its monochromatic arcs form
/// no directed cycle; the check is linear and the witness constructive.
ColoringCheck is_valid_coloring(const Digraph& d, const Coloring& c);

/// Realizing order for a valid coloring: heads of monochromatic arcs are
/// placed before their tails, extended deterministically. Throws CycleError
/// carrying a monochromatic cycle when the coloring is invalid.
VertexOrder realize_order(const Digraph& d, const Coloring& c);

/// True iff the members can share one color class: the induced subdigraph
/// is acyclic.
bool can_be_monochromatic(const Digraph& d, const std::vector<VertexId>& members);

struct BetaOc {
    int size = 0;
    std::vector<VertexId> witness;
};

/// Maximum cardinality of a vertex set inducing an acyclic subdigraph,
/// exact. Equals p minus the minimum feedback vertex set size.
BetaOc beta_oc(const Digraph& d, int limit = limits::kDichromaticExact);

struct ChiD {
    int chi_d = 0;
    ColorClassPartition partition;
};

/// Minimum partition of the vertex set into classes whose induced
/// subdigraphs are acyclic, exact. Acyclic inputs short-circuit to 1
/// before the size gate applies.
ChiD chi_d_exact(const Digraph& d, int limit = limits::kDichromaticExact);

/// Minimum exact per-order number over all vertex orders; exists solely to
/// cross-validate chi_d_exact by an independent route.
int chi_d_ordering_oracle(const Digraph& d, int limit = limits::kOrderScan);

/// Reverse topological order with every color 1. Requires an acyclic input.
SequenceColoring acyclic_one_coloring(const Digraph& d);

/// Two-color sequence for the directed cycle on n >= 3 vertices: v1 and vn
/// first with color 1, then v2..v(n-1) alternating 2, 1, ...
SequenceColoring directed_cycle_two_coloring(int n);

/// One-color sequence for an orientation of a cycle that is not a directed
/// cycle and has no digons, built by sweeping maximal directed runs from a
/// sink.
SequenceColoring semicycle_one_coloring(const Digraph& d);

/// One-color sequence of an acyclic digraph in which u appears before v.
/// Requires that no directed path leads from u to v.
SequenceColoring order_with_u_before_v(const Digraph& d, VertexId u, VertexId v);

}  // namespace dicolor
