#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dicolor/errors.hpp"

namespace dicolor {

using VertexId = int;
using Arc = std::pair<VertexId, VertexId>;   // (tail, head)
using Edge = std::pair<VertexId, VertexId>;  // unordered, stored with first < second

/// Renders the external 1-based name of a 0-based vertex index ("v1", "v2", ...).
std::string vertex_name(VertexId v);

/// Immutable digraph over densely indexed vertices 0..p-1.
///
/// Arcs are ordered pairs; at most one arc per ordered pair. Duplicate arcs
/// in the input collapse silently, self-loops are rejected. A digon is the
/// pair (u,v),(v,u) both present.
class Digraph {
public:
    Digraph(int vertex_count, std::vector<Arc> arcs);

    int vertex_count() const { return p_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    /// Out-neighbors of v, ascending.
    const std::vector<VertexId>& out_neighbors(VertexId v) const;
    /// In-neighbors of v, ascending.
    const std::vector<VertexId>& in_neighbors(VertexId v) const;

    bool has_arc(VertexId tail, VertexId head) const;

    int out_degree(VertexId v) const;
    int in_degree(VertexId v) const;

    bool operator==(const Digraph& other) const {
        return p_ == other.p_ && arcs_ == other.arcs_;
    }

private:
    void check_vertex(VertexId v) const;

    int p_ = 0;
    std::vector<Arc> arcs_;  // sorted, unique
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

/// Immutable undirected graph; edges stored as (min, max) pairs.
class UndirectedGraph {
public:
    UndirectedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return p_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexId>& neighbors(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;
    int degree(VertexId v) const;
    int max_degree() const;

    bool operator==(const UndirectedGraph& other) const {
        return p_ == other.p_ && edges_ == other.edges_;
    }

private:
    void check_vertex(VertexId v) const;

    int p_ = 0;
    std::vector<Edge> edges_;  // sorted, unique
    std::vector<std::vector<VertexId>> adj_;
};

/// Total vertex labeling; labels are small non-negative integers and need
/// not be distinct. Colors of a coloring reuse this shape.
struct Labeling {
    std::vector<int> labels;

    bool operator==(const Labeling&) const = default;
};

/// Convenience constructor performing the same checks as the Digraph ctor.
Digraph build_digraph(int vertex_count, const std::vector<Arc>& arcs);

int delta_in(const Digraph& d);
int delta_od(const Digraph& d);

/// Unordered pairs {u, v} such that both (u,v) and (v,u) are arcs.
std::vector<Edge> symmetric_arcs(const Digraph& d);

/// Graph on the same vertices with an edge {u,v} iff at least one of the
/// two arcs exists.
UndirectedGraph underlying_graph(const Digraph& d);

/// Digraph with both orientations of every edge of g.
Digraph symmetric_digraph(const UndirectedGraph& g);

struct AcyclicityCheck {
    bool acyclic = false;
    /// When acyclic: a topological order (every arc tail precedes its head).
    std::vector<VertexId> topological_order;
    /// When cyclic: vertices of a directed cycle; consecutive entries and
    /// last-to-first are arcs.
    std::vector<VertexId> cycle;
};

AcyclicityCheck check_acyclic(const Digraph& d);

struct InducedSubdigraph {
    Digraph digraph;
    /// original_ids[new_index] = vertex id in the parent digraph.
    std::vector<VertexId> original_ids;
};

/// Subdigraph induced by `members`, densely re-indexed.
InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<VertexId>& members);

/// True iff no arc joins two members of `members` in either direction.
bool is_independent_set(const Digraph& d, const std::vector<VertexId>& members);

Digraph directed_path(int n);
Digraph directed_cycle(int n);

}  // namespace dicolor
