#include "dicolor/digraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace dicolor {

std::string vertex_name(VertexId v) {
    return "v" + std::to_string(v + 1);
}

namespace {

std::string arc_text(const Arc& a) {
    return "(" + vertex_name(a.first) + ", " + vertex_name(a.second) + ")";
}

}  // namespace

Digraph::Digraph(int vertex_count, std::vector<Arc> arcs) : p_(vertex_count) {
    if (p_ < 0) {
        throw InputError("digraph needs a non-negative vertex count, got p=" + std::to_string(p_));
    }
    for (const Arc& a : arcs) {
        if (a.first < 0 || a.first >= p_ || a.second < 0 || a.second >= p_) {
            throw InputError("arc " + arc_text(a) + " out of range for p=" + std::to_string(p_));
        }
        if (a.first == a.second) {
            throw InputError("self-loop " + arc_text(a) + " is not allowed");
        }
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    arcs_ = std::move(arcs);

    out_.resize(p_);
    in_.resize(p_);
    for (const Arc& a : arcs_) {
        out_[a.first].push_back(a.second);
        in_[a.second].push_back(a.first);
    }
    for (auto& v : in_) std::sort(v.begin(), v.end());
    // out_ lists are already sorted because arcs_ is sorted by (tail, head).
}

void Digraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= p_) {
        throw InputError("vertex index " + std::to_string(v) + " out of range for p=" +
                         std::to_string(p_));
    }
}

const std::vector<VertexId>& Digraph::out_neighbors(VertexId v) const {
    check_vertex(v);
    return out_[v];
}

const std::vector<VertexId>& Digraph::in_neighbors(VertexId v) const {
    check_vertex(v);
    return in_[v];
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
    check_vertex(tail);
    check_vertex(head);
    const auto& o = out_[tail];
    return std::binary_search(o.begin(), o.end(), head);
}

int Digraph::out_degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(out_[v].size());
}

int Digraph::in_degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(in_[v].size());
}

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges) : p_(vertex_count) {
    if (p_ < 0) {
        throw InputError("graph needs a non-negative vertex count, got p=" + std::to_string(p_));
    }
    for (Edge& e : edges) {
        if (e.first < 0 || e.first >= p_ || e.second < 0 || e.second >= p_) {
            throw InputError("edge {" + vertex_name(e.first) + ", " + vertex_name(e.second) +
                             "} out of range for p=" + std::to_string(p_));
        }
        if (e.first == e.second) {
            throw InputError("self-loop at " + vertex_name(e.first) + " is not allowed");
        }
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.resize(p_);
    for (const Edge& e : edges_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
}

void UndirectedGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= p_) {
        throw InputError("vertex index " + std::to_string(v) + " out of range for p=" +
                         std::to_string(p_));
    }
}

const std::vector<VertexId>& UndirectedGraph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int UndirectedGraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int UndirectedGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < p_; ++v) best = std::max(best, degree(v));
    return best;
}

Digraph build_digraph(int vertex_count, const std::vector<Arc>& arcs) {
    return Digraph(vertex_count, arcs);
}

int delta_in(const Digraph& d) {
    if (d.vertex_count() < 1) throw InputError("delta_in needs at least one vertex");
    int best = 0;
    for (int v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.in_degree(v));
    return best;
}

int delta_od(const Digraph& d) {
    if (d.vertex_count() < 1) throw InputError("delta_od needs at least one vertex");
    int best = 0;
    for (int v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.out_degree(v));
    return best;
}

std::vector<Edge> symmetric_arcs(const Digraph& d) {
    std::vector<Edge> pairs;
    for (const Arc& a : d.arcs()) {
        if (a.first < a.second && d.has_arc(a.second, a.first)) {
            pairs.push_back(a);
        }
    }
    return pairs;
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<Edge> edges;
    edges.reserve(d.arcs().size());
    for (const Arc& a : d.arcs()) {
        edges.emplace_back(std::min(a.first, a.second), std::max(a.first, a.second));
    }
    return UndirectedGraph(d.vertex_count(), std::move(edges));
}

Digraph symmetric_digraph(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.edges().size());
    for (const Edge& e : g.edges()) {
        arcs.emplace_back(e.first, e.second);
        arcs.emplace_back(e.second, e.first);
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

AcyclicityCheck check_acyclic(const Digraph& d) {
    const int p = d.vertex_count();
    std::vector<int> indeg(p);
    for (int v = 0; v < p; ++v) indeg[v] = d.in_degree(v);

    // Kahn with a min-heap: the witness is the lexicographically smallest
    // topological order.
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < p; ++v) {
        if (indeg[v] == 0) ready.push(v);
    }

    AcyclicityCheck result;
    result.topological_order.reserve(p);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        result.topological_order.push_back(v);
        for (int w : d.out_neighbors(v)) {
            if (--indeg[w] == 0) ready.push(w);
        }
    }
    if (static_cast<int>(result.topological_order.size()) == p) {
        result.acyclic = true;
        return result;
    }

    // A leftover vertex keeps indeg > 0, i.e. at least one leftover
    // in-neighbor. Walking backward along smallest leftover in-neighbors
    // must revisit a vertex; the revisited slice, reversed, is a directed
    // cycle.
    result.acyclic = false;
    result.topological_order.clear();
    std::vector<bool> leftover(p, false);
    int start = -1;
    for (int v = 0; v < p; ++v) {
        if (indeg[v] > 0) {
            leftover[v] = true;
            if (start < 0) start = v;
        }
    }
    std::vector<int> walk_pos(p, -1);
    std::vector<int> walk;
    int cur = start;
    while (walk_pos[cur] < 0) {
        walk_pos[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        for (int w : d.in_neighbors(cur)) {
            if (leftover[w]) {
                cur = w;
                break;
            }
        }
    }
    result.cycle.assign(walk.begin() + walk_pos[cur], walk.end());
    std::reverse(result.cycle.begin(), result.cycle.end());
    return result;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<VertexId>& members) {
    std::set<VertexId> unique_members(members.begin(), members.end());
    for (VertexId v : unique_members) {
        if (v < 0 || v >= d.vertex_count()) {
            throw InputError("member " + std::to_string(v) + " out of range for p=" +
                             std::to_string(d.vertex_count()));
        }
    }
    InducedSubdigraph result{Digraph(static_cast<int>(unique_members.size()), {}), {}};
    result.original_ids.assign(unique_members.begin(), unique_members.end());
    if (unique_members.empty()) {
        return result;
    }
    std::vector<int> new_id(d.vertex_count(), -1);
    for (size_t i = 0; i < result.original_ids.size(); ++i) {
        new_id[result.original_ids[i]] = static_cast<int>(i);
    }
    std::vector<Arc> arcs;
    for (const Arc& a : d.arcs()) {
        if (new_id[a.first] >= 0 && new_id[a.second] >= 0) {
            arcs.emplace_back(new_id[a.first], new_id[a.second]);
        }
    }
    result.digraph = Digraph(static_cast<int>(result.original_ids.size()), std::move(arcs));
    return result;
}

bool is_independent_set(const Digraph& d, const std::vector<VertexId>& members) {
    InducedSubdigraph sub = induced_subdigraph(d, members);
    return sub.digraph.arc_count() == 0;
}

Digraph directed_path(int n) {
    if (n < 1) throw InputError("directed path needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return Digraph(n, std::move(arcs));
}

Digraph directed_cycle(int n) {
    if (n < 2) throw InputError("directed cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, std::move(arcs));
}

}  // namespace dicolor
