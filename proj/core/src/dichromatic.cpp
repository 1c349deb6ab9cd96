#include "dicolor/dichromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>

namespace dicolor {

Coloring Coloring::from_colors(std::vector<int> colors_by_vertex) {
    int max_color = 0;
    for (size_t v = 0; v < colors_by_vertex.size(); ++v) {
        int c = colors_by_vertex[v];
        if (c < 1) {
            throw InputError("colors must be positive, got " + std::to_string(c) + " at " +
                             vertex_name(static_cast<VertexId>(v)));
        }
        max_color = std::max(max_color, c);
    }
    std::vector<bool> used(max_color + 1, false);
    for (int c : colors_by_vertex) used[c] = true;
    for (int c = 1; c <= max_color; ++c) {
        if (!used[c]) {
            throw InputError("colors must be exactly {1..k}; color " + std::to_string(c) +
                             " is unused below " + std::to_string(max_color));
        }
    }
    Coloring coloring;
    coloring.colors_ = std::move(colors_by_vertex);
    coloring.color_count_ = max_color;
    return coloring;
}

std::vector<std::vector<VertexId>> Coloring::classes() const {
    std::vector<std::vector<VertexId>> cls(color_count_);
    for (size_t v = 0; v < colors_.size(); ++v) {
        cls[colors_[v] - 1].push_back(static_cast<VertexId>(v));
    }
    return cls;
}

namespace {

// Constraint digraph for realizing a coloring: an arc head -> tail for every
// monochromatic arc, meaning "head must be colored before tail".
Digraph realization_constraints(const Digraph& d, const Coloring& c) {
    std::vector<Arc> reversed;
    const auto& colors = c.colors();
    for (const Arc& a : d.arcs()) {
        if (colors[a.first] == colors[a.second]) reversed.emplace_back(a.second, a.first);
    }
    return Digraph(d.vertex_count(), std::move(reversed));
}

std::vector<VertexId> reversed_cycle(std::vector<VertexId> cycle) {
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

}  // namespace

ColoringCheck is_valid_coloring(const Digraph& d, const Coloring& c) {
    if (c.vertex_count() != d.vertex_count()) {
        throw InputError("coloring covers " + std::to_string(c.vertex_count()) +
                         " vertices but the digraph has " + std::to_string(d.vertex_count()));
    }
    AcyclicityCheck check = check_acyclic(realization_constraints(d, c));
    ColoringCheck result;
    result.valid = check.acyclic;
    if (check.acyclic) {
        result.realizing_order = check.topological_order;
    } else {
        // A cycle of the reversed constraints, reversed back, is a
        // monochromatic directed cycle of d.
        result.monochromatic_cycle = reversed_cycle(check.cycle);
    }
    return result;
}

VertexOrder realize_order(const Digraph& d, const Coloring& c) {
    ColoringCheck check = is_valid_coloring(d, c);
    if (!check.valid) {
        throw CycleError("coloring is not realizable: monochromatic directed cycle present",
                         check.monochromatic_cycle);
    }
    return check.realizing_order;
}

bool can_be_monochromatic(const Digraph& d, const std::vector<VertexId>& members) {
    InducedSubdigraph sub = induced_subdigraph(d, members);
    if (sub.digraph.vertex_count() == 0) return true;
    return check_acyclic(sub.digraph).acyclic;
}

namespace {

constexpr int kMaskCap = 64;

struct MaskView {
    int p = 0;
    std::vector<std::uint64_t> out_mask;
    std::vector<std::uint64_t> in_mask;

    explicit MaskView(const Digraph& d) : p(d.vertex_count()), out_mask(p, 0), in_mask(p, 0) {
        for (const Arc& a : d.arcs()) {
            out_mask[a.first] |= std::uint64_t{1} << a.second;
            in_mask[a.second] |= std::uint64_t{1} << a.first;
        }
    }

    bool acyclic(std::uint64_t members) const {
        std::uint64_t active = members;
        while (active) {
            std::uint64_t progressed = 0;
            std::uint64_t rest = active;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if ((in_mask[v] & active) == 0) progressed |= std::uint64_t{1} << v;
            }
            if (!progressed) return false;
            active &= ~progressed;
        }
        return true;
    }

    // Shortest directed cycle inside `members`; empty when acyclic.
    std::vector<int> shortest_cycle(std::uint64_t members) const {
        std::vector<int> best;
        std::vector<int> dist(p), parent(p);
        std::uint64_t scan = members;
        while (scan) {
            int s = std::countr_zero(scan);
            scan &= scan - 1;
            std::fill(dist.begin(), dist.end(), -1);
            std::deque<int> queue{s};
            dist[s] = 0;
            int closing = -1;
            while (!queue.empty() && closing < 0) {
                int v = queue.front();
                queue.pop_front();
                std::uint64_t next = out_mask[v] & members;
                while (next) {
                    int w = std::countr_zero(next);
                    next &= next - 1;
                    if (w == s) {
                        closing = v;
                        break;
                    }
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            if (closing >= 0) {
                std::vector<int> cycle;
                for (int v = closing; v != s; v = parent[v]) cycle.push_back(v);
                cycle.push_back(s);
                std::reverse(cycle.begin(), cycle.end());
                if (best.empty() || cycle.size() < best.size()) best = std::move(cycle);
                if (best.size() == 2) break;
            }
        }
        return best;
    }
};

struct BetaSearch {
    const MaskView& view;
    int p;
    int best = -1;
    std::uint64_t best_members = 0;

    void run(std::uint64_t members, int removed) {
        if (p - removed <= best) return;
        std::vector<int> cycle = view.shortest_cycle(members);
        if (cycle.empty()) {
            best = p - removed;
            best_members = members;
            return;
        }
        for (int v : cycle) {
            run(members & ~(std::uint64_t{1} << v), removed + 1);
        }
    }
};

}  // namespace

BetaOc beta_oc(const Digraph& d, int limit) {
    const int p = d.vertex_count();
    if (p > limit) {
        throw SizeLimitError("exact c-independence number refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    if (p > kMaskCap) {
        throw SizeLimitError("exact c-independence number supports at most 64 vertices",
                             kMaskCap);
    }
    if (p == 0) return BetaOc{0, {}};

    MaskView view(d);
    BetaSearch search{view, p};
    std::uint64_t all = p == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p) - 1;
    search.run(all, 0);

    BetaOc result;
    result.size = search.best;
    for (int v = 0; v < p; ++v) {
        if (search.best_members & (std::uint64_t{1} << v)) result.witness.push_back(v);
    }
    return result;
}

namespace {

struct ChiDSearch {
    const MaskView& view;
    const std::vector<int>& order;
    int k = 0;
    std::vector<std::uint64_t> class_masks;
    std::vector<int> assignment;

    bool assign(size_t pos, int used) {
        if (pos == order.size()) return true;
        int v = order[pos];
        int max_class = std::min(used + 1, k);
        for (int c = 1; c <= max_class; ++c) {
            std::uint64_t with_v = class_masks[c] | (std::uint64_t{1} << v);
            if (!view.acyclic(with_v)) continue;
            class_masks[c] = with_v;
            assignment[v] = c;
            if (assign(pos + 1, std::max(used, c))) return true;
            class_masks[c] &= ~(std::uint64_t{1} << v);
            assignment[v] = 0;
        }
        return false;
    }
};

ColorClassPartition partition_from_assignment(const std::vector<int>& assignment, int k) {
    std::vector<std::vector<VertexId>> classes(k);
    for (size_t v = 0; v < assignment.size(); ++v) {
        classes[assignment[v] - 1].push_back(static_cast<VertexId>(v));
    }
    // Classes renumbered by smallest contained vertex.
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return ColorClassPartition{std::move(classes)};
}

}  // namespace

ChiD chi_d_exact(const Digraph& d, int limit) {
    const int p = d.vertex_count();
    if (p == 0) return ChiD{0, {}};

    // Fast path ahead of the size gate: one class suffices exactly when the
    // whole digraph is acyclic.
    if (check_acyclic(d).acyclic) {
        std::vector<VertexId> everything(p);
        std::iota(everything.begin(), everything.end(), 0);
        return ChiD{1, ColorClassPartition{{std::move(everything)}}};
    }
    if (p > limit) {
        throw SizeLimitError("exact dichromatic number refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    if (p > kMaskCap) {
        throw SizeLimitError("exact dichromatic number supports at most 64 vertices", kMaskCap);
    }

    MaskView view(d);
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return d.in_degree(a) + d.out_degree(a) > d.in_degree(b) + d.out_degree(b);
    });

    for (int k = 2; k <= p; ++k) {
        ChiDSearch search{view, order, k, std::vector<std::uint64_t>(k + 1, 0),
                          std::vector<int>(p, 0)};
        if (search.assign(0, 0)) {
            return ChiD{k, partition_from_assignment(search.assignment, k)};
        }
    }
    throw Error("dichromatic search failed to terminate");
}

int chi_d_ordering_oracle(const Digraph& d, int limit) {
    return min_over_orders(d, SeqMode::kExact, limit).color_count;
}

SequenceColoring acyclic_one_coloring(const Digraph& d) {
    AcyclicityCheck check = check_acyclic(d);
    if (!check.acyclic) {
        throw CycleError("one-coloring needs an acyclic digraph", check.cycle);
    }
    std::vector<std::pair<VertexId, int>> pairs;
    pairs.reserve(d.vertex_count());
    for (auto it = check.topological_order.rbegin(); it != check.topological_order.rend(); ++it) {
        pairs.emplace_back(*it, 1);
    }
    return SequenceColoring::from_pairs(std::move(pairs));
}

SequenceColoring directed_cycle_two_coloring(int n) {
    if (n < 3) throw InputError("two-coloring of a directed cycle needs n >= 3");
    std::vector<std::pair<VertexId, int>> pairs;
    pairs.emplace_back(0, 1);
    pairs.emplace_back(n - 1, 1);
    for (int i = 1; i + 1 < n; ++i) {
        pairs.emplace_back(i, (i % 2 == 1) ? 2 : 1);
    }
    return SequenceColoring::from_pairs(std::move(pairs));
}

SequenceColoring semicycle_one_coloring(const Digraph& d) {
    const int p = d.vertex_count();
    if (p < 3) throw InputError("a cycle orientation needs at least 3 vertices");
    if (!symmetric_arcs(d).empty()) {
        throw InputError("cycle orientation must not contain digons");
    }
    UndirectedGraph g = underlying_graph(d);
    if (g.edge_count() != p) {
        throw InputError("underlying graph is not a single cycle");
    }
    for (int v = 0; v < p; ++v) {
        if (g.degree(v) != 2) {
            throw InputError("underlying graph is not a single cycle: " + vertex_name(v) +
                             " has degree " + std::to_string(g.degree(v)));
        }
    }

    // Walk the cycle starting at vertex 0 toward its smaller neighbor. A
    // revisit before covering every vertex means the graph is a disjoint
    // union of cycles rather than a single one.
    std::vector<int> walk;
    std::vector<bool> visited(p, false);
    walk.reserve(p);
    walk.push_back(0);
    walk.push_back(g.neighbors(0)[0]);
    visited[walk[0]] = visited[walk[1]] = true;
    while (static_cast<int>(walk.size()) < p) {
        int cur = walk.back();
        int prev = walk[walk.size() - 2];
        const auto& nb = g.neighbors(cur);
        int next = nb[0] == prev ? nb[1] : nb[0];
        if (visited[next]) {
            throw InputError("underlying graph is not a single cycle");
        }
        visited[next] = true;
        walk.push_back(next);
    }
    if (!g.has_edge(walk.back(), walk.front())) {
        throw InputError("underlying graph is not a single cycle");
    }

    auto arc_toward = [&](int from, int to) { return d.has_arc(from, to); };
    auto vertex_at = [&](int i) { return walk[((i % p) + p) % p]; };

    // A sink has both incident arcs pointing in; none exists iff the
    // orientation is the directed cycle.
    int first_sink = -1;
    for (int i = 0; i < p; ++i) {
        int v = vertex_at(i);
        if (arc_toward(vertex_at(i - 1), v) && arc_toward(vertex_at(i + 1), v)) {
            first_sink = i;
            break;
        }
    }
    if (first_sink < 0) {
        throw InputError("the orientation is a directed cycle; no one-coloring exists");
    }

    auto is_source = [&](int i) {
        int v = vertex_at(i);
        return arc_toward(v, vertex_at(i - 1)) && arc_toward(v, vertex_at(i + 1));
    };
    auto is_sink = [&](int i) {
        int v = vertex_at(i);
        return arc_toward(vertex_at(i - 1), v) && arc_toward(vertex_at(i + 1), v);
    };

    // Sweep every maximal directed run from its sink end toward its source
    // end, then emit the sources; along every arc the head precedes the
    // tail, so the all-1 sequence is accepted.
    std::vector<bool> emitted(p, false);
    std::vector<std::pair<VertexId, int>> pairs;
    auto emit = [&](int i) {
        int v = vertex_at(i);
        if (!emitted[v]) {
            emitted[v] = true;
            pairs.emplace_back(v, 1);
        }
    };
    for (int offset = 0; offset < p; ++offset) {
        int i = first_sink + offset;
        if (!is_sink(i)) continue;
        emit(i);
        for (int dir : {+1, -1}) {
            int t = i;
            while (arc_toward(vertex_at(t + dir), vertex_at(t))) {
                t += dir;
                if (is_source(t)) break;
                emit(t);
            }
        }
    }
    for (int offset = 0; offset < p; ++offset) {
        int i = first_sink + offset;
        if (is_source(i)) emit(i);
    }
    return SequenceColoring::from_pairs(std::move(pairs));
}

SequenceColoring order_with_u_before_v(const Digraph& d, VertexId u, VertexId v) {
    const int p = d.vertex_count();
    if (u < 0 || u >= p || v < 0 || v >= p || u == v) {
        throw InputError("u and v must be distinct vertices of the digraph");
    }
    AcyclicityCheck acyclicity = check_acyclic(d);
    if (!acyclicity.acyclic) {
        throw CycleError("constrained one-coloring needs an acyclic digraph", acyclicity.cycle);
    }

    // Reject when a directed path u -> v exists; report one.
    {
        std::vector<int> parent(p, -2);
        std::deque<int> queue{u};
        parent[u] = -1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int w : d.out_neighbors(x)) {
                if (parent[w] == -2) {
                    parent[w] = x;
                    queue.push_back(w);
                }
            }
        }
        if (parent[v] != -2) {
            std::vector<int> path;
            for (int x = v; x != -1; x = parent[x]) path.push_back(x);
            std::reverse(path.begin(), path.end());
            throw PathError("directed path from " + vertex_name(u) + " to " + vertex_name(v) +
                                " exists; no such one-coloring",
                            path);
        }
    }

    // Kahn over the reversed digraph (heads first). Prefer u as soon as it
    // is available and defer v while u is pending; since v cannot reach u,
    // a non-v choice always exists until u is placed.
    std::vector<int> indeg(p);
    for (int x = 0; x < p; ++x) indeg[x] = d.out_degree(x);
    std::vector<bool> avail(p, false);
    for (int x = 0; x < p; ++x) avail[x] = indeg[x] == 0;

    std::vector<std::pair<VertexId, int>> pairs;
    bool placed_u = false;
    for (int step = 0; step < p; ++step) {
        int pick = -1;
        if (!placed_u && avail[u]) {
            pick = u;
        } else {
            for (int x = 0; x < p; ++x) {
                if (!avail[x]) continue;
                if (!placed_u && x == v) continue;
                pick = x;
                break;
            }
            if (pick < 0) pick = v;  // defensive; unreachable given the pre-checks
        }
        avail[pick] = false;
        if (pick == u) placed_u = true;
        pairs.emplace_back(pick, 1);
        for (int w : d.in_neighbors(pick)) {
            if (--indeg[w] == 0) avail[w] = true;
        }
    }
    return SequenceColoring::from_pairs(std::move(pairs));
}

}  // namespace dicolor
