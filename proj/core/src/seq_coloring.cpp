#include "dicolor/seq_coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace dicolor {

SequenceColoring SequenceColoring::from_pairs(std::vector<std::pair<VertexId, int>> pairs) {
    const int p = static_cast<int>(pairs.size());
    std::vector<bool> seen(p, false);
    int max_color = 0;
    for (const auto& [v, c] : pairs) {
        if (v < 0 || v >= p || seen[v]) {
            throw InputError("sequence vertices must form a permutation of the vertex set");
        }
        seen[v] = true;
        if (c < 1) {
            throw InputError("sequence colors must be positive, got " + std::to_string(c) +
                             " at " + vertex_name(v));
        }
        max_color = std::max(max_color, c);
    }
    std::vector<bool> used(max_color + 1, false);
    for (const auto& [v, c] : pairs) used[c] = true;
    for (int c = 1; c <= max_color; ++c) {
        if (!used[c]) {
            throw InputError("sequence colors must be exactly {1..k}; color " +
                             std::to_string(c) + " is unused below " + std::to_string(max_color));
        }
    }
    SequenceColoring s;
    s.pairs_ = std::move(pairs);
    s.color_count_ = max_color;
    return s;
}

VertexOrder SequenceColoring::order() const {
    VertexOrder o;
    o.reserve(pairs_.size());
    for (const auto& [v, c] : pairs_) o.push_back(v);
    return o;
}

std::vector<int> SequenceColoring::colors_by_vertex() const {
    std::vector<int> colors(pairs_.size(), 0);
    for (const auto& [v, c] : pairs_) colors[v] = c;
    return colors;
}

namespace {

void check_order(const Digraph& d, const VertexOrder& order) {
    const int p = d.vertex_count();
    if (static_cast<int>(order.size()) != p) {
        throw InputError("order must list all " + std::to_string(p) + " vertices, got " +
                         std::to_string(order.size()));
    }
    std::vector<bool> seen(p, false);
    for (int v : order) {
        if (v < 0 || v >= p || seen[v]) {
            throw InputError("order is not a permutation of the vertex set");
        }
        seen[v] = true;
    }
}

std::vector<int> positions_of(const VertexOrder& order) {
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

SequenceCheck validate_sequence_coloring(const Digraph& d, const SequenceColoring& s) {
    if (s.vertex_count() != d.vertex_count()) {
        throw InputError("sequence covers " + std::to_string(s.vertex_count()) +
                         " vertices but the digraph has " + std::to_string(d.vertex_count()));
    }
    std::vector<int> pos = positions_of(s.order());
    std::vector<int> colors = s.colors_by_vertex();

    SequenceCheck check;
    for (const Arc& a : d.arcs()) {
        if (pos[a.first] < pos[a.second] && colors[a.first] == colors[a.second]) {
            check.violations.push_back(SequenceViolation{pos[a.first], pos[a.second], a});
        }
    }
    std::sort(check.violations.begin(), check.violations.end(),
              [](const SequenceViolation& x, const SequenceViolation& y) {
                  return std::tie(x.position_tail, x.position_head) <
                         std::tie(y.position_tail, y.position_head);
              });
    check.valid = check.violations.empty();
    return check;
}

UndirectedGraph forward_constraint_graph(const Digraph& d, const VertexOrder& order) {
    check_order(d, order);
    std::vector<int> pos = positions_of(order);
    std::vector<Edge> edges;
    for (const Arc& a : d.arcs()) {
        if (pos[a.first] < pos[a.second]) {
            edges.emplace_back(std::min(a.first, a.second), std::max(a.first, a.second));
        }
    }
    return UndirectedGraph(d.vertex_count(), std::move(edges));
}

SeqResult s_number_exact(const Digraph& d, const VertexOrder& order, int limit) {
    UndirectedGraph h = forward_constraint_graph(d, order);
    GraphColoring coloring = chromatic_number_exact(h, limit);
    std::vector<std::pair<VertexId, int>> pairs;
    pairs.reserve(order.size());
    for (int v : order) pairs.emplace_back(v, coloring.colors[v]);
    return SeqResult{coloring.color_count, SequenceColoring::from_pairs(std::move(pairs))};
}

SeqResult s_number_greedy(const Digraph& d, const VertexOrder& order) {
    check_order(d, order);
    const int p = d.vertex_count();
    std::vector<int> colors(p, 0);
    std::vector<std::pair<VertexId, int>> pairs;
    pairs.reserve(p);
    int used = 0;
    for (int v : order) {
        std::vector<bool> taken(p + 2, false);
        for (int u : d.in_neighbors(v)) {
            if (colors[u] > 0) taken[colors[u]] = true;
        }
        int c = 1;
        while (taken[c]) ++c;
        colors[v] = c;
        used = std::max(used, c);
        pairs.emplace_back(v, c);
    }
    return SeqResult{used, SequenceColoring::from_pairs(std::move(pairs))};
}

namespace {

struct ScanState {
    bool initialized = false;
    int min_exact = 0, max_exact = 0, min_greedy = 0, max_greedy = 0;
    VertexOrder min_exact_order, max_exact_order, min_greedy_order, max_greedy_order;
};

int greedy_count(const Digraph& d, const VertexOrder& order, std::vector<int>& colors) {
    std::fill(colors.begin(), colors.end(), 0);
    int used = 0;
    for (int v : order) {
        std::uint32_t taken = 0;
        for (int u : d.in_neighbors(v)) {
            if (colors[u] > 0) taken |= 1u << colors[u];
        }
        int c = 1;
        while (taken & (1u << c)) ++c;
        colors[v] = c;
        used = std::max(used, c);
    }
    return used;
}

// Exhaustive order scan. The exact value depends only on the forward
// constraint graph, so its chromatic number is memoized by edge mask when
// the pair count fits in 64 bits.
ScanState scan_all_orders(const Digraph& d, int limit, bool need_exact, bool need_greedy) {
    const int p = d.vertex_count();
    if (p > limit) {
        throw SizeLimitError("order scan refused: p=" + std::to_string(p) +
                                 " exceeds the enumeration gate of " + std::to_string(limit),
                             limit);
    }
    if (p < 1) throw InputError("order scan needs at least one vertex");

    const int pair_count = p * (p - 1) / 2;
    const bool memoize = pair_count <= 64;
    std::vector<std::vector<int>> pair_index;
    if (memoize) {
        pair_index.assign(p, std::vector<int>(p, -1));
        int next = 0;
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v) pair_index[u][v] = next++;
    }
    std::unordered_map<std::uint64_t, int> chi_by_mask;

    VertexOrder order(p);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(p), greedy_colors(p);

    ScanState state;
    do {
        for (int i = 0; i < p; ++i) pos[order[i]] = i;

        if (need_exact) {
            int value;
            if (memoize) {
                std::uint64_t mask = 0;
                for (const Arc& a : d.arcs()) {
                    if (pos[a.first] < pos[a.second]) {
                        int u = std::min(a.first, a.second);
                        int v = std::max(a.first, a.second);
                        mask |= std::uint64_t{1} << pair_index[u][v];
                    }
                }
                auto it = chi_by_mask.find(mask);
                if (it != chi_by_mask.end()) {
                    value = it->second;
                } else {
                    value = chromatic_number_exact(forward_constraint_graph(d, order)).color_count;
                    chi_by_mask.emplace(mask, value);
                }
            } else {
                value = chromatic_number_exact(forward_constraint_graph(d, order)).color_count;
            }
            if (!state.initialized || value < state.min_exact) {
                state.min_exact = value;
                state.min_exact_order = order;
            }
            if (!state.initialized || value > state.max_exact) {
                state.max_exact = value;
                state.max_exact_order = order;
            }
        }
        if (need_greedy) {
            int value = greedy_count(d, order, greedy_colors);
            if (!state.initialized || value < state.min_greedy) {
                state.min_greedy = value;
                state.min_greedy_order = order;
            }
            if (!state.initialized || value > state.max_greedy) {
                state.max_greedy = value;
                state.max_greedy_order = order;
            }
        }
        state.initialized = true;
    } while (std::next_permutation(order.begin(), order.end()));
    return state;
}

}  // namespace

OrderScan min_over_orders(const Digraph& d, SeqMode mode, int limit) {
    ScanState state = scan_all_orders(d, limit, mode == SeqMode::kExact, mode == SeqMode::kGreedy);
    if (mode == SeqMode::kExact) return OrderScan{state.min_exact, state.min_exact_order};
    return OrderScan{state.min_greedy, state.min_greedy_order};
}

OrderScan max_over_orders(const Digraph& d, SeqMode mode, int limit) {
    ScanState state = scan_all_orders(d, limit, mode == SeqMode::kExact, mode == SeqMode::kGreedy);
    if (mode == SeqMode::kExact) return OrderScan{state.max_exact, state.max_exact_order};
    return OrderScan{state.max_greedy, state.max_greedy_order};
}

OrderScan max_over_orders(const UndirectedGraph& g, SeqMode mode, int limit) {
    return max_over_orders(symmetric_digraph(g), mode, limit);
}

OrderScanStats scan_orders(const Digraph& d, int limit) {
    ScanState state = scan_all_orders(d, limit, true, true);
    return OrderScanStats{OrderScan{state.min_exact, state.min_exact_order},
                          OrderScan{state.max_exact, state.max_exact_order},
                          OrderScan{state.min_greedy, state.min_greedy_order},
                          OrderScan{state.max_greedy, state.max_greedy_order}};
}

std::pair<Digraph, VertexOrder> transitive_tournament(int n) {
    if (n < 1) throw InputError("transitive tournament needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
    VertexOrder order(n);
    std::iota(order.begin(), order.end(), 0);
    return {Digraph(n, std::move(arcs)), std::move(order)};
}

}  // namespace dicolor
