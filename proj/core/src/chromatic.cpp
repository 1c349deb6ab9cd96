#include "dicolor/chromatic.hpp"

#include <algorithm>
#include <cstdint>

namespace dicolor {

namespace {

// Renumber colors by first occurrence along vertex index order.
GraphColoring normalize(std::vector<int> colors) {
    std::vector<int> remap(colors.size() + 2, 0);
    int next = 0;
    for (int& c : colors) {
        if (remap[c] == 0) remap[c] = ++next;
        c = remap[c];
    }
    return GraphColoring{next, std::move(colors)};
}

struct Search {
    const UndirectedGraph& g;
    const std::vector<int>& order;
    std::vector<int> colors;  // 0 = uncolored
    int k = 0;

    bool assign(size_t pos, int used) {
        if (pos == order.size()) return true;
        int v = order[pos];
        std::uint32_t forbidden = 0;
        for (int w : g.neighbors(v)) {
            if (colors[w] > 0) forbidden |= (1u << colors[w]);
        }
        int max_color = std::min(used + 1, k);
        for (int c = 1; c <= max_color; ++c) {
            if (forbidden & (1u << c)) continue;
            colors[v] = c;
            if (assign(pos + 1, std::max(used, c))) return true;
            colors[v] = 0;
        }
        return false;
    }
};

}  // namespace

GraphColoring chromatic_number_exact(const UndirectedGraph& g, int limit) {
    const int p = g.vertex_count();
    if (p > limit) {
        throw SizeLimitError("exact chromatic number refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    if (p == 0) return GraphColoring{0, {}};

    std::vector<int> order(p);
    for (int v = 0; v < p; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    for (int k = 1; k <= p; ++k) {
        Search search{g, order, std::vector<int>(p, 0), k};
        if (search.assign(0, 0)) return normalize(std::move(search.colors));
    }
    // k = p always succeeds; unreachable.
    throw Error("chromatic search failed to terminate");
}

GraphColoring greedy_color_graph(const UndirectedGraph& g, const std::vector<VertexId>& order) {
    const int p = g.vertex_count();
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

    std::vector<int> colors(p, 0);
    int used = 0;
    for (int v : order) {
        std::vector<bool> taken(p + 2, false);
        for (int w : g.neighbors(v)) {
            if (colors[w] > 0) taken[colors[w]] = true;
        }
        int c = 1;
        while (taken[c]) ++c;
        colors[v] = c;
        used = std::max(used, c);
    }
    return GraphColoring{used, std::move(colors)};
}

}  // namespace dicolor
