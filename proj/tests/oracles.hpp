// Test-only oracles, deliberately independent of the library's search
// paths: plain enumeration, no pruning beyond feasibility, no shared code
// with the solvers they check.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "dicolor/digraph.hpp"

namespace oracles {

using dicolor::Digraph;
using dicolor::UndirectedGraph;
using dicolor::VertexId;

// Recursive three-color DFS cycle test.
inline bool acyclic_brute(const Digraph& d, const std::vector<int>& members) {
    std::vector<bool> in_set(d.vertex_count(), false);
    for (int v : members) in_set[v] = true;
    std::vector<int> state(d.vertex_count(), 0);  // 0 new, 1 active, 2 done
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int w : d.out_neighbors(v)) {
            if (!in_set[w]) continue;
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v : members) {
        if (state[v] == 0 && !dfs(v)) return false;
    }
    return true;
}

inline bool acyclic_brute(const Digraph& d) {
    std::vector<int> all(d.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return acyclic_brute(d, all);
}

// Enumerates every assignment V -> {1..k} via an odometer.
template <typename Valid>
bool some_assignment(int p, int k, Valid valid) {
    std::vector<int> colors(p, 1);
    while (true) {
        if (valid(colors)) return true;
        int i = 0;
        while (i < p && colors[i] == k) {
            colors[i] = 1;
            ++i;
        }
        if (i == p) return false;
        ++colors[i];
    }
}

inline int chromatic_brute(const UndirectedGraph& g) {
    const int p = g.vertex_count();
    if (p == 0) return 0;
    for (int k = 1; k <= p; ++k) {
        bool found = some_assignment(p, k, [&](const std::vector<int>& colors) {
            for (const auto& [u, v] : g.edges()) {
                if (colors[u] == colors[v]) return false;
            }
            return true;
        });
        if (found) return k;
    }
    return p;
}

inline int chi_d_brute(const Digraph& d) {
    const int p = d.vertex_count();
    if (p == 0) return 0;
    for (int k = 1; k <= p; ++k) {
        bool found = some_assignment(p, k, [&](const std::vector<int>& colors) {
            for (int c = 1; c <= k; ++c) {
                std::vector<int> members;
                for (int v = 0; v < p; ++v) {
                    if (colors[v] == c) members.push_back(v);
                }
                if (!acyclic_brute(d, members)) return false;
            }
            return true;
        });
        if (found) return k;
    }
    return p;
}

inline int beta_oc_brute(const Digraph& d) {
    const int p = d.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < p; ++v) {
            if (mask & (1u << v)) members.push_back(v);
        }
        if (acyclic_brute(d, members)) best = std::max(best, static_cast<int>(members.size()));
    }
    return best;
}

// All set partitions of {0..p-1}, classes ordered by smallest member.
inline void all_partitions(int p,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> classes;
    classes.reserve(p);
    std::function<void(int)> rec = [&](int v) {
        if (v == p) {
            visit(classes);
            return;
        }
        const size_t existing = classes.size();
        for (size_t i = 0; i < existing; ++i) {
            classes[i].push_back(v);
            rec(v + 1);
            classes[i].pop_back();
        }
        classes.push_back({v});
        rec(v + 1);
        classes.pop_back();
    };
    rec(0);
}

inline bool complete_brute(const UndirectedGraph& g, const std::vector<std::vector<int>>& classes) {
    for (size_t i = 0; i < classes.size(); ++i) {
        for (size_t j = i + 1; j < classes.size(); ++j) {
            bool joined = false;
            for (int u : classes[i])
                for (int v : classes[j]) joined = joined || g.has_edge(u, v);
            if (!joined) return false;
        }
    }
    return true;
}

inline bool complete_brute(const Digraph& d, const std::vector<std::vector<int>>& classes) {
    for (size_t i = 0; i < classes.size(); ++i) {
        for (size_t j = i + 1; j < classes.size(); ++j) {
            bool joined = false;
            for (int u : classes[i])
                for (int v : classes[j]) joined = joined || d.has_arc(u, v) || d.has_arc(v, u);
            if (!joined) return false;
        }
    }
    return true;
}

inline bool independent_brute(const UndirectedGraph& g, const std::vector<int>& cls) {
    for (size_t i = 0; i < cls.size(); ++i)
        for (size_t j = i + 1; j < cls.size(); ++j)
            if (g.has_edge(cls[i], cls[j])) return false;
    return true;
}

inline int psi_brute(const UndirectedGraph& g) {
    int best = 0;
    all_partitions(g.vertex_count(), [&](const std::vector<std::vector<int>>& classes) {
        for (const auto& cls : classes) {
            if (!independent_brute(g, cls)) return;
        }
        if (complete_brute(g, classes)) best = std::max(best, static_cast<int>(classes.size()));
    });
    return best;
}

inline int psi_sd_brute(const Digraph& d) {
    int best = 0;
    all_partitions(d.vertex_count(), [&](const std::vector<std::vector<int>>& classes) {
        for (const auto& cls : classes) {
            if (!acyclic_brute(d, cls)) return;
        }
        if (complete_brute(d, classes)) best = std::max(best, static_cast<int>(classes.size()));
    });
    return best;
}

// First-fit on the graph along an order; used for the Grundy oracle.
inline int first_fit_brute(const UndirectedGraph& g, const std::vector<int>& order) {
    std::vector<int> colors(g.vertex_count(), 0);
    int used = 0;
    for (int v : order) {
        std::set<int> taken;
        for (int w : g.neighbors(v)) {
            if (colors[w] > 0) taken.insert(colors[w]);
        }
        int c = 1;
        while (taken.count(c)) ++c;
        colors[v] = c;
        used = std::max(used, c);
    }
    return used;
}

inline int grundy_brute(const UndirectedGraph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        best = std::max(best, first_fit_brute(g, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline UndirectedGraph path_graph(int n) {
    std::vector<dicolor::Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return UndirectedGraph(n, edges);
}

inline UndirectedGraph cycle_graph(int n) {
    std::vector<dicolor::Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return UndirectedGraph(n, edges);
}

inline UndirectedGraph complete_graph(int n) {
    std::vector<dicolor::Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return UndirectedGraph(n, edges);
}

}  // namespace oracles
