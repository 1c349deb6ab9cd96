#include "dicolor/bounds.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "dicolor/generate.hpp"

namespace dicolor {

int bound_underlying(const Digraph& d, int limit) {
    return chromatic_number_exact(underlying_graph(d), limit).color_count;
}

int bound_indegree(const Digraph& d) {
    std::vector<Edge> digons = symmetric_arcs(d);
    if (!digons.empty()) {
        throw InputError(
            "indegree bound requires a digraph without symmetric arcs; pair {" +
            vertex_name(digons.front().first) + ", " + vertex_name(digons.front().second) +
            "} is symmetric and the bound p - max_indegree can undercut the dichromatic number");
    }
    return d.vertex_count() - delta_in(d);
}

IndependentSumBound bound_independent_sum(const Digraph& d, int limit) {
    const int p = d.vertex_count();
    if (!symmetric_arcs(d).empty()) {
        throw InputError("independent-sum bound requires a digraph without symmetric arcs");
    }
    if (p > limit) {
        throw SizeLimitError("independent-set enumeration refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    UndirectedGraph g = underlying_graph(d);

    IndependentSumBound best{p, {}};  // S = {} always available
    std::vector<VertexId> current;
    // Branch over vertices in ascending order: include (if still independent)
    // then exclude. Strict improvement keeps the first minimizing set found.
    auto recurse = [&](auto&& self, int v, int objective) -> void {
        if (v == p) {
            if (objective < best.value) {
                best.value = objective;
                best.witness = current;
            }
            return;
        }
        bool independent = true;
        for (int u : current) {
            if (g.has_edge(u, v)) {
                independent = false;
                break;
            }
        }
        if (independent) {
            current.push_back(v);
            self(self, v + 1, objective + 1 - d.in_degree(v));
            current.pop_back();
        }
        self(self, v + 1, objective);
    };
    recurse(recurse, 0, p);
    return best;
}

BoundsReport sandwich_check(const Digraph& d, int limit) {
    BoundsReport report;
    report.p = d.vertex_count();
    report.chi_underlying = bound_underlying(d, std::max(limit, limits::kChromaticExact));
    report.chi_d = chi_d_exact(d, limit).chi_d;
    report.indegree_value_if_applied = report.p - delta_in(d);
    if (symmetric_arcs(d).empty()) {
        report.bound_indegree = bound_indegree(d);
        report.bound_independent_sum = bound_independent_sum(d, limit).value;
    }
    BetaOc beta = beta_oc(d, limit);
    report.beta_oc = beta.size;
    report.lower_ratio = (report.p + beta.size - 1) / beta.size;  // integer ceiling
    report.upper_beta = report.p - beta.size + 1;
    report.sandwich_holds =
        report.lower_ratio <= *report.chi_d && *report.chi_d <= report.upper_beta;
    return report;
}

OddSymmetricCycleCheck has_odd_symmetric_cycle(const Digraph& d) {
    const int p = d.vertex_count();
    std::vector<std::vector<int>> digon_adj(p);
    for (const Edge& e : symmetric_arcs(d)) {
        digon_adj[e.first].push_back(e.second);
        digon_adj[e.second].push_back(e.first);
    }

    // Non-bipartiteness of the digon graph; the conflict edge plus tree
    // paths to the meeting point gives an odd cycle witness.
    std::vector<int> side(p, -1), parent(p, -1), depth(p, 0);
    for (int s = 0; s < p; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : digon_adj[v]) {
                if (side[w] < 0) {
                    side[w] = side[v] ^ 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    // Climb both endpoints to their meeting point; the two
                    // tree paths plus the conflict edge form an odd cycle.
                    std::vector<int> up_v, up_w;
                    int a = v, b = w;
                    while (depth[a] > depth[b]) {
                        up_v.push_back(a);
                        a = parent[a];
                    }
                    while (depth[b] > depth[a]) {
                        up_w.push_back(b);
                        b = parent[b];
                    }
                    while (a != b) {
                        up_v.push_back(a);
                        up_w.push_back(b);
                        a = parent[a];
                        b = parent[b];
                    }
                    OddSymmetricCycleCheck check;
                    check.found = true;
                    check.cycle = up_v;
                    check.cycle.push_back(a);
                    check.cycle.insert(check.cycle.end(), up_w.rbegin(), up_w.rend());
                    return check;
                }
            }
        }
    }
    return OddSymmetricCycleCheck{};
}

bool is_c_bipartite(const Digraph& d, int limit) {
    return chi_d_exact(d, limit).chi_d <= 2;
}

namespace {

TwoColorScanRow evaluate_two_color(const Digraph& d, std::string instance) {
    TwoColorScanRow row;
    row.instance = std::move(instance);
    row.c_bipartite = is_c_bipartite(d);
    row.no_odd_symmetric_cycle = !has_odd_symmetric_cycle(d).found;
    return row;
}

void fold_row(TwoColorScanReport& report, TwoColorScanRow row) {
    ++report.total;
    if (row.c_bipartite != row.no_odd_symmetric_cycle) {
        ++report.disagreements;
        report.disagreement_rows.push_back(std::move(row));
    }
}

}  // namespace

TwoColorScanReport scan_two_color_criteria(int p) {
    if (p < 1 || p > 4) throw InputError("exhaustive two-color scan supports 1 <= p <= 4");
    TwoColorScanReport report;
    const std::uint64_t total = arc_mask_count(p);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Digraph d = digraph_from_arc_mask(p, mask);
        fold_row(report, evaluate_two_color(d, "p" + std::to_string(p) + "#" +
                                                   std::to_string(mask)));
    }
    return report;
}

TwoColorScanReport scan_two_color_criteria_random(int p, int count, std::uint64_t seed,
                                                  double arc_probability, bool allow_digons) {
    TwoColorScanReport report;
    for (int i = 0; i < count; ++i) {
        Digraph d = random_digraph(p, arc_probability, allow_digons, mix_seed(seed, i));
        fold_row(report, evaluate_two_color(d, "seed" + std::to_string(i)));
    }
    return report;
}

namespace {

void check_partition(int p, const std::vector<std::vector<VertexId>>& classes) {
    std::vector<bool> seen(p, false);
    for (const auto& cls : classes) {
        if (cls.empty()) throw InputError("partition classes must be nonempty");
        for (int v : cls) {
            if (v < 0 || v >= p || seen[v]) {
                throw InputError("partition classes must be disjoint subsets of the vertex set");
            }
            seen[v] = true;
        }
    }
    for (int v = 0; v < p; ++v) {
        if (!seen[v]) {
            throw InputError("partition misses " + vertex_name(v));
        }
    }
}

template <typename JoinedFn>
bool complete_partition(int p, const std::vector<std::vector<VertexId>>& classes,
                        JoinedFn joined) {
    check_partition(p, classes);
    for (size_t i = 0; i < classes.size(); ++i) {
        for (size_t j = i + 1; j < classes.size(); ++j) {
            if (!joined(classes[i], classes[j])) return false;
        }
    }
    return true;
}

}  // namespace

bool is_complete_partition(const UndirectedGraph& g,
                           const std::vector<std::vector<VertexId>>& classes) {
    return complete_partition(
        g.vertex_count(), classes,
        [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
            for (int u : a)
                for (int v : b)
                    if (g.has_edge(u, v)) return true;
            return false;
        });
}

bool is_complete_partition(const Digraph& d,
                           const std::vector<std::vector<VertexId>>& classes) {
    return complete_partition(
        d.vertex_count(), classes,
        [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
            for (int u : a)
                for (int v : b)
                    if (d.has_arc(u, v) || d.has_arc(v, u)) return true;
            return false;
        });
}

namespace {

// Set partitions in restricted-growth order: vertex i joins one of the
// existing classes or opens the next one. `feasible(cls, v)` prunes classes
// a vertex may not join; complete partitions of maximum order win, first
// witness kept.
struct PartitionScan {
    int p;
    std::function<bool(const std::vector<VertexId>&, VertexId)> feasible;
    std::function<bool(const std::vector<std::vector<VertexId>>&)> complete;

    PartitionResult best;
    std::vector<std::vector<VertexId>> classes;

    void run(int v) {
        if (v == p) {
            if (static_cast<int>(classes.size()) > best.order && complete(classes)) {
                best.order = static_cast<int>(classes.size());
                best.classes = classes;
            }
            return;
        }
        // Even opening a class for every remaining vertex cannot beat the
        // current best: prune.
        if (static_cast<int>(classes.size()) + (p - v) <= best.order) return;
        // Index loop: the recursive call grows and shrinks `classes`.
        const size_t existing = classes.size();
        for (size_t i = 0; i < existing; ++i) {
            if (!feasible(classes[i], v)) continue;
            classes[i].push_back(v);
            run(v + 1);
            classes[i].pop_back();
        }
        classes.emplace_back(1, v);
        run(v + 1);
        classes.pop_back();
    }
};

}  // namespace

PartitionResult achromatic_number(const UndirectedGraph& g, int limit) {
    const int p = g.vertex_count();
    if (p > limit) {
        throw SizeLimitError("complete-partition scan refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    if (p == 0) return PartitionResult{};
    PartitionScan scan{
        p,
        [&](const std::vector<VertexId>& cls, VertexId v) {
            for (int u : cls)
                if (g.has_edge(u, v)) return false;
            return true;
        },
        [&](const std::vector<std::vector<VertexId>>& classes) {
            return is_complete_partition(g, classes);
        },
        PartitionResult{},
        {}};
    scan.run(0);
    return scan.best;
}

PartitionResult psi_sd(const Digraph& d, int limit) {
    const int p = d.vertex_count();
    if (p > limit) {
        throw SizeLimitError("complete-partition scan refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    if (p == 0) return PartitionResult{};
    PartitionScan scan{
        p,
        [&](const std::vector<VertexId>& cls, VertexId v) {
            std::vector<VertexId> with_v = cls;
            with_v.push_back(v);
            return can_be_monochromatic(d, with_v);
        },
        [&](const std::vector<std::vector<VertexId>>& classes) {
            return is_complete_partition(d, classes);
        },
        PartitionResult{},
        {}};
    scan.run(0);
    return scan.best;
}

OrderScan grundy_number(const UndirectedGraph& g, int limit) {
    return max_over_orders(g, SeqMode::kGreedy, limit);
}

InterpolationCheck interpolation_check(const UndirectedGraph& g, int limit) {
    const int p = g.vertex_count();
    if (p > limit) {
        throw SizeLimitError("interpolation scan refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    InterpolationCheck check;
    check.chi = chromatic_number_exact(g).color_count;
    check.psi = achromatic_number(g, limit).order;

    std::vector<std::optional<std::vector<std::vector<VertexId>>>> witness(p + 1);
    std::vector<std::vector<VertexId>> classes;
    classes.reserve(p);
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == p) {
            int order = static_cast<int>(classes.size());
            if (!witness[order] && is_complete_partition(g, classes)) witness[order] = classes;
            return;
        }
        const size_t existing = classes.size();
        for (size_t i = 0; i < existing; ++i) {
            bool ok = true;
            for (int u : classes[i])
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            classes[i].push_back(v);
            self(self, v + 1);
            classes[i].pop_back();
        }
        classes.emplace_back(1, v);
        self(self, v + 1);
        classes.pop_back();
    };
    recurse(recurse, 0);

    check.holds = true;
    for (int a = check.chi; a <= check.psi; ++a) {
        if (!witness[a]) {
            check.holds = false;
            continue;
        }
        check.rows.push_back(InterpolationRow{a, *witness[a]});
    }
    return check;
}

ChainReport chain_check(const Digraph& d, int limit) {
    const int p = d.vertex_count();
    if (p > limit) {
        throw SizeLimitError("chain report refused: p=" + std::to_string(p) +
                                 " exceeds the size gate of " + std::to_string(limit),
                             limit);
    }
    UndirectedGraph g = underlying_graph(d);
    OrderScanStats stats = scan_orders(d, limit);

    ChainReport report;
    report.quantities.p = p;
    report.quantities.chi_d = chi_d_exact(d).chi_d;
    report.quantities.chi_sd_min_exact = stats.min_exact.color_count;
    report.quantities.chi_sd_max_exact = stats.max_exact.color_count;
    report.quantities.chi_sd_min_greedy = stats.min_greedy.color_count;
    report.quantities.chi_sd_max_greedy = stats.max_greedy.color_count;
    report.quantities.chi_underlying = chromatic_number_exact(g).color_count;
    report.quantities.grundy_underlying = grundy_number(g, limit).color_count;
    report.quantities.psi_underlying = achromatic_number(g, limit).order;
    report.quantities.psi_sd_partition = psi_sd(d, limit).order;

    auto link = [&](std::string name, int lhs, int rhs) {
        report.links.push_back(ChainLink{std::move(name), lhs, rhs, lhs <= rhs});
    };
    const ChainQuantities& q = report.quantities;
    link("chi_d <= min_s chi_sd(D)", q.chi_d, q.chi_sd_min_exact);
    link("max_s chi_sd(D) <= chi(G)", q.chi_sd_max_exact, q.chi_underlying);
    link("chi(G) <= grundy(G)", q.chi_underlying, q.grundy_underlying);
    link("grundy(G) <= psi(G)", q.grundy_underlying, q.psi_underlying);
    // The displayed final link; fails on some instances.
    link("psi(G) <= max_s chi_sd(D)", q.psi_underlying, q.chi_sd_max_exact);
    // Its reverse; holds throughout because every forward constraint graph
    // is a subgraph of G.
    link("max_s chi_sd(D) <= psi(G)", q.chi_sd_max_exact, q.psi_underlying);
    // Partition-based maximum complete partition dominates psi(G): every
    // complete partition into independent sets qualifies.
    link("psi(G) <= psi_sd_partition(D)", q.psi_underlying, q.psi_sd_partition);
    return report;
}

ChiPsiCheck chi_equals_psi_check(const UndirectedGraph& g, int limit) {
    ChiPsiCheck check;
    check.chi = chromatic_number_exact(g).color_count;
    check.psi = achromatic_number(g, limit).order;
    check.equal = check.chi == check.psi;
    return check;
}

}  // namespace dicolor
