#include "doctest.h"

#include <numeric>

#include "dicolor/bounds.hpp"
#include "dicolor/figures.hpp"
#include "dicolor/generate.hpp"
#include "oracles.hpp"

using namespace dicolor;

TEST_CASE("underlying-graph bound") {
    CHECK(bound_underlying(fig2_digraph()) == 3);

    // strict inequality witness: the directed 3-cycle
    CHECK(bound_underlying(directed_cycle(3)) == 3);
    CHECK(chi_d_exact(directed_cycle(3)).chi_d == 2);

    // fully symmetric digraphs attain the bound
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        UndirectedGraph g = underlying_graph(random_digraph(6, 0.4, true, seed));
        Digraph sym = symmetric_digraph(g);
        CHECK(bound_underlying(sym) == chi_d_exact(sym).chi_d);
    }
}

TEST_CASE("indegree bound") {
    CHECK(bound_indegree(directed_cycle(3)) == 2);
    CHECK(bound_indegree(Digraph(5, {})) == 5);

    CHECK_THROWS_AS(bound_indegree(fig2_digraph()), InputError);
    CHECK_THROWS_WITH(bound_indegree(fig2_digraph()), doctest::Contains("symmetric"));
    // the refused value would undercut chi_d on this instance
    CHECK(fig2_digraph().vertex_count() - delta_in(fig2_digraph()) == 1);
    CHECK(chi_d_exact(fig2_digraph()).chi_d == 2);

    // Digons are not the only failure mode. A directed triangle feeding a
    // sink is digon-free, yet p - max_indegree = 1 while two classes are
    // needed; exactly eight digraphs on four vertices behave this way.
    Digraph triangle_sink(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    CHECK(symmetric_arcs(triangle_sink).empty());
    CHECK(bound_indegree(triangle_sink) == 1);
    CHECK(chi_d_exact(triangle_sink).chi_d == 2);
    int violations = 0;
    for (std::uint64_t mask = 0; mask < arc_mask_count(4); ++mask) {
        Digraph d = digraph_from_arc_mask(4, mask);
        if (!symmetric_arcs(d).empty()) continue;
        if (chi_d_exact(d).chi_d > bound_indegree(d)) ++violations;
    }
    CHECK(violations == 8);
}

TEST_CASE("independent-sum bound") {
    // the empty set always gives p and is optimal on an arcless digraph
    IndependentSumBound empty5 = bound_independent_sum(Digraph(5, {}));
    CHECK(empty5.value == 5);
    CHECK(empty5.witness.empty());

    // directed 3-cycle: independent sets are {} and singletons, all give 3
    IndependentSumBound c3 = bound_independent_sum(directed_cycle(3));
    CHECK(c3.value == 3);

    // star with all arcs into the center
    std::vector<Arc> star_arcs;
    for (int leaf = 1; leaf <= 4; ++leaf) star_arcs.emplace_back(leaf, 0);
    Digraph star(5, star_arcs);
    IndependentSumBound star_bound = bound_independent_sum(star);
    CHECK(star_bound.value == 2);
    CHECK(star_bound.witness == std::vector<VertexId>{0});
    CHECK(chi_d_exact(star).chi_d == 1);

    CHECK_THROWS_AS(bound_independent_sum(fig2_digraph()), InputError);

    // exhaustive check of the minimization on small instances
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Digraph d = random_digraph(6, 0.3, false, seed);
        IndependentSumBound bound = bound_independent_sum(d);
        int brute = d.vertex_count();
        for (unsigned mask = 0; mask < (1u << 6); ++mask) {
            std::vector<int> members;
            for (int v = 0; v < 6; ++v) {
                if (mask & (1u << v)) members.push_back(v);
            }
            if (!is_independent_set(d, members)) continue;
            int value = d.vertex_count() + static_cast<int>(members.size());
            for (int v : members) value -= d.in_degree(v);
            brute = std::min(brute, value);
        }
        CHECK(bound.value == brute);
        CHECK(is_independent_set(d, bound.witness));
    }

    // The claimed inequality chi_d <= p - sum(ind) + |S| fails for digraphs
    // with five or more vertices: a directed triangle feeding two
    // independent sinks drives the bound to 1 while two classes are needed.
    // Four-vertex instances cannot violate it (checked exhaustively).
    Digraph triangle_two_sinks(
        5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
    CHECK(symmetric_arcs(triangle_two_sinks).empty());
    CHECK(bound_independent_sum(triangle_two_sinks).value == 1);
    CHECK(bound_independent_sum(triangle_two_sinks).witness == std::vector<VertexId>{3, 4});
    CHECK(chi_d_exact(triangle_two_sinks).chi_d == 2);
    int violations = 0;
    for (std::uint64_t mask = 0; mask < arc_mask_count(4); ++mask) {
        Digraph d = digraph_from_arc_mask(4, mask);
        if (!symmetric_arcs(d).empty()) continue;
        if (chi_d_exact(d).chi_d > bound_independent_sum(d).value) ++violations;
    }
    CHECK(violations == 0);
}

TEST_CASE("sandwich report") {
    BoundsReport acyclic = sandwich_check(random_dag(8, 0.4, 3));
    CHECK(acyclic.chi_d == 1);
    CHECK(acyclic.beta_oc == 8);
    CHECK(acyclic.lower_ratio == 1);
    CHECK(acyclic.upper_beta == 1);
    CHECK(acyclic.sandwich_holds);

    BoundsReport c3 = sandwich_check(directed_cycle(3));
    CHECK(c3.chi_d == 2);
    CHECK(c3.beta_oc == 2);
    CHECK(c3.lower_ratio == 2);
    CHECK(c3.upper_beta == 2);
    CHECK(c3.sandwich_holds);

    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Digraph d = random_digraph(3 + static_cast<int>(seed % 6), 0.4, seed % 2 == 0, seed);
        CHECK(sandwich_check(d).sandwich_holds);
    }
}

TEST_CASE("odd symmetric cycle detection") {
    Digraph full_sym(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    OddSymmetricCycleCheck odd = has_odd_symmetric_cycle(full_sym);
    CHECK(odd.found);
    CHECK(odd.cycle.size() == 3);
    // every consecutive witness pair is a digon
    for (size_t i = 0; i < odd.cycle.size(); ++i) {
        int u = odd.cycle[i], v = odd.cycle[(i + 1) % odd.cycle.size()];
        CHECK(full_sym.has_arc(u, v));
        CHECK(full_sym.has_arc(v, u));
    }

    CHECK_FALSE(has_odd_symmetric_cycle(directed_cycle(3)).found);
    CHECK_FALSE(has_odd_symmetric_cycle(symmetric_digraph(oracles::cycle_graph(4))).found);
    CHECK(has_odd_symmetric_cycle(symmetric_digraph(oracles::cycle_graph(5))).found);
}

TEST_CASE("c-bipartite predicate") {
    for (int n = 2; n <= 7; ++n) {
        CHECK(is_c_bipartite(directed_cycle(n)));
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(is_c_bipartite(random_dag(9, 0.4, seed)));
    }
    CHECK_FALSE(is_c_bipartite(symmetric_digraph(oracles::complete_graph(3))));
}

TEST_CASE("two-color criteria scan") {
    // agreement everywhere below four vertices
    CHECK(scan_two_color_criteria(1).disagreements == 0);
    CHECK(scan_two_color_criteria(2).disagreements == 0);
    CHECK(scan_two_color_criteria(3).disagreements == 0);

    // at four vertices the implication "no odd symmetric cycle => two
    // classes suffice" already fails: digons on a star plus a directed
    // triangle need three classes with a bipartite digon graph
    TwoColorScanReport p4 = scan_two_color_criteria(4);
    CHECK(p4.total == 4096);
    CHECK(p4.disagreements == 8);
    for (const TwoColorScanRow& row : p4.disagreement_rows) {
        CHECK(row.no_odd_symmetric_cycle);
        CHECK_FALSE(row.c_bipartite);
    }

    Digraph witness(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {0, 3}, {3, 0}, {1, 2}, {2, 3}, {3, 1}});
    CHECK(chi_d_exact(witness).chi_d == 3);
    CHECK_FALSE(has_odd_symmetric_cycle(witness).found);

    // the safe direction never fails on random samples: an odd symmetric
    // cycle always forces at least three classes
    TwoColorScanReport random_scan = scan_two_color_criteria_random(6, 120, 7, 0.4, true);
    for (const TwoColorScanRow& row : random_scan.disagreement_rows) {
        bool odd_cycle_yet_two_classes = !row.no_odd_symmetric_cycle && row.c_bipartite;
        CHECK_FALSE(odd_cycle_yet_two_classes);
    }
}

TEST_CASE("complete partitions") {
    CHECK(is_complete_partition(fig7_digraph(), fig7_partition()));

    UndirectedGraph k4 = oracles::complete_graph(4);
    CHECK(is_complete_partition(k4, {{0}, {1}, {2}, {3}}));

    UndirectedGraph p4 = oracles::path_graph(4);
    CHECK_FALSE(is_complete_partition(p4, {{0}, {1}, {2}, {3}}));

    CHECK_THROWS_AS(is_complete_partition(p4, {{0}, {1}, {2}}), InputError);
    CHECK_THROWS_AS(is_complete_partition(p4, {{0, 0}, {1}, {2}, {3}}), InputError);
}

TEST_CASE("achromatic number") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(achromatic_number(oracles::complete_graph(n)).order == n);
    }
    CHECK(achromatic_number(UndirectedGraph(5, {})).order == 1);
    CHECK(achromatic_number(oracles::path_graph(4)).order == 3);

    CHECK_THROWS_AS(achromatic_number(UndirectedGraph(11, {})), SizeLimitError);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        UndirectedGraph g = underlying_graph(random_digraph(6, 0.4, true, seed));
        PartitionResult result = achromatic_number(g);
        CHECK(result.order == oracles::psi_brute(g));
        CHECK(is_complete_partition(g, result.classes));
    }
}

TEST_CASE("maximum complete partition into acyclic classes") {
    CHECK(psi_sd(fig7_digraph()).order == 4);
    CHECK(psi_sd(directed_cycle(3)).order == 3);
    CHECK(psi_sd(Digraph(1, {})).order == 1);

    // the partition reading exceeds psi of the underlying graph here
    CHECK(psi_sd(directed_cycle(4)).order == 3);
    CHECK(achromatic_number(underlying_graph(directed_cycle(4))).order == 2);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = random_digraph(6, 0.35, true, seed);
        PartitionResult result = psi_sd(d);
        CHECK(result.order == oracles::psi_sd_brute(d));
        CHECK(is_complete_partition(d, result.classes));
        for (const auto& cls : result.classes) CHECK(can_be_monochromatic(d, cls));
    }
}

TEST_CASE("grundy number") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(grundy_number(oracles::complete_graph(n)).color_count == n);
    }
    CHECK(grundy_number(UndirectedGraph(4, {})).color_count == 1);
    CHECK(grundy_number(fig4b_graph()).color_count == 4);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        UndirectedGraph g = underlying_graph(random_digraph(6, 0.4, true, seed));
        CHECK(grundy_number(g).color_count == oracles::grundy_brute(g));
    }
}

TEST_CASE("interpolation between chi and psi") {
    InterpolationCheck k4 = interpolation_check(oracles::complete_graph(4));
    CHECK(k4.holds);
    CHECK(k4.chi == 4);
    CHECK(k4.psi == 4);
    CHECK(k4.rows.size() == 1);

    InterpolationCheck c5 = interpolation_check(oracles::cycle_graph(5));
    CHECK(c5.holds);
    CHECK(c5.chi == 3);
    CHECK(c5.psi == 3);

    InterpolationCheck edgeless = interpolation_check(UndirectedGraph(4, {}));
    CHECK(edgeless.holds);
    CHECK(edgeless.chi == 1);
    CHECK(edgeless.psi == 1);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        UndirectedGraph g = underlying_graph(random_digraph(6, 0.4, true, seed));
        InterpolationCheck check = interpolation_check(g);
        CHECK(check.holds);
        CHECK(static_cast<int>(check.rows.size()) == check.psi - check.chi + 1);
        for (const InterpolationRow& row : check.rows) {
            CHECK(is_complete_partition(g, row.classes));
            for (const auto& cls : row.classes) CHECK(oracles::independent_brute(g, cls));
        }
    }
}

TEST_CASE("chain report") {
    ChainReport acyclic = chain_check(random_dag(6, 0.4, 2));
    CHECK(acyclic.quantities.chi_d == 1);
    for (const ChainLink& link : acyclic.links) {
        if (link.name == "chi_d <= min_s chi_sd(D)") CHECK(link.holds);
    }

    ChainReport fig7 = chain_check(fig7_digraph());
    CHECK(fig7.quantities.psi_sd_partition == 4);
    CHECK(fig7.quantities.psi_underlying == 4);

    // the displayed final link fails on the symmetric path
    ChainReport sym_p4 = chain_check(symmetric_digraph(oracles::path_graph(4)));
    bool final_link_failed = false;
    for (const ChainLink& link : sym_p4.links) {
        if (link.name == "psi(G) <= max_s chi_sd(D)") final_link_failed = !link.holds;
    }
    CHECK(final_link_failed);

    // sampled instances: the reverse direction and the partition-dominates
    // link always hold
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = random_digraph(5, 0.4, seed % 2 == 0, seed);
        ChainReport report = chain_check(d);
        for (const ChainLink& link : report.links) {
            if (link.name == "max_s chi_sd(D) <= psi(G)") CHECK(link.holds);
            if (link.name == "psi(G) <= psi_sd_partition(D)") CHECK(link.holds);
            if (link.name == "chi_d <= min_s chi_sd(D)") {
                CHECK(link.holds);
                CHECK(link.lhs == link.rhs);
            }
            if (link.name == "max_s chi_sd(D) <= chi(G)") CHECK(link.holds);
        }
    }
}

TEST_CASE("chi equals psi characterization") {
    CHECK(chi_equals_psi_check(oracles::complete_graph(5)).equal);
    CHECK(chi_equals_psi_check(oracles::cycle_graph(5)).equal);

    ChiPsiCheck p4 = chi_equals_psi_check(oracles::path_graph(4));
    CHECK_FALSE(p4.equal);
    CHECK(p4.chi == 2);
    CHECK(p4.psi == 3);

    // wheels: hub joined to every rim vertex of a cycle; rims 4 and 5
    // collapse to a single point, the rim-6 wheel does not (the rim splits
    // into three opposite pairs, giving a complete partition of order 4
    // against chromatic number 3)
    auto wheel = [](int rim) {
        std::vector<Edge> edges;
        for (int i = 0; i < rim; ++i) {
            edges.emplace_back(std::min(i, (i + 1) % rim), std::max(i, (i + 1) % rim));
            edges.emplace_back(i, rim);
        }
        return UndirectedGraph(rim + 1, edges);
    };
    CHECK(chi_equals_psi_check(wheel(4)).equal);
    CHECK(chi_equals_psi_check(wheel(5)).equal);
    ChiPsiCheck w6 = chi_equals_psi_check(wheel(6));
    CHECK_FALSE(w6.equal);
    CHECK(w6.chi == 3);
    CHECK(w6.psi == 4);
}

TEST_CASE("sound bounds hold across a mixed ensemble") {
    // the underlying-graph bound and the sandwich hold universally; the
    // degree-based bounds are tracked but not universal (see the
    // counterexample cases above)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        int p = 3 + static_cast<int>(seed % 5);
        Digraph d = random_digraph(p, 0.2 + 0.1 * (seed % 4), seed % 3 != 0, seed);
        int chi_d = chi_d_exact(d).chi_d;
        CHECK(chi_d <= bound_underlying(d));
        BetaOc beta = beta_oc(d);
        CHECK((p + beta.size - 1) / beta.size <= chi_d);
        CHECK(chi_d <= p - beta.size + 1);
    }
}
