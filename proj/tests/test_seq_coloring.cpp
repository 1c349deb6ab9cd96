#include "doctest.h"

#include <numeric>
#include <random>

#include "dicolor/dichromatic.hpp"
#include "dicolor/figures.hpp"
#include "dicolor/generate.hpp"
#include "dicolor/seq_coloring.hpp"
#include "oracles.hpp"

using namespace dicolor;

namespace {

SequenceColoring seq(std::vector<std::pair<VertexId, int>> pairs) {
    return SequenceColoring::from_pairs(std::move(pairs));
}

}  // namespace

TEST_CASE("sequence coloring construction") {
    SequenceColoring s = seq({{0, 1}, {2, 1}, {1, 2}});
    CHECK(s.color_count() == 2);
    CHECK(s.order() == VertexOrder{0, 2, 1});
    CHECK(s.colors_by_vertex() == std::vector<int>{1, 2, 1});

    CHECK_THROWS_AS(seq({{0, 1}, {0, 2}}), InputError);   // not a permutation
    CHECK_THROWS_AS(seq({{0, 1}, {1, 0}}), InputError);   // non-positive color
    CHECK_THROWS_AS(seq({{0, 1}, {1, 3}}), InputError);   // gap in color set
}

TEST_CASE("sequence validation resolves the two-arc orientation question") {
    // Two arcs into v2 reject the printed sequence (v1,1),(v3,2),(v2,2):
    // the arc v3->v2 points forward with equal colors.
    SequenceCheck drawn = validate_sequence_coloring(fig1b_drawn(), fig1b_sequence());
    CHECK_FALSE(drawn.valid);
    REQUIRE(drawn.violations.size() == 1);
    CHECK(drawn.violations[0].position_tail == 1);
    CHECK(drawn.violations[0].position_head == 2);
    CHECK(drawn.violations[0].arc == Arc{2, 1});

    // Flipping that arc to v2->v3 accepts the sequence.
    CHECK(validate_sequence_coloring(fig1b_resolved(), fig1b_sequence()).valid);

    // Of the four orientations of the two underlying edges, validity hinges
    // on the second edge alone: v3->v2 points forward with equal colors,
    // v2->v3 is backward; the v1-v2 edge never conflicts (distinct colors
    // forward, no constraint backward).
    for (bool flip_first : {false, true}) {
        for (bool flip_second : {false, true}) {
            Arc first = flip_first ? Arc{1, 0} : Arc{0, 1};
            Arc second = flip_second ? Arc{1, 2} : Arc{2, 1};
            Digraph d(3, {first, second});
            CHECK(validate_sequence_coloring(d, fig1b_sequence()).valid == flip_second);
        }
    }
}

TEST_CASE("sequence validation on the all-one and cycle figures") {
    // Out-star variant: both arcs have their head colored first.
    Digraph star(3, {{0, 1}, {0, 2}});
    CHECK(validate_sequence_coloring(star, seq({{2, 1}, {1, 1}, {0, 1}})).valid);

    // Full semi-cycle fixture, all color 1.
    CHECK(validate_sequence_coloring(fig1c_semicycle(), fig1c_sequence()).valid);

    // Directed 3-cycle with (v1,1),(v3,1),(v2,2).
    CHECK(validate_sequence_coloring(directed_cycle(3), fig3_sequence()).valid);

    CHECK_THROWS_AS(validate_sequence_coloring(directed_cycle(4), fig3_sequence()), InputError);
}

TEST_CASE("forward constraint graph") {
    Digraph c3 = directed_cycle(3);
    UndirectedGraph h = forward_constraint_graph(c3, {0, 1, 2});
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

    // reverse topological order of an acyclic digraph: no forward arcs
    Digraph tt3 = transitive_tournament(3).first;
    CHECK(forward_constraint_graph(tt3, {2, 1, 0}).edge_count() == 0);

    // natural order of the forward tournament: all pairs constrained
    CHECK(forward_constraint_graph(tt3, {0, 1, 2}).edge_count() == 3);

    // digons contribute an edge under every order
    Digraph digon(2, {{0, 1}, {1, 0}});
    CHECK(forward_constraint_graph(digon, {0, 1}).edge_count() == 1);
    CHECK(forward_constraint_graph(digon, {1, 0}).edge_count() == 1);
}

TEST_CASE("per-order exact numbers") {
    Digraph tt3 = transitive_tournament(3).first;
    CHECK(s_number_exact(tt3, {2, 1, 0}).color_count == 1);
    CHECK(s_number_exact(tt3, {0, 1, 2}).color_count == 3);

    for (const VertexOrder& order :
         {VertexOrder{0, 1, 2}, VertexOrder{0, 2, 1}, VertexOrder{1, 0, 2},
          VertexOrder{1, 2, 0}, VertexOrder{2, 0, 1}, VertexOrder{2, 1, 0}}) {
        CHECK(s_number_exact(directed_cycle(3), order).color_count == 2);
    }

    // the witness with order v1,v3,v2 is the printed two-coloring
    SeqResult r = s_number_exact(directed_cycle(3), {0, 2, 1});
    CHECK(r.sequence == fig3_sequence());
    CHECK(validate_sequence_coloring(directed_cycle(3), r.sequence).valid);
}

TEST_CASE("per-order greedy numbers reproduce the worked orders") {
    UndirectedGraph tree = fig4a_tree();
    SeqResult a = s_number_greedy(symmetric_digraph(tree), fig4a_order());
    CHECK(a.color_count == 3);
    CHECK(a.sequence ==
          seq({{0, 1}, {2, 1}, {4, 1}, {5, 1}, {1, 2}, {3, 3}}));

    CHECK(s_number_greedy(symmetric_digraph(fig4b_graph()), fig4b_order()).color_count == 4);
    CHECK(s_number_greedy(symmetric_digraph(tree), fig5a_order()).color_count == 2);
    CHECK(s_number_greedy(symmetric_digraph(tree), fig5b_order()).color_count == 3);

    auto [tt5, order5] = transitive_tournament(5);
    CHECK(s_number_greedy(tt5, order5).color_count == 5);
}

TEST_CASE("greedy equals first-fit on the forward constraint graph") {
    std::vector<int> order(7);
    std::iota(order.begin(), order.end(), 0);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Digraph d = random_digraph(7, 0.4, true, seed);
        VertexOrder o = order;
        std::mt19937_64 rng(seed);
        for (int i = 6; i > 0; --i) std::swap(o[i], o[rng() % (i + 1)]);

        SeqResult greedy = s_number_greedy(d, o);
        UndirectedGraph h = forward_constraint_graph(d, o);
        std::vector<int> ff_order(o.begin(), o.end());
        CHECK(greedy.color_count == oracles::first_fit_brute(h, ff_order));
        CHECK(greedy.color_count >= s_number_exact(d, o).color_count);
        CHECK(validate_sequence_coloring(d, greedy.sequence).valid);
    }
}

TEST_CASE("order scans") {
    CHECK(min_over_orders(directed_cycle(3), SeqMode::kExact).color_count == 2);
    CHECK(min_over_orders(directed_cycle(3), SeqMode::kGreedy).color_count == 2);

    Digraph fig2(3, {{1, 0}, {0, 2}, {1, 2}, {2, 1}});
    CHECK(min_over_orders(fig2, SeqMode::kExact).color_count == 2);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Digraph d = random_dag(6, 0.4, seed);
        CHECK(min_over_orders(d, SeqMode::kExact).color_count == 1);
    }

    CHECK(max_over_orders(UndirectedGraph(4, {}), SeqMode::kGreedy).color_count == 1);
    CHECK(max_over_orders(UndirectedGraph(4, {}), SeqMode::kExact).color_count == 1);
    CHECK(max_over_orders(directed_cycle(3), SeqMode::kGreedy).color_count == 2);
    CHECK(max_over_orders(fig4b_graph(), SeqMode::kGreedy).color_count == 4);

    CHECK_THROWS_AS(min_over_orders(random_digraph(10, 0.3, true, 1), SeqMode::kExact),
                    SizeLimitError);

    // ties break to the lexicographically smallest order
    OrderScan scan = min_over_orders(Digraph(3, {}), SeqMode::kExact);
    CHECK(scan.order == VertexOrder{0, 1, 2});
}

TEST_CASE("scan extremes agree in both modes at small sizes") {
    // exhaustive p <= 4 plus sampled p = 5: minimum over orders of either
    // mode equals the exact dichromatic number (ordering the classes of an
    // optimal partition makes first-fit attain it)
    for (int p = 1; p <= 4; ++p) {
        for (std::uint64_t mask = 0; mask < arc_mask_count(p); ++mask) {
            Digraph d = digraph_from_arc_mask(p, mask);
            OrderScanStats stats = scan_orders(d);
            int chi_d = chi_d_exact(d).chi_d;
            CHECK(stats.min_exact.color_count == chi_d);
            CHECK(stats.min_greedy.color_count == chi_d);
            CHECK(stats.min_exact.color_count <= stats.max_exact.color_count);
            CHECK(stats.min_greedy.color_count >= stats.min_exact.color_count);
        }
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Digraph d = random_digraph(5, 0.4, true, seed);
        OrderScanStats stats = scan_orders(d);
        int chi_d = chi_d_exact(d).chi_d;
        CHECK(stats.min_exact.color_count == chi_d);
        CHECK(stats.min_greedy.color_count == chi_d);
    }
}

TEST_CASE("symmetric digraphs constrain every order identically") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Digraph base = random_digraph(6, 0.4, true, seed);
        UndirectedGraph g = underlying_graph(base);
        Digraph sym = symmetric_digraph(g);
        int chi = chromatic_number_exact(g).color_count;
        std::mt19937_64 rng(seed);
        VertexOrder order(6);
        std::iota(order.begin(), order.end(), 0);
        for (int i = 5; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
        CHECK(forward_constraint_graph(sym, order) == g);
        CHECK(s_number_exact(sym, order).color_count == chi);
    }
}

TEST_CASE("validation accepts exactly the constraint-graph colorings") {
    // every canonical color tuple against every order of every digraph on 3
    // vertices
    std::vector<std::vector<int>> tuples;
    for (int c2 = 1; c2 <= 2; ++c2) {
        int hi2 = c2;
        for (int c3 = 1; c3 <= hi2 + 1; ++c3) {
            tuples.push_back({1, c2, c3});
        }
    }
    for (std::uint64_t mask = 0; mask < arc_mask_count(3); ++mask) {
        Digraph d = digraph_from_arc_mask(3, mask);
        VertexOrder order{0, 1, 2};
        do {
            UndirectedGraph h = forward_constraint_graph(d, order);
            for (const auto& tuple : tuples) {
                std::vector<std::pair<VertexId, int>> pairs;
                for (int i = 0; i < 3; ++i) pairs.emplace_back(order[i], tuple[i]);
                SequenceColoring s = SequenceColoring::from_pairs(pairs);
                bool proper = true;
                std::vector<int> by_vertex = s.colors_by_vertex();
                for (const Edge& e : h.edges()) {
                    proper = proper && by_vertex[e.first] != by_vertex[e.second];
                }
                CHECK(validate_sequence_coloring(d, s).valid == proper);
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("transitive tournament escalates greedy while staying acyclic") {
    auto [d1, o1] = transitive_tournament(1);
    CHECK(s_number_greedy(d1, o1).color_count == 1);

    auto [d3, o3] = transitive_tournament(3);
    CHECK(d3.arcs() == std::vector<Arc>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(s_number_greedy(d3, o3).color_count == 3);

    for (int n = 1; n <= 7; ++n) {
        auto [d, o] = transitive_tournament(n);
        CHECK(check_acyclic(d).acyclic);
        CHECK(s_number_greedy(d, o).color_count == n);
        CHECK(chi_d_exact(d).chi_d == 1);
    }
}
