#pragma once

#include <string>
#include <vector>

#include "dicolor/digraph.hpp"
#include "dicolor/lmatrix.hpp"
#include "dicolor/seq_coloring.hpp"
#include "json.hpp"

namespace dicolor {

// Bundled instances behind the `figures` command. Each builder returns the
// fixture the corresponding report entry recomputes.

Digraph fig1a_cycle();
SequenceColoring fig1a_sequence();

/// As drawn: two arcs into v2. The printed sequence is only valid after the
/// second arc is flipped; both variants are exposed.
Digraph fig1b_drawn();
Digraph fig1b_resolved();
SequenceColoring fig1b_sequence();

Digraph fig1c_semicycle();
SequenceColoring fig1c_sequence();

Digraph fig2_digraph();
SequenceColoring fig2_sequence();

Digraph fig3_cycle();
SequenceColoring fig3_sequence();

UndirectedGraph fig4a_tree();
VertexOrder fig4a_order();

UndirectedGraph fig4b_graph();
VertexOrder fig4b_order();

VertexOrder fig5a_order();
VertexOrder fig5b_order();

Digraph fig7_digraph();
VertexOrder fig7_order();
std::vector<std::vector<VertexId>> fig7_partition();

LabeledDigraph fig8_labeled();
LMatrix fig8_matrix();

struct FigureEntry {
    std::string id;
    nlohmann::json quantities;
    bool matched = false;
    std::string explained;  // nonempty only for the documented divergences
};

struct FiguresReport {
    std::vector<FigureEntry> entries;
    int unexplained_mismatches = 0;
};

/// Recomputes every bundled figure instance and compares each printed
/// quantity. The two divergences that cannot match as printed carry an
/// explanation instead of counting as failures.
FiguresReport run_figures_suite();

nlohmann::json figures_report_json(const FiguresReport& report);

}  // namespace dicolor
