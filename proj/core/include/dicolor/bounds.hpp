#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dicolor/dichromatic.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/limits.hpp"
#include "dicolor/seq_coloring.hpp"

namespace dicolor {

/// chi of the underlying graph; always an upper bound for chi_d.
int bound_underlying(const Digraph& d, int limit = limits::kChromaticExact);

/// p minus the maximum in-degree. Only valid without symmetric arcs; a digon
/// instance is refused, because the bound can then undercut chi_d.
int bound_indegree(const Digraph& d);

struct IndependentSumBound {
    int value = 0;
    std::vector<VertexId> witness;  // minimizing independent set
};

/// Minimum over independent sets S of p - sum of in-degrees over S + |S|.
/// Exact branch enumeration; requires no symmetric arcs.
IndependentSumBound bound_independent_sum(const Digraph& d,
                                          int limit = limits::kDichromaticExact);

struct BoundsReport {
    int p = 0;
    std::optional<int> chi_d;
    int chi_underlying = 0;
    std::optional<int> bound_indegree;   // absent when symmetric arcs exist
    int indegree_value_if_applied = 0;   // p - max in-degree, shown even when refused
    std::optional<int> bound_independent_sum;
    int beta_oc = 0;
    int lower_ratio = 0;  // ceil(p / beta_oc)
    int upper_beta = 0;   // p - beta_oc + 1
    bool sandwich_holds = false;
};

/// Computes every bound and checks ceil(p/beta_oc) <= chi_d <= p-beta_oc+1.
BoundsReport sandwich_check(const Digraph& d, int limit = limits::kDichromaticExact);

struct OddSymmetricCycleCheck {
    bool found = false;
    std::vector<VertexId> cycle;  // an odd cycle of digons when found
};

/// Builds the graph on digons (symmetric pairs) and reports whether it
/// contains an odd cycle.
OddSymmetricCycleCheck has_odd_symmetric_cycle(const Digraph& d);

/// True iff the vertex set splits into at most two classes inducing acyclic
/// subdigraphs, i.e. chi_d <= 2.
bool is_c_bipartite(const Digraph& d, int limit = limits::kDichromaticExact);

struct TwoColorScanRow {
    std::string instance;
    bool c_bipartite = false;
    bool no_odd_symmetric_cycle = false;
};

struct TwoColorScanReport {
    int total = 0;
    int disagreements = 0;
    std::vector<TwoColorScanRow> disagreement_rows;
};

/// Compares "chi_d <= 2" with "no odd cycle of digons" over every digraph
/// on p vertices. The implication odd-cycle-of-digons => chi_d >= 3 may
/// never fail; the converse can and the rows record where.
TwoColorScanReport scan_two_color_criteria(int p);
TwoColorScanReport scan_two_color_criteria_random(int p, int count, std::uint64_t seed,
                                                  double arc_probability, bool allow_digons);

bool is_complete_partition(const UndirectedGraph& g,
                           const std::vector<std::vector<VertexId>>& classes);
bool is_complete_partition(const Digraph& d,
                           const std::vector<std::vector<VertexId>>& classes);

struct PartitionResult {
    int order = 0;
    std::vector<std::vector<VertexId>> classes;
};

/// Maximum complete partition into independent sets.
PartitionResult achromatic_number(const UndirectedGraph& g,
                                  int limit = limits::kPartitionScan);

/// Maximum complete partition into classes inducing acyclic subdigraphs.
PartitionResult psi_sd(const Digraph& d, int limit = limits::kPartitionScan);

/// Maximum first-fit color count over all vertex orders of the graph.
OrderScan grundy_number(const UndirectedGraph& g, int limit = limits::kOrderScan);

struct InterpolationRow {
    int order = 0;
    std::vector<std::vector<VertexId>> classes;
};

struct InterpolationCheck {
    bool holds = false;
    int chi = 0;
    int psi = 0;
    std::vector<InterpolationRow> rows;  // one witness per order in [chi, psi]
};

/// Verifies a complete partition into independent sets exists for every
/// order between chi and psi.
InterpolationCheck interpolation_check(const UndirectedGraph& g,
                                       int limit = limits::kChainScan);

struct ChainLink {
    std::string name;
    int lhs = 0;
    int rhs = 0;
    bool holds = false;
};

struct ChainQuantities {
    int p = 0;
    int chi_d = 0;
    int chi_sd_min_exact = 0;
    int chi_sd_max_exact = 0;  // the sequence reading of psi_sd
    int chi_sd_min_greedy = 0;
    int chi_sd_max_greedy = 0;
    int chi_underlying = 0;
    int grundy_underlying = 0;
    int psi_underlying = 0;
    int psi_sd_partition = 0;
};

struct ChainReport {
    ChainQuantities quantities;
    std::vector<ChainLink> links;
};

/// Evaluates the chain of coloring numbers per instance. Inequalities are
/// reported with hold/fail flags rather than asserted: the final link
/// "psi(G) <= max-over-orders of the digraph" fails on some instances,
/// while its reverse holds throughout. The partition-based psi_sd is
/// reported alongside; it dominates psi(G) instead of being bounded by it.
ChainReport chain_check(const Digraph& d, int limit = limits::kChainScan);

struct ChiPsiCheck {
    bool equal = false;
    int chi = 0;
    int psi = 0;
};

/// True iff chi(G) = psi(G): every complete partition size collapses to one
/// point, so every order's minimum coloring is optimal.
ChiPsiCheck chi_equals_psi_check(const UndirectedGraph& g, int limit = limits::kChainScan);

}  // namespace dicolor
