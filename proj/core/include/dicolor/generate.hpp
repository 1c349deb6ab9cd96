#pragma once

#include <cstdint>
#include <functional>

#include "dicolor/digraph.hpp"

namespace dicolor {

/// Seeded random digraph: every ordered pair is included independently with
/// `arc_probability`. With allow_digons=false, at most one orientation per
/// pair survives (uniform choice). The same seed always yields the same
/// digraph.
Digraph random_digraph(int vertex_count, double arc_probability, bool allow_digons,
                       std::uint64_t seed);

/// Seeded random DAG: a random permutation fixes a topological order and
/// each forward pair is included independently with `arc_probability`.
Digraph random_dag(int vertex_count, double arc_probability, std::uint64_t seed);

Labeling random_labeling(int vertex_count, int label_count, std::uint64_t seed);

/// Digraph on p vertices selected by `mask` over the p*(p-1) ordered pairs,
/// pairs enumerated as (0,1),(0,2),...,(1,0),(1,2),...  Masks 0..2^(p(p-1))-1
/// enumerate every digraph on p vertices exactly once.
Digraph digraph_from_arc_mask(int vertex_count, std::uint64_t mask);

std::uint64_t arc_mask_count(int vertex_count);

/// Stateless seed mixer for deriving per-instance seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace dicolor
