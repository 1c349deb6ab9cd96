#include "dicolor/generate.hpp"

#include <random>

namespace dicolor {

namespace {

// Explicit mappings instead of std distributions keep the byte-level output
// of seeded commands identical across standard library implementations.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t n) {
    return rng() % n;
}

void check_probability(double probability) {
    if (!(probability >= 0.0 && probability <= 1.0)) {
        throw InputError("arc probability must lie in [0, 1]");
    }
}

}  // namespace

Digraph random_digraph(int vertex_count, double arc_probability, bool allow_digons,
                       std::uint64_t seed) {
    check_probability(arc_probability);
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < vertex_count; ++u) {
        for (int v = u + 1; v < vertex_count; ++v) {
            bool forward = next_unit(rng) < arc_probability;
            bool backward = next_unit(rng) < arc_probability;
            if (forward && backward && !allow_digons) {
                if (next_below(rng, 2) == 0) {
                    backward = false;
                } else {
                    forward = false;
                }
            }
            if (forward) arcs.emplace_back(u, v);
            if (backward) arcs.emplace_back(v, u);
        }
    }
    return Digraph(vertex_count, std::move(arcs));
}

Digraph random_dag(int vertex_count, double arc_probability, std::uint64_t seed) {
    check_probability(arc_probability);
    std::mt19937_64 rng(seed);
    std::vector<int> perm(vertex_count);
    for (int i = 0; i < vertex_count; ++i) perm[i] = i;
    for (int i = vertex_count - 1; i > 0; --i) {
        std::swap(perm[i], perm[next_below(rng, static_cast<std::uint64_t>(i) + 1)]);
    }
    std::vector<Arc> arcs;
    for (int i = 0; i < vertex_count; ++i) {
        for (int j = i + 1; j < vertex_count; ++j) {
            if (next_unit(rng) < arc_probability) arcs.emplace_back(perm[i], perm[j]);
        }
    }
    return Digraph(vertex_count, std::move(arcs));
}

Labeling random_labeling(int vertex_count, int label_count, std::uint64_t seed) {
    if (label_count < 1) throw InputError("label count must be positive");
    std::mt19937_64 rng(seed);
    Labeling labeling;
    labeling.labels.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        labeling.labels[v] = static_cast<int>(next_below(rng, label_count)) + 1;
    }
    return labeling;
}

std::uint64_t arc_mask_count(int vertex_count) {
    int pairs = vertex_count * (vertex_count - 1);
    if (pairs >= 64) throw InputError("arc-mask enumeration supports p*(p-1) < 64 only");
    return std::uint64_t{1} << pairs;
}

Digraph digraph_from_arc_mask(int vertex_count, std::uint64_t mask) {
    std::vector<Arc> arcs;
    int bit = 0;
    for (int u = 0; u < vertex_count; ++u) {
        for (int v = 0; v < vertex_count; ++v) {
            if (u == v) continue;
            if (mask & (std::uint64_t{1} << bit)) arcs.emplace_back(u, v);
            ++bit;
        }
    }
    return Digraph(vertex_count, std::move(arcs));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step over seed + index.
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace dicolor
