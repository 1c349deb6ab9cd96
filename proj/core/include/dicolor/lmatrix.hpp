#pragma once

#include <string>
#include <vector>

#include "dicolor/digraph.hpp"

namespace dicolor {

/// Square integer matrix over {2, 1, 0, -1} with zero diagonal, encoding a
/// vertex-labeled digraph: 2 = arc and equal labels, 1 = arc and unequal,
/// -1 = no arc and equal labels, 0 = otherwise.
class LMatrix {
public:
    LMatrix(int order, std::vector<int> row_major_entries);

    static LMatrix from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return p_; }
    int at(int i, int j) const { return entries_[i * p_ + j]; }

    bool operator==(const LMatrix& other) const {
        return p_ == other.p_ && entries_ == other.entries_;
    }

private:
    int p_ = 0;
    std::vector<int> entries_;
};

struct LabeledDigraph {
    Digraph digraph;
    Labeling labeling;

    bool operator==(const LabeledDigraph&) const = default;
};

LMatrix encode(const LabeledDigraph& ld);

/// Inverse of encode. Labels come back as canonical class indices: classes
/// ordered by smallest member, numbered from 1. Throws InputError when the
/// matrix fails validation or its same-label pattern is asymmetric (such a
/// matrix is the image of no labeled digraph).
LabeledDigraph decode(const LMatrix& m);

/// All vertices sharing v's label according to row v: {v} plus every w with
/// entry (v, w) in {2, -1}.
std::vector<VertexId> color_class_of(const LMatrix& m, VertexId v);

enum class TripleCondition { kSameLabelTransitivity, kLabelSeparation };

std::string condition_id(TripleCondition c);  // "i" / "ii"

struct TripleViolation {
    TripleCondition condition;
    int i = 0, j = 0, k = 0;  // 0-based indices

    bool operator==(const TripleViolation&) const = default;
};

struct LMatrixCheck {
    bool valid = false;
    std::vector<TripleViolation> violations;  // lexicographic by (i, j, k)
};

/// Checks, over ordered triples of pairwise-distinct indices:
///   (i)  entries (i,j) and (j,k) in {2,-1} force entry (i,k) in {2,-1};
///   (ii) entry (i,j) in {2,-1} and (j,k) in {0,1} force (i,k) in {0,1}.
LMatrixCheck validate(const LMatrix& m);

/// Literal acyclicity conditions on a color matrix: every off-diagonal
/// entry lies in {2,-1} and an entry 2 forces -1 at the mirrored position.
bool acyclic_color_matrix_literal(const LMatrix& m);

struct AcyclicMatrixCheck {
    bool literal = false;
    bool semantic = false;
    bool discrepancy = false;
};

/// Semantic check: decodes and requires an acyclic digraph carrying a single
/// label class. The discrepancy flag records when the literal conditions
/// disagree (they accept the one-label directed cycle).
AcyclicMatrixCheck acyclic_color_matrix_check(const LMatrix& m);

/// Strict CSV: one row per line, comma-separated integers, no header.
LMatrix parse_matrix_csv(const std::string& text);
std::string matrix_to_csv(const LMatrix& m);
std::string matrix_pretty(const LMatrix& m);

}  // namespace dicolor
