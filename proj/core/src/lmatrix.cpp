#include "dicolor/lmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dicolor {

namespace {

bool same_label_entry(int a) { return a == 2 || a == -1; }
bool arc_entry(int a) { return a == 2 || a == 1; }

}  // namespace

LMatrix::LMatrix(int order, std::vector<int> row_major_entries) : p_(order) {
    if (p_ < 1) throw InputError("matrix order must be at least 1");
    if (static_cast<int>(row_major_entries.size()) != p_ * p_) {
        throw InputError("matrix of order " + std::to_string(p_) + " needs " +
                         std::to_string(p_ * p_) + " entries, got " +
                         std::to_string(row_major_entries.size()));
    }
    for (int i = 0; i < p_; ++i) {
        for (int j = 0; j < p_; ++j) {
            int a = row_major_entries[i * p_ + j];
            if (i == j && a != 0) {
                throw InputError("diagonal entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") must be 0, got " + std::to_string(a));
            }
            if (a < -1 || a > 2) {
                throw InputError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") must lie in {2,1,0,-1}, got " + std::to_string(a));
            }
        }
    }
    entries_ = std::move(row_major_entries);
}

LMatrix LMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const int p = static_cast<int>(rows.size());
    std::vector<int> entries;
    entries.reserve(p * p);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != p) {
            throw InputError("matrix rows must all have length " + std::to_string(p));
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return LMatrix(p, std::move(entries));
}

LMatrix encode(const LabeledDigraph& ld) {
    const int p = ld.digraph.vertex_count();
    if (static_cast<int>(ld.labeling.labels.size()) != p) {
        throw InputError("labeling must cover all " + std::to_string(p) + " vertices");
    }
    std::vector<int> entries(p * p, 0);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            bool arc = ld.digraph.has_arc(i, j);
            bool same = ld.labeling.labels[i] == ld.labeling.labels[j];
            int a = 0;
            if (arc && same) a = 2;
            else if (arc) a = 1;
            else if (same) a = -1;
            entries[i * p + j] = a;
        }
    }
    return LMatrix(p, std::move(entries));
}

std::string condition_id(TripleCondition c) {
    return c == TripleCondition::kSameLabelTransitivity ? "i" : "ii";
}

LMatrixCheck validate(const LMatrix& m) {
    const int p = m.order();
    LMatrixCheck check;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (j == i) continue;
            if (!same_label_entry(m.at(i, j))) continue;
            for (int k = 0; k < p; ++k) {
                if (k == i || k == j) continue;
                int a_jk = m.at(j, k);
                int a_ik = m.at(i, k);
                if (same_label_entry(a_jk) && !same_label_entry(a_ik)) {
                    check.violations.push_back(
                        TripleViolation{TripleCondition::kSameLabelTransitivity, i, j, k});
                }
                if (!same_label_entry(a_jk) && same_label_entry(a_ik)) {
                    check.violations.push_back(
                        TripleViolation{TripleCondition::kLabelSeparation, i, j, k});
                }
            }
        }
    }
    std::sort(check.violations.begin(), check.violations.end(),
              [](const TripleViolation& a, const TripleViolation& b) {
                  return std::tie(a.i, a.j, a.k, a.condition) <
                         std::tie(b.i, b.j, b.k, b.condition);
              });
    check.valid = check.violations.empty();
    return check;
}

LabeledDigraph decode(const LMatrix& m) {
    LMatrixCheck check = validate(m);
    if (!check.valid) {
        const TripleViolation& v = check.violations.front();
        throw InputError("matrix is not a labeled-digraph encoding: condition (" +
                         condition_id(v.condition) + ") fails at indices (" +
                         std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                         std::to_string(v.k + 1) + ")");
    }
    const int p = m.order();
    // The closure conditions do not force the same-label pattern to be
    // symmetric, yet no labeled digraph encodes an asymmetric one. Reject.
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (same_label_entry(m.at(i, j)) != same_label_entry(m.at(j, i))) {
                throw InputError(
                    "matrix is not a labeled-digraph encoding: same-label pattern is "
                    "asymmetric between " +
                    vertex_name(i) + " and " + vertex_name(j));
            }
        }
    }

    std::vector<int> labels(p, 0);
    int next_label = 0;
    for (int i = 0; i < p; ++i) {
        if (labels[i] != 0) continue;
        ++next_label;
        labels[i] = next_label;
        for (int j = i + 1; j < p; ++j) {
            if (same_label_entry(m.at(i, j))) labels[j] = next_label;
        }
    }

    std::vector<Arc> arcs;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (i != j && arc_entry(m.at(i, j))) arcs.emplace_back(i, j);
        }
    }
    return LabeledDigraph{Digraph(p, std::move(arcs)), Labeling{std::move(labels)}};
}

std::vector<VertexId> color_class_of(const LMatrix& m, VertexId v) {
    LMatrixCheck check = validate(m);
    if (!check.valid) {
        throw InputError("matrix is not a labeled-digraph encoding");
    }
    const int p = m.order();
    if (v < 0 || v >= p) {
        throw InputError("vertex index " + std::to_string(v) + " out of range for order " +
                         std::to_string(p));
    }
    std::vector<VertexId> cls{v};
    for (int j = 0; j < p; ++j) {
        if (j != v && same_label_entry(m.at(v, j))) cls.push_back(j);
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

bool acyclic_color_matrix_literal(const LMatrix& m) {
    const int p = m.order();
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            int a = m.at(i, j);
            if (!same_label_entry(a)) return false;
            if (a == 2 && m.at(j, i) != -1) return false;
        }
    }
    return true;
}

AcyclicMatrixCheck acyclic_color_matrix_check(const LMatrix& m) {
    AcyclicMatrixCheck result;
    result.literal = acyclic_color_matrix_literal(m);
    LabeledDigraph ld = decode(m);
    bool one_class = true;
    for (int label : ld.labeling.labels) {
        if (label != ld.labeling.labels.front()) {
            one_class = false;
            break;
        }
    }
    result.semantic = one_class && check_acyclic(ld.digraph).acyclic;
    result.discrepancy = result.literal != result.semantic;
    return result;
}

LMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        if (line.empty()) continue;
        std::vector<int> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                size_t consumed = 0;
                int value = std::stoi(cell, &consumed);
                while (consumed < cell.size() && std::isspace(static_cast<unsigned char>(cell[consumed]))) {
                    ++consumed;
                }
                if (consumed != cell.size()) throw std::invalid_argument(cell);
                row.push_back(value);
            } catch (const std::exception&) {
                throw InputError("line " + std::to_string(line_number) +
                                 ": cell '" + cell + "' is not an integer");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("matrix file is empty");
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw InputError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " cells, expected " +
                             std::to_string(rows.size()));
        }
    }
    return LMatrix::from_rows(rows);
}

std::string matrix_to_csv(const LMatrix& m) {
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string matrix_pretty(const LMatrix& m) {
    size_t width = 1;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            width = std::max(width, std::to_string(m.at(i, j)).size());
        }
    }
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            std::string cell = std::to_string(m.at(i, j));
            if (j > 0) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace dicolor
