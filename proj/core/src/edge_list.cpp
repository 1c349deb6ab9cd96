#include "dicolor/edge_list.hpp"

#include <algorithm>
#include <sstream>

namespace dicolor {

namespace {

struct Line {
    int number = 0;
    std::string text;
};

[[noreturn]] void fail(const Line& line, const std::string& why) {
    throw InputError("line " + std::to_string(line.number) + ": " + why);
}

long parse_integer(const Line& line, const std::string& token, const std::string& what) {
    try {
        size_t consumed = 0;
        long value = std::stol(token, &consumed);
        if (consumed != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        fail(line, what + " '" + token + "' is not an integer");
    }
}

int parse_vertex(const Line& line, const std::string& token, int p) {
    long value = parse_integer(line, token, "vertex");
    if (value < 1 || value > p) {
        fail(line, "vertex " + token + " out of range 1.." + std::to_string(p));
    }
    return static_cast<int>(value - 1);
}

}  // namespace

LabeledDigraph parse_edge_list(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_number = 0;

    int p = -1;
    std::vector<Arc> arcs;
    std::vector<int> labels;
    std::vector<bool> labeled;

    while (std::getline(stream, raw)) {
        ++line_number;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream words(raw);
        std::string directive;
        if (!(words >> directive)) continue;
        Line line{line_number, raw};

        std::vector<std::string> args;
        for (std::string w; words >> w;) args.push_back(w);

        if (directive == "p") {
            if (p >= 0) fail(line, "duplicate 'p' line");
            if (args.size() != 1) fail(line, "'p' expects one argument");
            long n = parse_integer(line, args[0], "vertex count");
            if (n < 1) fail(line, "vertex count must be at least 1");
            p = static_cast<int>(n);
            labels.assign(p, 0);
            labeled.assign(p, false);
        } else if (directive == "a") {
            if (p < 0) fail(line, "'a' line before 'p' line");
            if (args.size() != 2) fail(line, "'a' expects two arguments");
            int u = parse_vertex(line, args[0], p);
            int v = parse_vertex(line, args[1], p);
            if (u == v) fail(line, "self-loop at " + vertex_name(u) + " is not allowed");
            arcs.emplace_back(u, v);
        } else if (directive == "l") {
            if (p < 0) fail(line, "'l' line before 'p' line");
            if (args.size() != 2) fail(line, "'l' expects two arguments");
            int v = parse_vertex(line, args[0], p);
            long label = parse_integer(line, args[1], "label");
            if (label < 0) fail(line, "label must be non-negative");
            if (labeled[v]) fail(line, "duplicate label line for " + vertex_name(v));
            labeled[v] = true;
            labels[v] = static_cast<int>(label);
        } else {
            fail(line, "unknown directive '" + directive + "'");
        }
    }
    if (p < 0) throw InputError("missing 'p' line");
    return LabeledDigraph{Digraph(p, std::move(arcs)), Labeling{std::move(labels)}};
}

std::string serialize_edge_list(const LabeledDigraph& ld) {
    std::string out = "p " + std::to_string(ld.digraph.vertex_count()) + "\n";
    for (const Arc& a : ld.digraph.arcs()) {
        out += "a " + std::to_string(a.first + 1) + " " + std::to_string(a.second + 1) + "\n";
    }
    bool any_label = std::any_of(ld.labeling.labels.begin(), ld.labeling.labels.end(),
                                 [](int l) { return l != 0; });
    if (any_label) {
        for (int v = 0; v < ld.digraph.vertex_count(); ++v) {
            out += "l " + std::to_string(v + 1) + " " + std::to_string(ld.labeling.labels[v]) +
                   "\n";
        }
    }
    return out;
}

std::string serialize_edge_list(const Digraph& d) {
    return serialize_edge_list(
        LabeledDigraph{d, Labeling{std::vector<int>(d.vertex_count(), 0)}});
}

namespace {

std::string dot_body(const Digraph& d, const std::vector<int>* labels) {
    std::string out = "digraph D {\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (labels) {
            out += "  " + vertex_name(v) + " [label=\"" + vertex_name(v) + " (" +
                   std::to_string((*labels)[v]) + ")\"];\n";
        } else if (d.in_degree(v) == 0 && d.out_degree(v) == 0) {
            out += "  " + vertex_name(v) + ";\n";
        }
    }
    for (const Arc& a : d.arcs()) {
        out += "  " + vertex_name(a.first) + " -> " + vertex_name(a.second) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace

std::string export_dot(const Digraph& d) { return dot_body(d, nullptr); }

std::string export_dot(const LabeledDigraph& ld) {
    return dot_body(ld.digraph, &ld.labeling.labels);
}

VertexId parse_vertex_token(const std::string& token, int vertex_count) {
    std::string digits = token;
    if (!digits.empty() && (digits[0] == 'v' || digits[0] == 'V')) digits.erase(0, 1);
    try {
        size_t consumed = 0;
        long value = std::stol(digits, &consumed);
        if (consumed != digits.size()) throw std::invalid_argument(digits);
        if (value < 1 || value > vertex_count) throw std::out_of_range(digits);
        return static_cast<int>(value - 1);
    } catch (const std::exception&) {
        throw InputError("vertex token '" + token + "' is not a name in v1..v" +
                         std::to_string(vertex_count));
    }
}

}  // namespace dicolor
