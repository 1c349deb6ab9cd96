// Command-line surface of the digraph coloring toolkit. One command per
// process; every machine-readable output is canonical JSON.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dicolor/bounds.hpp"
#include "dicolor/dichromatic.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/edge_list.hpp"
#include "dicolor/figures.hpp"
#include "dicolor/generate.hpp"
#include "dicolor/lmatrix.hpp"
#include "dicolor/report.hpp"
#include "dicolor/seq_coloring.hpp"

namespace {

using namespace dicolor;
using nlohmann::json;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeLimit = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
}

json names_json(const std::vector<VertexId>& vertices) {
    json out = json::array();
    for (int v : vertices) out.push_back(vertex_name(v));
    return out;
}

json partition_json(const std::vector<std::vector<VertexId>>& classes) {
    json out = json::array();
    for (const auto& cls : classes) out.push_back(names_json(cls));
    return out;
}

json sequence_json(const SequenceColoring& s) {
    json out = json::array();
    for (const auto& [v, c] : s.pairs()) out.push_back({vertex_name(v), c});
    return out;
}

// Shared per-command state: input/output paths plus the printed report.
struct Emitter {
    explicit Emitter(std::string command_name) : command(std::move(command_name)) {}

    std::string command;
    std::string input_digest = content_digest("");
    json parameters = json::object();
    std::string json_path;

    int emit(const json& results, int exit_code = 0) const {
        std::cout << canonical_json(results);
        if (!json_path.empty()) {
            RunReport report{command, input_digest, parameters, results};
            write_file(json_path, canonical_json(run_report_json(report)));
        }
        return exit_code;
    }

    // For commands whose stdout is a text format rather than JSON.
    int emit_text(const std::string& text, const json& results, int exit_code = 0) const {
        std::cout << text;
        if (!json_path.empty()) {
            RunReport report{command, input_digest, parameters, results};
            write_file(json_path, canonical_json(run_report_json(report)));
        }
        return exit_code;
    }
};

LabeledDigraph load_input(const std::string& path, Emitter& emitter) {
    std::string text = read_file(path);
    emitter.input_digest = content_digest(text);
    return parse_edge_list(text);
}

LMatrix load_matrix(const std::string& path, Emitter& emitter) {
    std::string text = read_file(path);
    emitter.input_digest = content_digest(text);
    return parse_matrix_csv(text);
}

// Coloring file: `c <vertex> <color>` per vertex, `#` comments.
Coloring parse_colors_file(const std::string& text, int vertex_count) {
    std::istringstream stream(text);
    std::string raw;
    int line_number = 0;
    std::vector<int> colors(vertex_count, 0);
    std::vector<bool> seen(vertex_count, false);
    while (std::getline(stream, raw)) {
        ++line_number;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream words(raw);
        std::string directive;
        if (!(words >> directive)) continue;
        std::string vertex_token, color_token;
        if (directive != "c" || !(words >> vertex_token >> color_token)) {
            throw InputError("line " + std::to_string(line_number) +
                             ": expected 'c <vertex> <color>'");
        }
        int v = parse_vertex_token(vertex_token, vertex_count);
        if (seen[v]) {
            throw InputError("line " + std::to_string(line_number) + ": duplicate color for " +
                             vertex_name(v));
        }
        seen[v] = true;
        try {
            colors[v] = std::stoi(color_token);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(line_number) + ": color '" + color_token +
                             "' is not an integer");
        }
    }
    for (int v = 0; v < vertex_count; ++v) {
        if (!seen[v]) throw InputError("colors file misses " + vertex_name(v));
    }
    return Coloring::from_colors(std::move(colors));
}

VertexOrder parse_order_option(const std::string& tokens, int vertex_count) {
    VertexOrder order;
    std::istringstream stream(tokens);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) order.push_back(parse_vertex_token(token, vertex_count));
    }
    if (static_cast<int>(order.size()) != vertex_count) {
        throw InputError("order must list all " + std::to_string(vertex_count) + " vertices");
    }
    return order;
}

void maybe_write_dot(const std::string& dot_path, const LabeledDigraph& ld) {
    if (dot_path.empty()) return;
    bool any_label = false;
    for (int l : ld.labeling.labels) any_label = any_label || l != 0;
    write_file(dot_path, any_label ? export_dot(ld) : export_dot(ld.digraph));
}

// ---------------------------------------------------------------- chid --

struct ChidOptions {
    std::string input, json_path, dot_path;
    int limit = limits::kDichromaticExact;
    bool oracle = false;
    bool check_iff_claim = false;
    int scan_p = 0;
};

json iff_claim_json(const Digraph& d, int limit) {
    // vacuously true on arcless digraphs
    bool all_symmetric = static_cast<int>(symmetric_arcs(d).size()) * 2 == d.arc_count();
    int chi_d = chi_d_exact(d, limit).chi_d;
    int chi_g = bound_underlying(d);
    return json{{"all_arcs_symmetric", all_symmetric},
                {"chi_d", chi_d},
                {"chi_underlying", chi_g},
                {"equal", chi_d == chi_g},
                {"forward_direction_ok", !all_symmetric || chi_d == chi_g},
                {"converse_ok_here", chi_d != chi_g || all_symmetric}};
}

int run_chid(const ChidOptions& opt) {
    Emitter emitter{"chid"};
    emitter.json_path = opt.json_path;
    emitter.parameters = {{"limit", opt.limit},
                          {"oracle", opt.oracle},
                          {"check_iff_claim", opt.check_iff_claim},
                          {"scan_p", opt.scan_p}};

    if (opt.check_iff_claim && opt.scan_p > 0) {
        // Counterexample search over every digraph on scan_p vertices: the
        // claim's converse says chi_d = chi(G) only when all arcs are
        // symmetric.
        if (opt.scan_p > 4) throw SizeLimitError("iff-claim scan supports p <= 4", 4);
        int total = 0, counterexamples = 0;
        json examples = json::array();
        for (std::uint64_t mask = 0; mask < arc_mask_count(opt.scan_p); ++mask) {
            Digraph d = digraph_from_arc_mask(opt.scan_p, mask);
            ++total;
            json row = iff_claim_json(d, opt.limit);
            if (row["equal"].get<bool>() && !row["all_arcs_symmetric"].get<bool>()) {
                ++counterexamples;
                if (examples.size() < 5) {
                    json arcs = json::array();
                    for (const Arc& a : d.arcs()) {
                        arcs.push_back({vertex_name(a.first), vertex_name(a.second)});
                    }
                    row["arcs"] = arcs;
                    examples.push_back(row);
                }
            }
        }
        return emitter.emit(json{{"scan_p", opt.scan_p},
                                 {"total", total},
                                 {"converse_counterexamples", counterexamples},
                                 {"first_examples", examples}});
    }

    if (opt.input.empty()) throw InputError("chid requires --input (or --scan-p with --check-iff-claim)");
    LabeledDigraph ld = load_input(opt.input, emitter);
    maybe_write_dot(opt.dot_path, ld);
    ChiD result = chi_d_exact(ld.digraph, opt.limit);
    json results{{"chi_d", result.chi_d},
                 {"partition", partition_json(result.partition.classes)},
                 {"oracle_checked", opt.oracle}};
    if (opt.oracle) {
        int oracle_value = chi_d_ordering_oracle(ld.digraph);
        results["oracle_value"] = oracle_value;
        results["oracle_agrees"] = oracle_value == result.chi_d;
    }
    if (opt.check_iff_claim) results["iff_claim"] = iff_claim_json(ld.digraph, opt.limit);
    return emitter.emit(results);
}

// ------------------------------------------------------------ validate --

int run_validate(const std::string& input, const std::string& colors_path,
                 const std::string& json_path) {
    Emitter emitter{"validate"};
    emitter.json_path = json_path;
    LabeledDigraph ld = load_input(input, emitter);
    std::string colors_text = read_file(colors_path);
    emitter.input_digest = content_digest(read_file(input) + colors_text);
    Coloring coloring = parse_colors_file(colors_text, ld.digraph.vertex_count());
    ColoringCheck check = is_valid_coloring(ld.digraph, coloring);
    json results{{"valid", check.valid}};
    if (check.valid) {
        results["realizing_order"] = names_json(check.realizing_order);
    } else {
        results["monochromatic_cycle"] = names_json(check.monochromatic_cycle);
    }
    return emitter.emit(results, check.valid ? 0 : kExitVerdictFalse);
}

// -------------------------------------------------------------- scolor --

int run_scolor(const std::string& input, const std::string& order_tokens, const std::string& mode,
               int limit, const std::string& json_path, const std::string& dot_path) {
    Emitter emitter{"scolor"};
    emitter.json_path = json_path;
    emitter.parameters = {{"mode", mode}, {"order", order_tokens}, {"limit", limit}};
    LabeledDigraph ld = load_input(input, emitter);
    maybe_write_dot(dot_path, ld);
    VertexOrder order = parse_order_option(order_tokens, ld.digraph.vertex_count());
    SeqResult result = mode == "exact" ? s_number_exact(ld.digraph, order, limit)
                                       : s_number_greedy(ld.digraph, order);
    return emitter.emit(json{{"mode", mode},
                             {"colors", result.color_count},
                             {"sequence", sequence_json(result.sequence)}});
}

// -------------------------------------------------------------- bounds --

json bounds_json(const BoundsReport& report) {
    json out{{"p", report.p},
             {"chi_underlying", report.chi_underlying},
             {"beta_oc", report.beta_oc},
             {"lower_ratio", report.lower_ratio},
             {"upper_beta", report.upper_beta},
             {"sandwich_holds", report.sandwich_holds}};
    if (report.chi_d) out["chi_d"] = *report.chi_d;
    if (report.bound_indegree) {
        out["bound_indegree"] = *report.bound_indegree;
    } else {
        out["bound_indegree_refused"] =
            json{{"reason", "symmetric arcs present"},
                 {"p_minus_delta_in", report.indegree_value_if_applied}};
    }
    if (report.bound_independent_sum) out["bound_independent_sum"] = *report.bound_independent_sum;
    return out;
}

int run_bounds(const std::string& input, int limit, const std::string& json_path,
               const std::string& dot_path) {
    Emitter emitter{"bounds"};
    emitter.json_path = json_path;
    emitter.parameters = {{"limit", limit}};
    LabeledDigraph ld = load_input(input, emitter);
    maybe_write_dot(dot_path, ld);
    return emitter.emit(bounds_json(sandwich_check(ld.digraph, limit)));
}

// ---------------------------------------------------------- partitions --

json chain_json(const ChainReport& report) {
    json links = json::array();
    for (const ChainLink& link : report.links) {
        links.push_back(
            json{{"name", link.name}, {"lhs", link.lhs}, {"rhs", link.rhs}, {"holds", link.holds}});
    }
    const ChainQuantities& q = report.quantities;
    return json{{"quantities",
                 json{{"p", q.p},
                      {"chi_d", q.chi_d},
                      {"chi_sd_min_exact", q.chi_sd_min_exact},
                      {"chi_sd_max_exact", q.chi_sd_max_exact},
                      {"chi_sd_min_greedy", q.chi_sd_min_greedy},
                      {"chi_sd_max_greedy", q.chi_sd_max_greedy},
                      {"chi_underlying", q.chi_underlying},
                      {"grundy_underlying", q.grundy_underlying},
                      {"psi_underlying", q.psi_underlying},
                      {"psi_sd_partition", q.psi_sd_partition}}},
                {"links", links}};
}

int run_partitions(const std::string& input, const std::string& what, std::optional<int> limit,
                   const std::string& json_path) {
    Emitter emitter{"partitions"};
    emitter.json_path = json_path;
    emitter.parameters = {{"what", what}};
    LabeledDigraph ld = load_input(input, emitter);
    const Digraph& d = ld.digraph;
    UndirectedGraph g = underlying_graph(d);

    json results;
    if (what == "psi") {
        PartitionResult r = achromatic_number(g, limit.value_or(limits::kPartitionScan));
        results = json{{"psi", r.order}, {"partition", partition_json(r.classes)}};
    } else if (what == "psisd") {
        PartitionResult r = psi_sd(d, limit.value_or(limits::kPartitionScan));
        results = json{{"psi_sd", r.order}, {"partition", partition_json(r.classes)}};
    } else if (what == "grundy") {
        OrderScan r = grundy_number(g, limit.value_or(limits::kOrderScan));
        results = json{{"grundy", r.color_count}, {"order", names_json(r.order)}};
    } else if (what == "interpolate") {
        InterpolationCheck r = interpolation_check(g, limit.value_or(limits::kChainScan));
        json rows = json::array();
        for (const InterpolationRow& row : r.rows) {
            rows.push_back(json{{"a", row.order}, {"partition", partition_json(row.classes)}});
        }
        results = json{{"holds", r.holds}, {"chi", r.chi}, {"psi", r.psi}, {"rows", rows}};
    } else if (what == "chain") {
        results = chain_json(chain_check(d, limit.value_or(limits::kChainScan)));
    } else {
        throw InputError("unknown --what '" + what +
                         "'; expected psi|psisd|grundy|interpolate|chain");
    }
    return emitter.emit(results);
}

// -------------------------------------------------------------- lmatrix --

int run_lmatrix_encode(const std::string& input, bool pretty, const std::string& json_path) {
    Emitter emitter{"lmatrix encode"};
    emitter.json_path = json_path;
    emitter.parameters = {{"pretty", pretty}};
    LabeledDigraph ld = load_input(input, emitter);
    LMatrix m = encode(ld);
    std::string text = pretty ? matrix_pretty(m) : matrix_to_csv(m);
    return emitter.emit_text(text, json{{"csv", matrix_to_csv(m)}});
}

int run_lmatrix_decode(const std::string& matrix_path, const std::string& json_path) {
    Emitter emitter{"lmatrix decode"};
    emitter.json_path = json_path;
    LMatrix m = load_matrix(matrix_path, emitter);
    LabeledDigraph ld = decode(m);
    std::string text = serialize_edge_list(ld);
    return emitter.emit_text(text, json{{"edge_list", text}});
}

int run_lmatrix_validate(const std::string& matrix_path, const std::string& json_path) {
    Emitter emitter{"lmatrix validate"};
    emitter.json_path = json_path;
    LMatrix m = load_matrix(matrix_path, emitter);
    LMatrixCheck check = validate(m);
    json violations = json::array();
    for (const TripleViolation& v : check.violations) {
        violations.push_back(json{{"condition", condition_id(v.condition)},
                                  {"i", v.i + 1},
                                  {"j", v.j + 1},
                                  {"k", v.k + 1}});
    }
    return emitter.emit(json{{"valid", check.valid}, {"violations", violations}},
                        check.valid ? 0 : kExitVerdictFalse);
}

int run_lmatrix_acyclic(const std::string& matrix_path, const std::string& json_path) {
    Emitter emitter{"lmatrix acyclic-check"};
    emitter.json_path = json_path;
    LMatrix m = load_matrix(matrix_path, emitter);
    AcyclicMatrixCheck check = acyclic_color_matrix_check(m);
    return emitter.emit(json{{"literal", check.literal},
                             {"semantic", check.semantic},
                             {"discrepancy", check.discrepancy}});
}

// ------------------------------------------------------------- ensemble --

struct EnsembleOptions {
    int p = 0;
    int count = 0;
    std::uint64_t seed = 0;
    std::string check;
    double prob = 0.3;
    bool digons = false;
    std::string json_path;
};

int run_ensemble(const EnsembleOptions& opt) {
    Emitter emitter{"ensemble"};
    emitter.json_path = opt.json_path;
    emitter.parameters = {{"p", opt.p},         {"count", opt.count}, {"seed", opt.seed},
                          {"check", opt.check}, {"prob", opt.prob},   {"digons", opt.digons}};

    json rows = json::array();
    json summary = json::object();
    if (opt.check == "sandwich") {
        int violations = 0;
        for (int i = 0; i < opt.count; ++i) {
            Digraph d = random_digraph(opt.p, opt.prob, opt.digons, mix_seed(opt.seed, i));
            BoundsReport report = sandwich_check(d);
            if (!report.sandwich_holds) ++violations;
            rows.push_back(json{{"instance", i},
                                {"chi_d", *report.chi_d},
                                {"beta_oc", report.beta_oc},
                                {"lower_ratio", report.lower_ratio},
                                {"upper_beta", report.upper_beta},
                                {"holds", report.sandwich_holds}});
        }
        summary = json{{"violations", violations}};
    } else if (opt.check == "prop8") {
        int disagreements = 0;
        for (int i = 0; i < opt.count; ++i) {
            Digraph d = random_digraph(opt.p, opt.prob, opt.digons, mix_seed(opt.seed, i));
            bool cbip = is_c_bipartite(d);
            bool no_odd = !has_odd_symmetric_cycle(d).found;
            if (cbip != no_odd) ++disagreements;
            rows.push_back(json{{"instance", i},
                                {"c_bipartite", cbip},
                                {"no_odd_symmetric_cycle", no_odd},
                                {"agree", cbip == no_odd}});
        }
        summary = json{{"disagreements", disagreements}};
    } else if (opt.check == "chain") {
        std::map<std::string, int> failures;
        for (int i = 0; i < opt.count; ++i) {
            Digraph d = random_digraph(opt.p, opt.prob, opt.digons, mix_seed(opt.seed, i));
            ChainReport report = chain_check(d);
            json links = json::object();
            for (const ChainLink& link : report.links) {
                links[link.name] = link.holds;
                if (!link.holds) ++failures[link.name];
            }
            rows.push_back(json{{"instance", i}, {"links", links}});
        }
        json failure_counts = json::object();
        for (const auto& [name, count] : failures) failure_counts[name] = count;
        summary = json{{"link_failures", failure_counts}};
    } else {
        throw InputError("unknown --check '" + opt.check + "'; expected sandwich|prop8|chain");
    }
    return emitter.emit(json{{"check", opt.check},
                             {"count", opt.count},
                             {"p", opt.p},
                             {"seed", opt.seed},
                             {"rows", rows},
                             {"summary", summary}});
}

// -------------------------------------------------------------- figures --

int run_figures(const std::string& json_path) {
    Emitter emitter{"figures"};
    emitter.json_path = json_path;
    FiguresReport report = run_figures_suite();
    return emitter.emit(figures_report_json(report),
                        report.unexplained_mismatches == 0 ? 0 : kExitVerdictFalse);
}

// ------------------------------------------------------------------ gen --

struct GenOptions {
    int p = 0;
    double prob = 0.3;
    std::uint64_t seed = 0;
    bool digons = false;
    bool dag = false;
    std::string json_path, dot_path;
};

int run_gen(const GenOptions& opt) {
    Emitter emitter{"gen"};
    emitter.json_path = opt.json_path;
    emitter.parameters = {{"p", opt.p},
                          {"prob", opt.prob},
                          {"seed", opt.seed},
                          {"digons", opt.digons},
                          {"dag", opt.dag}};
    Digraph d = opt.dag ? random_dag(opt.p, opt.prob, opt.seed)
                        : random_digraph(opt.p, opt.prob, opt.digons, opt.seed);
    std::string text = serialize_edge_list(d);
    emitter.input_digest = content_digest(text);
    if (!opt.dot_path.empty()) write_file(opt.dot_path, export_dot(d));
    return emitter.emit_text(text, json{{"edge_list", text}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph coloring toolkit"};
    app.require_subcommand(1);

    ChidOptions chid;
    CLI::App* chid_cmd = app.add_subcommand("chid", "exact dichromatic number");
    chid_cmd->add_option("--input", chid.input, "edge-list file");
    chid_cmd->add_option("--json", chid.json_path, "write the full run report here");
    chid_cmd->add_option("--dot", chid.dot_path, "export the input digraph as DOT");
    chid_cmd->add_option("--limit", chid.limit, "exact-search size gate");
    chid_cmd->add_flag("--oracle", chid.oracle, "cross-check against the order-scan value");
    chid_cmd->add_flag("--check-iff-claim", chid.check_iff_claim,
                       "report whether chi_d = chi(G) forces all arcs symmetric");
    chid_cmd->add_option("--scan-p", chid.scan_p,
                         "with --check-iff-claim: scan all digraphs on this many vertices");

    std::string validate_input, validate_colors, validate_json;
    CLI::App* validate_cmd = app.add_subcommand("validate", "check a coloring for realizability");
    validate_cmd->add_option("--input", validate_input, "edge-list file")->required();
    validate_cmd->add_option("--colors", validate_colors, "coloring file (c <vertex> <color>)")
        ->required();
    validate_cmd->add_option("--json", validate_json, "write the full run report here");

    std::string scolor_input, scolor_order, scolor_mode = "greedy", scolor_json, scolor_dot;
    int scolor_limit = limits::kChromaticExact;
    CLI::App* scolor_cmd = app.add_subcommand("scolor", "per-order coloring number");
    scolor_cmd->add_option("--input", scolor_input, "edge-list file")->required();
    scolor_cmd->add_option("--order", scolor_order, "comma-separated vertex names")->required();
    scolor_cmd->add_option("--mode", scolor_mode, "greedy|exact")
        ->check(CLI::IsMember({"greedy", "exact"}));
    scolor_cmd->add_option("--limit", scolor_limit, "exact-mode size gate");
    scolor_cmd->add_option("--json", scolor_json, "write the full run report here");
    scolor_cmd->add_option("--dot", scolor_dot, "export the input digraph as DOT");

    std::string bounds_input, bounds_json_path, bounds_dot;
    int bounds_limit = limits::kDichromaticExact;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "all bounds and the sandwich check");
    bounds_cmd->add_option("--input", bounds_input, "edge-list file")->required();
    bounds_cmd->add_option("--limit", bounds_limit, "exact-search size gate");
    bounds_cmd->add_option("--json", bounds_json_path, "write the full run report here");
    bounds_cmd->add_option("--dot", bounds_dot, "export the input digraph as DOT");

    std::string partitions_input, partitions_what, partitions_json;
    std::optional<int> partitions_limit;
    CLI::App* partitions_cmd = app.add_subcommand("partitions", "complete-partition numbers");
    partitions_cmd->add_option("--input", partitions_input, "edge-list file")->required();
    partitions_cmd->add_option("--what", partitions_what, "psi|psisd|grundy|interpolate|chain")
        ->required()
        ->check(CLI::IsMember({"psi", "psisd", "grundy", "interpolate", "chain"}));
    partitions_cmd->add_option("--limit", partitions_limit, "scan size gate");
    partitions_cmd->add_option("--json", partitions_json, "write the full run report here");

    CLI::App* lmatrix_cmd = app.add_subcommand("lmatrix", "labeled-digraph matrix codec");
    lmatrix_cmd->require_subcommand(1);
    std::string lm_input, lm_matrix, lm_json;
    bool lm_pretty = false;
    CLI::App* lm_encode = lmatrix_cmd->add_subcommand("encode", "edge-list with labels to CSV");
    lm_encode->add_option("--input", lm_input, "edge-list file with label lines")->required();
    lm_encode->add_flag("--pretty", lm_pretty, "aligned table instead of CSV");
    lm_encode->add_option("--json", lm_json, "write the full run report here");
    CLI::App* lm_decode = lmatrix_cmd->add_subcommand("decode", "CSV to edge-list with labels");
    lm_decode->add_option("--matrix", lm_matrix, "matrix CSV file")->required();
    lm_decode->add_option("--json", lm_json, "write the full run report here");
    CLI::App* lm_validate = lmatrix_cmd->add_subcommand("validate", "closure-condition check");
    lm_validate->add_option("--matrix", lm_matrix, "matrix CSV file")->required();
    lm_validate->add_option("--json", lm_json, "write the full run report here");
    CLI::App* lm_acyclic =
        lmatrix_cmd->add_subcommand("acyclic-check", "literal and semantic acyclicity");
    lm_acyclic->add_option("--matrix", lm_matrix, "matrix CSV file")->required();
    lm_acyclic->add_option("--json", lm_json, "write the full run report here");

    EnsembleOptions ensemble;
    CLI::App* ensemble_cmd = app.add_subcommand("ensemble", "seeded random-instance scans");
    ensemble_cmd->add_option("--p", ensemble.p, "vertex count")->required();
    ensemble_cmd->add_option("--count", ensemble.count, "number of instances")->required();
    ensemble_cmd->add_option("--seed", ensemble.seed, "master seed")->required();
    ensemble_cmd->add_option("--check", ensemble.check, "sandwich|prop8|chain")
        ->required()
        ->check(CLI::IsMember({"sandwich", "prop8", "chain"}));
    ensemble_cmd->add_option("--prob", ensemble.prob, "arc probability");
    ensemble_cmd->add_flag("--digons", ensemble.digons, "allow symmetric pairs");
    ensemble_cmd->add_option("--json", ensemble.json_path, "write the full run report here");

    std::string figures_json;
    CLI::App* figures_cmd = app.add_subcommand("figures", "recompute the bundled fixtures");
    figures_cmd->add_option("--json", figures_json, "write the full run report here");

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "seeded random digraph to edge-list");
    gen_cmd->add_option("--p", gen.p, "vertex count")->required();
    gen_cmd->add_option("--prob", gen.prob, "arc probability");
    gen_cmd->add_option("--seed", gen.seed, "seed (required; no ambient entropy)")->required();
    gen_cmd->add_flag("--digons", gen.digons, "allow symmetric pairs");
    gen_cmd->add_flag("--dag", gen.dag, "orient acyclically");
    gen_cmd->add_option("--json", gen.json_path, "write the full run report here");
    gen_cmd->add_option("--dot", gen.dot_path, "export as DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*chid_cmd) return run_chid(chid);
        if (*validate_cmd) return run_validate(validate_input, validate_colors, validate_json);
        if (*scolor_cmd) {
            return run_scolor(scolor_input, scolor_order, scolor_mode, scolor_limit, scolor_json,
                              scolor_dot);
        }
        if (*bounds_cmd) return run_bounds(bounds_input, bounds_limit, bounds_json_path, bounds_dot);
        if (*partitions_cmd) {
            return run_partitions(partitions_input, partitions_what, partitions_limit,
                                  partitions_json);
        }
        if (*lmatrix_cmd) {
            if (*lm_encode) return run_lmatrix_encode(lm_input, lm_pretty, lm_json);
            if (*lm_decode) return run_lmatrix_decode(lm_matrix, lm_json);
            if (*lm_validate) return run_lmatrix_validate(lm_matrix, lm_json);
            if (*lm_acyclic) return run_lmatrix_acyclic(lm_matrix, lm_json);
        }
        if (*ensemble_cmd) return run_ensemble(ensemble);
        if (*figures_cmd) return run_figures(figures_json);
        if (*gen_cmd) return run_gen(gen);
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
