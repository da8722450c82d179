#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wellcov/enumerate.hpp"
#include "wellcov/formats.hpp"
#include "wellcov/oracle.hpp"
#include "wellcov/recognizers.hpp"
#include "wellcov/reduction.hpp"
#include "wellcov/report.hpp"
#include "wellcov/validate.hpp"

namespace {

using namespace wellcov;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitGate = 2;
constexpr int kExitParse = 3;
constexpr int kExitInternal = 70;

int oracle_cap() {
    if (const char* env = std::getenv("WELLCOV_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, kMaxVertices);
    }
    return 12;
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphDocument load_graph(const std::string& path, const std::string& format) {
    const std::string text = read_input(path);
    if (format == "auto") return parse_graph_auto(text);
    auto f = format_from_name(format);
    if (!f) throw parse_error(0, "unknown format '" + format + "'");
    return parse_graph(text, *f);
}

struct RecognizeOptions {
    std::string input;
    std::string format = "auto";
    std::string property;
    std::string algorithm = "auto";
    int vertex = -1;
    std::vector<int> edge;
    int k = 0;  // bounded-alpha parameter; 0 = derive from the graph
    bool json = false;
    bool quiet = false;
    bool timing = false;
};

int alpha_for(const Graph& g, int requested) {
    if (requested > 0) return requested;
    if (g.vertex_count() > 20)
        throw family_error("bounded-alpha: supply --k; deriving alpha needs n <= 20");
    return independence_number(g);
}

struct Outcome {
    Verdict verdict;
    std::string algorithm;
};

Outcome run_wc(const Graph& g, const std::string& algorithm, int k) {
    const int cap = oracle_cap();
    if (algorithm == "oracle") {
        if (g.vertex_count() > cap)
            throw family_error("oracle: graph exceeds WELLCOV_MAX_N=" + std::to_string(cap));
        return {is_well_covered_oracle(g), "oracle"};
    }
    if (algorithm == "bounded-alpha") return {wc_bounded_alpha(g, alpha_for(g, k)), "bounded-alpha"};
    if (algorithm == "auto") {
        if (g.vertex_count() <= cap) return {is_well_covered_oracle(g), "oracle"};
        if (g.vertex_count() <= 20) {
            int alpha = independence_number(g);
            if (alpha >= 2 && alpha <= 4) return {wc_bounded_alpha(g, alpha), "bounded-alpha"};
        }
        throw family_error("no applicable well-covered algorithm at this size");
    }
    throw family_error("algorithm '" + algorithm + "' does not decide well-coveredness");
}

Outcome run_w2(const Graph& g, const std::string& algorithm, int k) {
    const int cap = oracle_cap();
    if (algorithm == "auto") {
        DispatchResult r = dispatch_w2(g, cap);
        return {r.verdict, r.algorithm};
    }
    if (algorithm == "oracle") {
        if (g.vertex_count() > cap)
            throw family_error("oracle: graph exceeds WELLCOV_MAX_N=" + std::to_string(cap));
        return {is_w2_oracle(g), "oracle"};
    }
    if (algorithm == "girth5") return {w2_girth5(g), "girth5"};
    if (algorithm == "c3c5free") return {w2_c3c5free(g), "c3c5free"};
    if (algorithm == "c45free") return {w2_c45free(g), "c45free"};
    if (algorithm == "bounded-alpha") return {w2_bounded_alpha(g, alpha_for(g, k)), "bounded-alpha"};
    if (algorithm == "vertex-deletion") {
        if (g.vertex_count() > cap)
            throw family_error("vertex-deletion uses the oracle checker; graph exceeds "
                               "WELLCOV_MAX_N");
        return {w2_via_vertex_deletion(g, is_well_covered_oracle), "vertex-deletion"};
    }
    if (algorithm == "shedding-all" || algorithm == "c5free" || algorithm == "c46free") {
        if (g.vertex_count() > cap)
            throw family_error("route needs the well-covered oracle; graph exceeds "
                               "WELLCOV_MAX_N");
        Verdict wc = is_well_covered_oracle(g);
        if (!wc.answer) {
            VertexSet s(g.vertex_count());
            if (const auto* ws = std::get_if<WitnessSet>(&wc.certificate)) s = ws->set;
            return {Verdict::no(SetPair{VertexSet(g.vertex_count()), s}), algorithm};
        }
        SheddingCheck shed;
        if (algorithm == "c5free")
            shed = [](const Graph& h, int v) { return shed_c5free(h, v); };
        else if (algorithm == "c46free")
            shed = [](const Graph& h, int v) { return shed_c46free(h, v); };
        else
            shed = [](const Graph& h, int v) { return is_shedding_oracle(h, v); };
        return {w2_via_shedding(g, shed), algorithm};
    }
    throw family_error("algorithm '" + algorithm + "' does not decide W2 membership");
}

Outcome run_shed(const Graph& g, int v, const std::string& algorithm, int k) {
    const int cap = oracle_cap();
    g.check_vertex(v);
    if (algorithm == "oracle") {
        if (g.vertex_count() > cap)
            throw family_error("oracle: graph exceeds WELLCOV_MAX_N=" + std::to_string(cap));
        return {is_shedding_oracle(g, v), "oracle"};
    }
    if (algorithm == "c5free") return {shed_c5free(g, v), "c5free"};
    if (algorithm == "clawfree") return {shed_clawfree(g, v), "clawfree"};
    if (algorithm == "c46free") return {shed_c46free(g, v), "c46free"};
    if (algorithm == "bounded-alpha")
        return {shed_bounded_alpha(g, v, alpha_for(g, k)), "bounded-alpha"};
    if (algorithm == "girth5") {
        if (g.vertex_count() > cap)
            throw family_error("girth5 shedding needs a well-covered attestation; graph "
                               "exceeds WELLCOV_MAX_N");
        require_gate(g, FamilyGate{.girth_min = 5, .well_covered_required = true,
                                   .connected_required = true},
                     "shed_girth5_wc");
        return {shed_girth5_wc(g, v), "girth5"};
    }
    if (algorithm == "auto") {
        if (!contains_cycle_len(g, 5)) return {shed_c5free(g, v), "c5free"};
        if (!contains_cycle_len(g, 4) && !contains_cycle_len(g, 6))
            return {shed_c46free(g, v), "c46free"};
        if (is_claw_free(g)) return {shed_clawfree(g, v), "clawfree"};
        if (g.vertex_count() <= cap && g.is_connected() && girth(g) >= 5 &&
            is_well_covered_oracle(g).answer)
            return {shed_girth5_wc(g, v), "girth5"};
        if (g.vertex_count() <= 20) {
            int alpha = independence_number(g);
            if (alpha >= 2 && alpha <= 4) return {shed_bounded_alpha(g, v, alpha), "bounded-alpha"};
        }
        if (g.vertex_count() <= cap) return {is_shedding_oracle(g, v), "oracle"};
        throw family_error("no applicable shedding algorithm at this size");
    }
    throw family_error("algorithm '" + algorithm + "' does not decide shedding");
}

Outcome run_relating(const Graph& g, int x, int y, const std::string& algorithm) {
    const int cap = oracle_cap();
    if (algorithm == "oracle") {
        if (g.vertex_count() > cap)
            throw family_error("oracle: graph exceeds WELLCOV_MAX_N=" + std::to_string(cap));
        return {is_relating_oracle(g, x, y), "oracle"};
    }
    if (algorithm == "c46free") return {relating_via_shedding(g, x, y), "c46free"};
    if (algorithm == "auto") {
        try {
            return {relating_via_shedding(g, x, y), "c46free"};
        } catch (const family_error&) {
            if (g.vertex_count() <= cap) return {is_relating_oracle(g, x, y), "oracle"};
            throw;
        }
    }
    throw family_error("algorithm '" + algorithm + "' does not decide relating edges");
}

int cmd_recognize(const RecognizeOptions& opt) {
    GraphDocument doc = load_graph(opt.input, opt.format);
    const Graph& g = doc.graph;

    PropertyQuery query{opt.property, opt.vertex, -1, -1};
    if (opt.property == "relating") {
        if (opt.edge.size() != 2) throw family_error("relating needs --edge U V");
        query.x = opt.edge[0];
        query.y = opt.edge[1];
        g.check_vertex(query.x);
        g.check_vertex(query.y);
    }
    if (opt.property == "shed") {
        if (opt.vertex < 0) throw family_error("shed needs --vertex V");
        g.check_vertex(opt.vertex);
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    if (opt.property == "wc")
        outcome = run_wc(g, opt.algorithm, opt.k);
    else if (opt.property == "w2")
        outcome = run_w2(g, opt.algorithm, opt.k);
    else if (opt.property == "shed")
        outcome = run_shed(g, opt.vertex, opt.algorithm, opt.k);
    else if (opt.property == "relating")
        outcome = run_relating(g, query.x, query.y, opt.algorithm);
    else
        throw family_error("unknown property '" + opt.property + "'");
    const auto stop = std::chrono::steady_clock::now();

    if (!verify_report_certificate(g, query, outcome.algorithm, outcome.verdict, oracle_cap()))
        throw std::logic_error("emitted certificate failed independent re-verification");

    RunReport report;
    report.command = "recognize";
    report.format = format_name(doc.format);
    report.digest = graph_digest(g);
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.property = opt.property;
    report.algorithm = outcome.algorithm;
    report.verdict = outcome.verdict.answer;
    report.certificate = outcome.verdict.certificate;
    if (opt.timing)
        report.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    if (opt.json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else if (!opt.quiet) {
        std::cout << opt.property << " = " << (report.verdict ? "true" : "false") << " ("
                  << report.algorithm << ")\n";
        nlohmann::ordered_json cert = certificate_to_json(report.certificate);
        if (cert["type"] != "none") std::cout << "certificate: " << cert.dump() << "\n";
    }
    return report.verdict ? kExitTrue : kExitFalse;
}

struct ReduceOptions {
    std::string cnf;
    std::string out_graph;
    std::string out_roles;
    std::string graph_format = "edge-list";
    bool json = false;
};

int cmd_reduce(const ReduceOptions& opt) {
    SatInstance inst = parse_cnf(read_input(opt.cnf));
    ReductionOutput out = sat_to_shed(inst);

    auto fmt = format_from_name(opt.graph_format);
    if (!fmt) throw parse_error(0, "unknown format '" + opt.graph_format + "'");
    const std::string graph_text = encode_graph(out.gadget, *fmt);

    nlohmann::ordered_json roles;
    roles["v"] = out.v;
    roles["clause_vertices"] = out.clause_vertices;
    nlohmann::ordered_json lits = nlohmann::ordered_json::array();
    for (const auto& [key, vertex] : out.literal_vertices) {
        int signed_lit = (key.second.variable + 1) * (key.second.negated ? -1 : 1);
        lits.push_back({{"vertex", vertex}, {"clause", key.first}, {"literal", signed_lit}});
    }
    roles["literal_vertices"] = lits;
    roles["n"] = out.gadget.vertex_count();
    roles["m"] = out.gadget.edge_count();

    if (opt.out_graph.empty()) {
        std::cout << graph_text;
    } else {
        std::ofstream f(opt.out_graph, std::ios::binary);
        f << graph_text;
    }
    if (opt.out_roles.empty()) {
        if (opt.json) std::cout << roles.dump(2) << "\n";
    } else {
        std::ofstream f(opt.out_roles, std::ios::binary);
        f << roles.dump(2) << "\n";
    }
    return kExitTrue;
}

int cmd_crossvalidate(const std::string& family_name, const std::string& property, int n_max,
                      bool json) {
    auto family = FamilySpec::from_name(family_name);
    if (!family) throw family_error("unknown family '" + family_name + "'");
    if (n_max > 10) throw family_error("crossvalidate is exhaustive; n-max is capped at 10");
    ValidationReport r = crossvalidate(*family, property, n_max);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "crossvalidate";
        j["family"] = r.family;
        j["property"] = r.property;
        j["n_max"] = r.n_max;
        j["graphs_checked"] = r.graphs_checked;
        j["cases_checked"] = r.cases_checked;
        nlohmann::ordered_json mm = nlohmann::ordered_json::array();
        for (const auto& m : r.mismatches) mm.push_back({{"graph6", m.graph6}, {"detail", m.detail}});
        j["mismatches"] = mm;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family " << r.family << ", property " << r.property << ", n <= "
                  << r.n_max << ": " << r.graphs_checked << " graphs, " << r.cases_checked
                  << " cases, " << r.mismatches.size() << " mismatches\n";
        for (const auto& m : r.mismatches)
            std::cout << "  " << m.graph6 << "  " << m.detail << "\n";
    }
    return r.mismatches.empty() ? kExitTrue : kExitFalse;
}

int cmd_conjecture(int n_max, std::uint64_t seed, int count, bool json) {
    ConjectureReport r = conjecture_search(n_max, seed, count);
    if (json) {
        nlohmann::ordered_json j;
        j["command"] = "conjecture";
        j["n_max"] = r.n_max;
        j["sampled"] = r.sampled;
        j["seed"] = r.seed;
        j["graphs_checked"] = r.graphs_checked;
        j["well_covered_checked"] = r.well_covered_checked;
        j["well_covered_disagreements"] = r.well_covered_disagreements;
        j["candidate_counterexamples"] = r.candidate_counterexamples;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "checked " << r.graphs_checked << " graphs (" << r.well_covered_checked
                  << " well-covered)\n";
        std::cout << "well-covered disagreements: " << r.well_covered_disagreements.size()
                  << "\n";
        std::cout << "candidate counterexamples: " << r.candidate_counterexamples.size()
                  << "\n";
        for (const auto& s : r.candidate_counterexamples) std::cout << "  " << s << "\n";
    }
    return r.well_covered_disagreements.empty() ? kExitTrue : kExitFalse;
}

struct GenerateOptions {
    std::string family = "general";
    int n = 10;
    int count = 1;
    std::uint64_t seed = 1;
    double edge_probability = 0.0;  // 0 = pick a family-appropriate default
    std::string format = "graph6";
};

int cmd_generate(const GenerateOptions& opt) {
    auto family = FamilySpec::from_name(opt.family);
    if (!family) throw family_error("unknown family '" + opt.family + "'");
    auto fmt = format_from_name(opt.format);
    if (!fmt) throw parse_error(0, "unknown format '" + opt.format + "'");

    double p = opt.edge_probability;
    if (p <= 0) {
        const bool constrained = family->forbid_c3 || family->forbid_c4 || family->forbid_c5 ||
                                 family->forbid_c6 || family->girth_min > 0;
        p = constrained ? 1.5 / std::max(2, opt.n) : 0.5;
    }
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < opt.count; ++i) {
        std::optional<Graph> g = random_graph_in_family(opt.n, p, *family, rng);
        if (!g)
            throw family_error("rejection budget exhausted; try a smaller edge probability "
                               "(--edge-prob) or a smaller n");
        std::cout << encode_graph(*g, *fmt);
        if (*fmt != GraphFormat::graph6 && i + 1 < opt.count) std::cout << "---\n";
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"well-covered / W2 graph recognition toolkit"};
    app.require_subcommand(1);

    RecognizeOptions rec;
    CLI::App* recognize = app.add_subcommand("recognize", "decide a property of a graph");
    recognize->add_option("input", rec.input, "graph file ('-' for stdin)")->required();
    recognize->add_option("--format", rec.format, "edge-list|graph6|dimacs|auto");
    recognize->add_option("--property", rec.property, "wc|w2|shed|relating")->required();
    recognize->add_option("--algorithm", rec.algorithm,
                          "auto|oracle|c5free|clawfree|c46free|girth5|bounded-alpha|"
                          "vertex-deletion|shedding-all|c3c5free|c45free");
    recognize->add_option("--vertex", rec.vertex, "vertex for shed");
    recognize->add_option("--edge", rec.edge, "edge endpoints for relating")->expected(2);
    recognize->add_option("--k", rec.k, "independence bound for bounded-alpha");
    recognize->add_flag("--json", rec.json, "machine-readable report");
    recognize->add_flag("--quiet", rec.quiet, "only the exit code");
    recognize->add_flag("--timing", rec.timing, "include elapsed_ms in the JSON report");

    ReduceOptions red;
    CLI::App* reduce = app.add_subcommand("reduce", "build the SAT non-shedding gadget");
    reduce->add_option("cnf", red.cnf, "DIMACS CNF file ('-' for stdin)")->required();
    reduce->add_option("--out-graph", red.out_graph, "gadget output file (default stdout)");
    reduce->add_option("--out-roles", red.out_roles, "vertex role map JSON file");
    reduce->add_option("--graph-format", red.graph_format, "edge-list|graph6|dimacs");
    reduce->add_flag("--json", red.json, "print the role map to stdout");

    std::string cv_family = "general", cv_property = "all";
    int cv_nmax = 7;
    bool cv_json = false;
    CLI::App* crossval =
        app.add_subcommand("crossvalidate", "recognizers vs oracles over a whole family");
    crossval->add_option("--family", cv_family,
                         "general|c5free|c3c5free|c45free|c46free|c456free|girth5|clawfree");
    crossval->add_option("--property", cv_property, "shed|wc|w2|relating|all");
    crossval->add_option("--n-max", cv_nmax, "largest vertex count (exhaustive, <= 10)");
    crossval->add_flag("--json", cv_json, "machine-readable report");

    int cj_nmax = 7, cj_count = 200;
    std::uint64_t cj_seed = 1;
    bool cj_json = false;
    CLI::App* conjecture =
        app.add_subcommand("conjecture", "search for W2 / alpha-condition disagreements");
    conjecture->add_option("--n-max", cj_nmax, "exhaustive when <= 9, sampled above");
    conjecture->add_option("--seed", cj_seed, "sampling seed");
    conjecture->add_option("--count", cj_count, "sample count when sampling");
    conjecture->add_flag("--json", cj_json, "machine-readable report");

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand("generate", "seeded random graphs inside a family");
    generate->add_option("--family", gen.family, "family gate for rejection sampling");
    generate->add_option("--n", gen.n, "vertex count")->required();
    generate->add_option("--count", gen.count, "number of graphs");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--edge-prob", gen.edge_probability, "edge probability");
    generate->add_option("--format", gen.format, "edge-list|graph6|dimacs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize->parsed()) return cmd_recognize(rec);
        if (reduce->parsed()) return cmd_reduce(red);
        if (crossval->parsed()) return cmd_crossvalidate(cv_family, cv_property, cv_nmax, cv_json);
        if (conjecture->parsed()) return cmd_conjecture(cj_nmax, cj_seed, cj_count, cj_json);
        if (generate->parsed()) return cmd_generate(gen);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const family_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitGate;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
