#include "wellcov/validate.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "wellcov/formats.hpp"
#include "wellcov/oracle.hpp"
#include "wellcov/recognizers.hpp"

namespace wellcov {

int worker_count() {
    if (const char* env = std::getenv("WELLCOV_WORKERS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
    }
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(std::min(hw, 8u));
}

void parallel_over(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& t : pool) t.join();
}

namespace {

struct GraphFacts {
    bool no_c3, no_c4, no_c5, no_c6;
    bool claw_free;
    bool girth5;
    int alpha;
    bool well_covered;
};

GraphFacts facts_of(const Graph& g) {
    GraphFacts f{};
    f.no_c3 = !contains_cycle_len(g, 3);
    f.no_c4 = !contains_cycle_len(g, 4);
    f.no_c5 = !contains_cycle_len(g, 5);
    f.no_c6 = !contains_cycle_len(g, 6);
    f.claw_free = is_claw_free(g);
    f.girth5 = girth(g) >= 5;
    f.alpha = independence_number(g);
    f.well_covered = is_well_covered_oracle(g).answer;
    return f;
}

struct CaseLog {
    long cases = 0;
    std::vector<std::string> bad;

    void compare(bool got, bool expected, const std::string& what) {
        ++cases;
        if (got != expected) {
            std::ostringstream os;
            os << what << ": recognizer says " << (got ? "true" : "false") << ", oracle says "
               << (expected ? "true" : "false");
            bad.push_back(os.str());
        }
    }
};

void check_shed(const Graph& g, const GraphFacts& f, CaseLog& log) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const bool expected = is_shedding_oracle(g, v).answer;
        const std::string tail = " shed v=" + std::to_string(v);
        if (f.no_c5) log.compare(shed_c5free(g, v).answer, expected, "c5free" + tail);
        if (f.claw_free) log.compare(shed_clawfree(g, v).answer, expected, "clawfree" + tail);
        if (f.no_c4 && f.no_c6)
            log.compare(shed_c46free(g, v).answer, expected, "c46free" + tail);
        if (f.alpha >= 2)
            log.compare(shed_bounded_alpha(g, v, f.alpha).answer, expected,
                        "bounded-alpha" + tail);
        if (f.girth5 && f.well_covered)
            log.compare(shed_girth5_wc(g, v).answer, expected, "girth5" + tail);
    }
}

void check_wc(const Graph& g, const GraphFacts& f, CaseLog& log) {
    if (f.alpha >= 2)
        log.compare(wc_bounded_alpha(g, f.alpha).answer, f.well_covered, "wc bounded-alpha");
}

void check_w2(const Graph& g, const GraphFacts& f, CaseLog& log) {
    const bool expected = is_w2_oracle(g).answer;
    if (f.girth5) log.compare(w2_girth5(g).answer, expected, "w2 girth5");
    if (f.no_c3 && f.no_c5) log.compare(w2_c3c5free(g).answer, expected, "w2 c3c5free");
    if (f.no_c4 && f.no_c5) log.compare(w2_c45free(g).answer, expected, "w2 c45free");
    if (f.alpha >= 2)
        log.compare(w2_bounded_alpha(g, f.alpha).answer, expected, "w2 bounded-alpha");
    log.compare(w2_via_vertex_deletion(g, is_well_covered_oracle).answer, expected,
                "w2 vertex-deletion");
    if (f.well_covered)
        log.compare(
            w2_via_shedding(g, [](const Graph& h, int v) { return is_shedding_oracle(h, v); })
                .answer,
            expected, "w2 shedding-all");
}

void check_relating(const Graph& g, const GraphFacts& f, CaseLog& log) {
    if (!(f.no_c4 && f.no_c5 && f.no_c6)) return;
    for (const auto& [x, y] : g.edges()) {
        if (g.adjacency(x).intersects(g.adjacency(y))) continue;
        if (g.degree(x) < 2 || g.degree(y) < 2) continue;
        const bool expected = is_relating_oracle(g, x, y).answer;
        const bool neither_shedding =
            !is_shedding_oracle(g, x).answer && !is_shedding_oracle(g, y).answer;
        const std::string tail = " edge " + std::to_string(x) + "-" + std::to_string(y);
        log.compare(neither_shedding, expected, "relating oracle-equivalence" + tail);
        log.compare(relating_via_shedding(g, x, y).answer, expected, "relating via-flow" + tail);
    }
}

}  // namespace

ValidationReport crossvalidate(const FamilySpec& family, const std::string& property,
                               int n_max) {
    ValidationReport report;
    report.family = family.name();
    report.property = property;
    report.n_max = n_max;

    const std::vector<Graph> graphs = connected_graphs_up_to(n_max, family);
    report.graphs_checked = static_cast<long>(graphs.size());

    std::vector<CaseLog> logs(graphs.size());
    parallel_over(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        const GraphFacts f = facts_of(g);
        CaseLog& log = logs[i];
        if (property == "shed" || property == "all") check_shed(g, f, log);
        if (property == "wc" || property == "all") check_wc(g, f, log);
        if (property == "w2" || property == "all") check_w2(g, f, log);
        if (property == "relating" || property == "all") check_relating(g, f, log);
    });

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        report.cases_checked += logs[i].cases;
        for (const std::string& detail : logs[i].bad)
            report.mismatches.push_back({encode_graph6(graphs[i]), detail});
    }
    return report;
}

ConjectureReport conjecture_search(int n_max, std::uint64_t seed, int sample_count) {
    ConjectureReport report;
    report.n_max = n_max;
    report.seed = seed;

    std::vector<Graph> graphs;
    if (n_max <= 9) {
        graphs = connected_graphs_up_to(n_max);
    } else {
        report.sampled = true;
        std::mt19937_64 rng(seed);
        while (static_cast<int>(graphs.size()) < sample_count) {
            int n = 2 + random_below(rng, n_max - 1);
            double p = 0.15 + 0.6 * (random_below(rng, 1000) / 1000.0);
            Graph g = random_graph(n, p, rng);
            if (g.is_connected()) graphs.push_back(g);
        }
    }
    report.graphs_checked = static_cast<long>(graphs.size());

    struct Row {
        bool wc = false;
        bool disagree = false;
    };
    std::vector<Row> rows(graphs.size());
    parallel_over(graphs.size(), [&](std::size_t i) {
        const Graph& g = graphs[i];
        rows[i].wc = is_well_covered_oracle(g).answer;
        rows[i].disagree = is_w2_oracle(g).answer != w2_alpha_condition(g).answer;
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (rows[i].wc) ++report.well_covered_checked;
        if (!rows[i].disagree) continue;
        if (rows[i].wc)
            report.well_covered_disagreements.push_back(encode_graph6(graphs[i]));
        else
            report.candidate_counterexamples.push_back(encode_graph6(graphs[i]));
    }
    return report;
}

}  // namespace wellcov
