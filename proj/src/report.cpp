#include "wellcov/report.hpp"

#include <cstdio>
#include <variant>

#include "wellcov/oracle.hpp"
#include "wellcov/recognizers.hpp"

namespace wellcov {

std::string graph_digest(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t x) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (x >> (8 * byte)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    for (const auto& [u, v] : g.edges())
        mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

nlohmann::ordered_json set_to_json(const VertexSet& s) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    if (std::holds_alternative<std::monostate>(c)) {
        j["type"] = "none";
    } else if (const auto* w = std::get_if<WitnessSet>(&c)) {
        j["type"] = "witness-set";
        j["set"] = set_to_json(w->set);
    } else if (const auto* p = std::get_if<SetPair>(&c)) {
        j["type"] = "set-pair";
        j["first"] = set_to_json(p->first);
        j["second"] = set_to_json(p->second);
    } else if (const auto* z = std::get_if<SizedSets>(&c)) {
        j["type"] = "sized-sets";
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const auto& [set, size] : z->items)
            items.push_back({{"set", set_to_json(set)}, {"size", size}});
        j["items"] = items;
    } else if (const auto* m = std::get_if<MatchingCert>(&c)) {
        j["type"] = "matching";
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& [u, v] : m->edges) edges.push_back({u, v});
        j["edges"] = edges;
    } else if (const auto* part = std::get_if<PartitionCert>(&c)) {
        j["type"] = "partition";
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (const VertexSet& s : part->parts) parts.push_back(set_to_json(s));
        j["parts"] = parts;
    }
    return j;
}

nlohmann::ordered_json report_to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["format"] = r.format;
    j["digest"] = r.digest;
    j["n"] = r.n;
    j["m"] = r.m;
    j["property"] = r.property;
    j["algorithm"] = r.algorithm;
    j["verdict"] = r.verdict;
    j["certificate"] = certificate_to_json(r.certificate);
    if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

namespace {

// Witness inside a vertex-deleted subgraph: remap to G \ v coordinates and
// re-check there.
bool verify_deleted_wc_witness(const Graph& g, int v, const VertexSet& witness) {
    if (witness.contains(v)) return false;
    Graph h = g.without_vertex(v);
    VertexSet in_h(h.vertex_count());
    for (int u : witness) in_h.add(u < v ? u : u - 1);
    return verify_not_well_covered_witness(h, in_h);
}

}  // namespace

bool verify_report_certificate(const Graph& g, const PropertyQuery& query,
                               const std::string& algorithm, const Verdict& verdict,
                               int verify_cap) {
    if (std::holds_alternative<std::monostate>(verdict.certificate)) return true;
    const bool can_exhaust = g.vertex_count() <= verify_cap;

    if (query.property == "shed") {
        if (const auto* w = std::get_if<WitnessSet>(&verdict.certificate))
            return !verdict.answer && verify_non_shedding_witness(g, query.vertex, w->set);
        return false;
    }
    if (query.property == "wc") {
        if (const auto* w = std::get_if<WitnessSet>(&verdict.certificate))
            return !verdict.answer &&
                   (!can_exhaust || verify_not_well_covered_witness(g, w->set));
        return false;
    }
    if (query.property == "relating") {
        if (const auto* w = std::get_if<WitnessSet>(&verdict.certificate))
            return verdict.answer && verify_relating_witness(g, query.x, query.y, w->set);
        return false;
    }
    if (query.property == "w2") {
        if (const auto* part = std::get_if<PartitionCert>(&verdict.certificate)) {
            // triangle partitions only; PC partitions surface via "pc" runs
            TrianglePartition tp;
            for (const VertexSet& s : part->parts) {
                std::vector<int> vs = s.to_vector();
                if (vs.size() != 3) return false;
                tp.triples.push_back({vs[0], vs[1], vs[2]});
            }
            return verdict.answer && verify_triangle_partition(g, tp);
        }
        if (const auto* w = std::get_if<WitnessSet>(&verdict.certificate))
            // bounded-alpha found an independent dominating set below alpha
            return !verdict.answer &&
                   (!can_exhaust || verify_not_well_covered_witness(g, w->set));
        const auto* pair = std::get_if<SetPair>(&verdict.certificate);
        if (pair == nullptr || verdict.answer) return false;
        if (algorithm == "oracle")
            return !can_exhaust || verify_unextendable_pair(g, pair->first, pair->second);
        if (algorithm == "vertex-deletion" || algorithm == "clawfree") {
            if (pair->first.count() != 1) return false;
            return !can_exhaust ||
                   verify_deleted_wc_witness(g, pair->first.lowest(), pair->second);
        }
        // shedding-style routes: ({v}, S) names a non-shedding vertex; an
        // empty first set carries a maximal non-maximum independent set.
        if (pair->first.empty())
            return !can_exhaust || verify_unextendable_pair(g, pair->first, pair->second);
        if (pair->first.count() != 1) return false;
        return verify_non_shedding_witness(g, pair->first.lowest(), pair->second);
    }
    return false;
}

}  // namespace wellcov
