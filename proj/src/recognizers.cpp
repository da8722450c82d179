#include "wellcov/recognizers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "wellcov/maxflow.hpp"
#include "wellcov/oracle.hpp"

namespace wellcov {

namespace {

VertexSet remap_to_parent(const VertexSet& s, const std::vector<int>& to_parent, int width) {
    VertexSet out(width);
    for (int i : s) out.add(to_parent[static_cast<std::size_t>(i)]);
    return out;
}

std::string gate_name(const char* who, const std::string& what) {
    return std::string(who) + ": " + what;
}

}  // namespace

void require_gate(const Graph& g, const FamilyGate& gate, const char* who) {
    if (gate.connected_required && !g.is_connected())
        throw family_error(gate_name(who, "input graph must be connected"));
    if (gate.girth_min > 0 && girth(g) < gate.girth_min)
        throw family_error(gate_name(who, "girth below " + std::to_string(gate.girth_min)));
    if (gate.forbid_c3 && contains_cycle_len(g, 3))
        throw family_error(gate_name(who, "graph contains a cycle of length 3"));
    if (gate.forbid_c4 && contains_cycle_len(g, 4))
        throw family_error(gate_name(who, "graph contains a cycle of length 4"));
    if (gate.forbid_c5 && contains_cycle_len(g, 5))
        throw family_error(gate_name(who, "graph contains a cycle of length 5"));
    if (gate.forbid_c6 && contains_cycle_len(g, 6))
        throw family_error(gate_name(who, "graph contains a cycle of length 6"));
    if (gate.claw_free && !is_claw_free(g))
        throw family_error(gate_name(who, "graph contains an induced claw"));
    if (gate.well_covered_required && !is_well_covered_oracle(g).answer)
        throw family_error(gate_name(who, "input graph must be well-covered"));
}

// --- Shedding ---------------------------------------------------------------

Verdict shed_c5free(const Graph& g, int v) {
    require_gate(g, FamilyGate{.forbid_c5 = true}, "shed_c5free");
    g.check_vertex(v);
    const VertexSet open = neighborhood(g, v, NeighborhoodKind::open);
    const VertexSet second = neighborhood(g, v, NeighborhoodKind::second);
    if (!dominates(g, second, open)) return Verdict::yes();
    // Any maximal independent set of N2(v) dominates N(v) here.
    VertexSet witness = greedy_maximal_independent_in(g, second);
    return Verdict::no(WitnessSet{witness});
}

namespace {

struct MwisSearch {
    const Graph& g;
    std::span<const long long> weights;
    long long best = -1;
    VertexSet best_set;

    void run(VertexSet p, VertexSet chosen, long long current) {
        long long rest = 0;
        for (int v : p) rest += weights[static_cast<std::size_t>(v)];
        if (current + rest <= best) return;
        if (p.empty()) {
            best = current;
            best_set = chosen;
            return;
        }
        int v = p.lowest();
        VertexSet closed = g.adjacency(v);
        closed.add(v);
        VertexSet with = chosen;
        with.add(v);
        run(p - closed, with, current + weights[static_cast<std::size_t>(v)]);
        VertexSet q = p;
        q.remove(v);
        run(q, chosen, current);
    }
};

long long set_weight(const VertexSet& s, std::span<const long long> weights) {
    long long total = 0;
    for (int v : s) total += weights[static_cast<std::size_t>(v)];
    return total;
}

}  // namespace

VertexSet mwis_brute_force(const Graph& g, std::span<const long long> weights) {
    if (static_cast<int>(weights.size()) != g.vertex_count())
        throw std::invalid_argument("weight vector size does not match vertex count");
    for (long long w : weights)
        if (w < 0) throw std::invalid_argument("negative weight");
    MwisSearch search{g, weights, -1, VertexSet(g.vertex_count())};
    search.run(g.vertices(), VertexSet(g.vertex_count()), 0);
    return search.best_set;
}

VertexSet mwis(const Graph& g, std::span<const long long> weights, const MwisSolver& solver) {
    if (!solver) return mwis_brute_force(g, weights);
    VertexSet s = solver(g, weights);
    if (!is_independent(g, s)) throw std::logic_error("MWIS solver returned a dependent set");
    return s;
}

Verdict shed_clawfree(const Graph& g, int v, const MwisSolver& solver) {
    require_gate(g, FamilyGate{.claw_free = true}, "shed_clawfree");
    g.check_vertex(v);
    const VertexSet open = neighborhood(g, v, NeighborhoodKind::open);
    const VertexSet second = neighborhood(g, v, NeighborhoodKind::second);

    std::vector<int> to_parent;
    const Graph h = g.induced(second, &to_parent);
    std::vector<long long> weights(to_parent.size());
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        weights[i] = (g.adjacency(to_parent[i]) & open).count();

    VertexSet best = mwis(h, weights, solver);
    if (set_weight(best, weights) < open.count()) return Verdict::yes();
    return Verdict::no(WitnessSet{remap_to_parent(best, to_parent, g.vertex_count())});
}

Verdict shed_c46free(const Graph& g, int v) {
    require_gate(g, FamilyGate{.forbid_c4 = true, .forbid_c6 = true}, "shed_c46free");
    g.check_vertex(v);
    const FlowNetwork net = build_shedding_network(g, v);
    const FlowResult res = max_flow(net);
    if (res.value < g.degree(v)) return Verdict::yes();
    return Verdict::no(WitnessSet{res.positive_flow_vertices});
}

// --- PC family ---------------------------------------------------------------

namespace {

// Enumerates the 5-cycles of g with all vertices inside `within`, each cycle
// once: minimum vertex first, lower-id second vertex fixes the direction.
std::vector<std::array<int, 5>> five_cycles_within(const Graph& g, const VertexSet& within) {
    std::vector<std::array<int, 5>> out;
    for (int a : within) {
        for (int b : g.adjacency(a) & within) {
            if (b <= a) continue;
            for (int c : g.adjacency(b) & within) {
                if (c <= a || c == b) continue;
                for (int d : g.adjacency(c) & within) {
                    if (d <= a || d == b || d == c) continue;
                    for (int e : g.adjacency(d) & within) {
                        if (e <= a || e == b || e == c || e == d) continue;
                        if (!g.has_edge(e, a)) continue;
                        if (e < b) continue;  // direction tie-break
                        out.push_back({a, b, c, d, e});
                    }
                }
            }
        }
    }
    return out;
}

bool cycle_is_basic(const Graph& g, const std::array<int, 5>& cyc) {
    for (int i = 0; i < 5; ++i) {
        int u = cyc[static_cast<std::size_t>(i)];
        int w = cyc[static_cast<std::size_t>((i + 1) % 5)];
        if (g.degree(u) >= 3 && g.degree(w) >= 3) return false;
    }
    return true;
}

bool cover_by_cycles(const VertexSet& uncovered,
                     const std::vector<std::array<int, 5>>& cycles,
                     std::vector<std::array<int, 5>>& picked, int width) {
    if (uncovered.empty()) return true;
    const int pivot = uncovered.lowest();
    for (const auto& cyc : cycles) {
        VertexSet cs(width);
        for (int u : cyc) cs.add(u);
        if (!cs.contains(pivot) || !cs.is_subset_of(uncovered)) continue;
        picked.push_back(cyc);
        if (cover_by_cycles(uncovered - cs, cycles, picked, width)) return true;
        picked.pop_back();
    }
    return false;
}

}  // namespace

std::optional<PCPartition> find_pc_partition(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet leaves(n), stems(n);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) leaves.add(v);
    for (int v = 0; v < n; ++v)
        if (g.adjacency(v).intersects(leaves)) stems.add(v);

    PCPartition pc;
    pc.p = leaves | stems;
    pc.c = g.vertices() - pc.p;

    std::set<Edge> pendant;
    for (int l : leaves) {
        int s = g.adjacency(l).lowest();
        pendant.insert({std::min(l, s), std::max(l, s)});
    }
    std::vector<int> incidence(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : pendant) {
        ++incidence[static_cast<std::size_t>(u)];
        ++incidence[static_cast<std::size_t>(v)];
    }
    for (int v : pc.p)
        if (incidence[static_cast<std::size_t>(v)] != 1) return std::nullopt;
    pc.pendant_edges.assign(pendant.begin(), pendant.end());

    std::vector<std::array<int, 5>> candidates;
    for (const auto& cyc : five_cycles_within(g, pc.c))
        if (cycle_is_basic(g, cyc)) candidates.push_back(cyc);
    if (!cover_by_cycles(pc.c, candidates, pc.basic_cycles, n)) return std::nullopt;
    return pc;
}

bool verify_pc_partition(const Graph& g, const PCPartition& pc) {
    const int n = g.vertex_count();
    if ((pc.p | pc.c) != g.vertices() || pc.p.intersects(pc.c)) return false;

    VertexSet matched(n);
    for (const auto& [u, v] : pc.pendant_edges) {
        if (!g.has_edge(u, v)) return false;
        if (g.degree(u) != 1 && g.degree(v) != 1) return false;
        if (matched.contains(u) || matched.contains(v)) return false;
        matched.add(u);
        matched.add(v);
    }
    if (matched != pc.p) return false;

    VertexSet covered(n);
    for (const auto& cyc : pc.basic_cycles) {
        if (!cycle_is_basic(g, cyc)) return false;
        for (int i = 0; i < 5; ++i) {
            int u = cyc[static_cast<std::size_t>(i)];
            int w = cyc[static_cast<std::size_t>((i + 1) % 5)];
            if (!g.has_edge(u, w)) return false;
            if (covered.contains(u)) return false;
        }
        for (int u : cyc) covered.add(u);
    }
    return covered == pc.c;
}

Verdict recognize_pc_family(const Graph& g) {
    require_gate(g, FamilyGate{.girth_min = 5}, "recognize_pc_family");
    std::optional<PCPartition> pc = find_pc_partition(g);
    if (!pc) return Verdict::no();
    if (!verify_pc_partition(g, *pc))
        throw std::logic_error("constructed PC partition failed re-verification");
    PartitionCert cert;
    for (const auto& [u, v] : pc->pendant_edges)
        cert.parts.push_back(VertexSet::of(g.vertex_count(), {u, v}));
    for (const auto& cyc : pc->basic_cycles) {
        VertexSet s(g.vertex_count());
        for (int u : cyc) s.add(u);
        cert.parts.push_back(s);
    }
    return Verdict::yes(cert);
}

Verdict shed_girth5_wc(const Graph& g, int v) {
    require_gate(g, FamilyGate{.girth_min = 5, .connected_required = true}, "shed_girth5_wc");
    g.check_vertex(v);

    std::optional<PCPartition> pc = find_pc_partition(g);
    // A well-covered graph outside PC has no shedding vertex at all.
    if (!pc) return Verdict::no();

    bool is_stem = false;
    for (int u : g.adjacency(v))
        if (g.degree(u) == 1) is_stem = true;
    if (is_stem) return Verdict::yes();
    if (g.degree(v) == 1) {
        // leaf: any other neighbour of its stem dominates N(v)
        int stem = g.adjacency(v).lowest();
        VertexSet others = g.adjacency(stem);
        others.remove(v);
        VertexSet witness(g.vertex_count());
        witness.add(others.lowest());
        if (!verify_non_shedding_witness(g, v, witness))
            throw std::logic_error("girth-5 leaf witness failed re-verification");
        return Verdict::no(WitnessSet{witness});
    }

    // v lies on its basic cycle
    const std::array<int, 5>* cycle = nullptr;
    for (const auto& cyc : pc->basic_cycles)
        if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) cycle = &cyc;
    if (cycle == nullptr) throw std::logic_error("PC vertex outside pendant edges and cycles");

    if (g.degree(v) >= 3) return Verdict::yes();

    // degree 2: both neighbours v1, v2 are on the cycle. Shedding iff
    // N({v1,v2}) has nothing outside the cycle; otherwise an off-cycle
    // neighbour plus the opposite cycle neighbour dominates N(v).
    VertexSet cycle_set(g.vertex_count());
    for (int u : *cycle) cycle_set.add(u);
    const VertexSet open = g.adjacency(v);
    const VertexSet outside = open_neighborhood(g, open) - cycle_set;
    if (outside.empty()) return Verdict::yes();

    const int w = outside.lowest();
    int attached = (g.adjacency(w) & open).lowest();  // v1 or v2
    int other = (open - VertexSet::of(g.vertex_count(), {attached})).lowest();
    VertexSet partner = g.adjacency(other) & cycle_set;
    partner.remove(v);
    VertexSet witness = VertexSet::of(g.vertex_count(), {w, partner.lowest()});
    if (!verify_non_shedding_witness(g, v, witness))
        throw std::logic_error("girth-5 case-3 witness failed re-verification");
    return Verdict::no(WitnessSet{witness});
}

// --- Bounded independence number ---------------------------------------------

namespace {

// DFS over independent sets in increasing-lexicographic order, sizes up to
// max_size; stops when `found` fires.
bool independent_subset_scan(const Graph& g, const VertexSet& universe, int max_size,
                             const std::function<bool(const VertexSet&)>& found,
                             VertexSet current, VertexSet candidates) {
    if (found(current)) return true;
    if (current.count() >= max_size) return false;
    for (int v : candidates) {
        VertexSet next_current = current;
        next_current.add(v);
        VertexSet next_candidates = candidates - g.adjacency(v);
        next_candidates &= VertexSet(
            g.vertex_count(),
            v + 1 >= kMaxVertices ? 0
                                  : candidates.bits() & ~((std::uint64_t{2} << v) - 1));
        if (independent_subset_scan(g, universe, max_size, found, next_current,
                                    next_candidates))
            return true;
    }
    return false;
}

void check_alpha_parameter(int k) {
    if (k < 2) throw std::invalid_argument("independence bound k must be at least 2");
}

}  // namespace

Verdict wc_bounded_alpha(const Graph& g, int k) {
    check_alpha_parameter(k);
    Verdict verdict = Verdict::yes();
    independent_subset_scan(
        g, g.vertices(), k - 1,
        [&](const VertexSet& s) {
            if (!s.empty() && dominates(g, s, g.vertices())) {
                verdict = Verdict::no(WitnessSet{s});
                return true;
            }
            return false;
        },
        g.empty_set(), g.vertices());
    return verdict;
}

Verdict shed_bounded_alpha(const Graph& g, int v, int k) {
    check_alpha_parameter(k);
    g.check_vertex(v);
    const VertexSet open = neighborhood(g, v, NeighborhoodKind::open);
    const VertexSet second = neighborhood(g, v, NeighborhoodKind::second);
    Verdict verdict = Verdict::yes();
    independent_subset_scan(
        g, second, k - 1,
        [&](const VertexSet& s) {
            if (dominates(g, s, open)) {  // empty set included: isolated v is not shedding
                verdict = Verdict::no(WitnessSet{s});
                return true;
            }
            return false;
        },
        g.empty_set(), second);
    return verdict;
}

Verdict w2_bounded_alpha(const Graph& g, int k) {
    check_alpha_parameter(k);
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            return Verdict::no(SetPair{VertexSet::of(n, {v}), VertexSet(n)});
    Verdict verdict = Verdict::yes();
    independent_subset_scan(
        g, g.vertices(), k - 1,
        [&](const VertexSet& s) {
            const VertexSet uncovered = g.vertices() - closed_neighborhood(g, s);
            if (uncovered.empty()) {
                verdict = Verdict::no(WitnessSet{s});  // dominating: not well-covered
                return true;
            }
            if (uncovered.count() == 1) {
                // N[S] = V \ {v}: v is not shedding
                verdict = Verdict::no(SetPair{uncovered, s});
                return true;
            }
            return false;
        },
        g.empty_set(), g.vertices());
    return verdict;
}

// --- Hereditary compositions ---------------------------------------------------

Verdict w2_via_vertex_deletion(const Graph& g, const WellCoveredCheck& wc_check) {
    const int n = g.vertex_count();
    if (n == 0) return Verdict::yes();
    if (is_isomorphic_small(g, SmallGraph::P3)) return Verdict::no();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            return Verdict::no(SetPair{VertexSet::of(n, {v}), VertexSet(n)});
    for (int v = 0; v < n; ++v) {
        std::vector<int> to_parent;
        const Graph h = g.without_vertex(v, &to_parent);
        Verdict inner = wc_check(h);
        if (!inner.answer) {
            VertexSet witness(n);
            if (const auto* ws = std::get_if<WitnessSet>(&inner.certificate))
                witness = remap_to_parent(ws->set, to_parent, n);
            return Verdict::no(SetPair{VertexSet::of(n, {v}), witness});
        }
    }
    return Verdict::yes();
}

Verdict w2_via_shedding(const Graph& g, const SheddingCheck& shed_check) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            return Verdict::no(SetPair{VertexSet::of(n, {v}), VertexSet(n)});
    for (int v = 0; v < n; ++v) {
        Verdict inner = shed_check(g, v);
        if (!inner.answer) {
            VertexSet witness(n);
            if (const auto* ws = std::get_if<WitnessSet>(&inner.certificate)) witness = ws->set;
            return Verdict::no(SetPair{VertexSet::of(n, {v}), witness});
        }
    }
    return Verdict::yes();
}

// --- Family-specific W2 recognizers --------------------------------------------

Verdict w2_girth5(const Graph& g) {
    require_gate(g, FamilyGate{.girth_min = 5, .connected_required = true}, "w2_girth5");
    return (is_isomorphic_small(g, SmallGraph::C5) || is_isomorphic_small(g, SmallGraph::K2))
               ? Verdict::yes()
               : Verdict::no();
}

Verdict w2_c3c5free(const Graph& g) {
    require_gate(g, FamilyGate{.forbid_c3 = true, .forbid_c5 = true, .connected_required = true},
                 "w2_c3c5free");
    return is_isomorphic_small(g, SmallGraph::K2) ? Verdict::yes() : Verdict::no();
}

std::optional<TrianglePartition> find_triangle_partition(const Graph& g) {
    const int n = g.vertex_count();
    // Every usable triangle is N[x] for a simplicial vertex x of degree 2;
    // a simplicial vertex with an extra neighbour would force a C4.
    std::set<std::array<int, 3>> seen;
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 2 || !is_simplicial(g, x)) continue;
        std::array<int, 3> triple{};
        VertexSet closed = g.adjacency(x);
        closed.add(x);
        std::vector<int> vs = closed.to_vector();
        std::copy(vs.begin(), vs.end(), triple.begin());
        seen.insert(triple);
    }
    std::vector<std::array<int, 3>> candidates;
    for (const auto& triple : seen) {
        int simplicial_members = 0;
        for (int u : triple)
            if (is_simplicial(g, u)) ++simplicial_members;
        if (simplicial_members >= 2) candidates.push_back(triple);
    }

    // Exact cover, most-constrained vertex first.
    std::vector<std::vector<std::size_t>> by_vertex(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (int u : candidates[i]) by_vertex[static_cast<std::size_t>(u)].push_back(i);

    TrianglePartition tp;
    std::function<bool(VertexSet)> cover = [&](VertexSet uncovered) {
        if (uncovered.empty()) return true;
        int pivot = -1, fewest = -1;
        for (int u : uncovered) {
            int avail = 0;
            for (std::size_t i : by_vertex[static_cast<std::size_t>(u)]) {
                bool free = true;
                for (int w : candidates[i])
                    if (!uncovered.contains(w)) free = false;
                if (free) ++avail;
            }
            if (fewest < 0 || avail < fewest) {
                fewest = avail;
                pivot = u;
            }
        }
        for (std::size_t i : by_vertex[static_cast<std::size_t>(pivot)]) {
            bool free = true;
            for (int w : candidates[i])
                if (!uncovered.contains(w)) free = false;
            if (!free) continue;
            VertexSet rest = uncovered;
            for (int w : candidates[i]) rest.remove(w);
            tp.triples.push_back(candidates[i]);
            if (cover(rest)) return true;
            tp.triples.pop_back();
        }
        return false;
    };
    if (!cover(g.vertices())) return std::nullopt;
    return tp;
}

bool verify_triangle_partition(const Graph& g, const TrianglePartition& tp) {
    VertexSet covered(g.vertex_count());
    for (const auto& triple : tp.triples) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!g.has_edge(triple[static_cast<std::size_t>(i)],
                                triple[static_cast<std::size_t>(j)]))
                    return false;
        int simplicial_members = 0;
        for (int u : triple) {
            if (covered.contains(u)) return false;
            covered.add(u);
            if (is_simplicial(g, u)) ++simplicial_members;
        }
        if (simplicial_members < 2) return false;
    }
    return covered == g.vertices();
}

Verdict w2_c45free(const Graph& g) {
    require_gate(g, FamilyGate{.forbid_c4 = true, .forbid_c5 = true, .connected_required = true},
                 "w2_c45free");
    if (is_isomorphic_small(g, SmallGraph::K2)) return Verdict::yes();
    std::optional<TrianglePartition> tp = find_triangle_partition(g);
    if (!tp) return Verdict::no();
    if (!verify_triangle_partition(g, *tp))
        throw std::logic_error("triangle partition failed re-verification");
    PartitionCert cert;
    for (const auto& triple : tp->triples) {
        VertexSet s(g.vertex_count());
        for (int u : triple) s.add(u);
        cert.parts.push_back(s);
    }
    return Verdict::yes(cert);
}

Verdict relating_via_shedding(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y))
        throw std::invalid_argument("relating_via_shedding requires an edge of the graph");
    if (contains_cycle_len(g, 4))
        throw family_error("relating_via_shedding: graph contains a cycle of length 4");
    if (contains_cycle_len(g, 5))
        throw family_error("relating_via_shedding: graph contains a cycle of length 5");
    if (contains_cycle_len(g, 6))
        throw family_error("relating_via_shedding: graph contains a cycle of length 6");
    if (g.adjacency(x).intersects(g.adjacency(y)))
        throw family_error("relating_via_shedding: endpoints share a common neighbour");
    if (g.degree(x) < 2)
        throw family_error("relating_via_shedding: endpoint x has degree below 2");
    if (g.degree(y) < 2)
        throw family_error("relating_via_shedding: endpoint y has degree below 2");

    const Verdict sx = shed_c46free(g, x);
    const Verdict sy = shed_c46free(g, y);
    if (sx.answer || sy.answer) return Verdict::no();

    // Assemble the relating witness from the two non-shedding witnesses and
    // extend it to a maximal independent set of G \ N[{x,y}].
    VertexSet seed(g.vertex_count());
    if (const auto* wx = std::get_if<WitnessSet>(&sx.certificate)) seed |= wx->set;
    if (const auto* wy = std::get_if<WitnessSet>(&sy.certificate)) seed |= wy->set;
    VertexSet region = g.vertices() - (neighborhood(g, x, NeighborhoodKind::closed) |
                                       neighborhood(g, y, NeighborhoodKind::closed));
    VertexSet rest = region - closed_neighborhood(g, seed);
    VertexSet witness = seed | greedy_maximal_independent_in(g, rest);
    if (!verify_relating_witness(g, x, y, witness))
        throw std::logic_error("relating witness failed re-verification");
    return Verdict::yes(WitnessSet{witness});
}

// --- Routing -------------------------------------------------------------------

DispatchResult dispatch_w2(const Graph& g, int oracle_cap) {
    const int n = g.vertex_count();
    if (n == 0) return {Verdict::yes(), "trivial"};
    const bool connected = g.is_connected();
    const bool no_c3 = !contains_cycle_len(g, 3);
    const bool no_c4 = !contains_cycle_len(g, 4);
    const bool no_c5 = !contains_cycle_len(g, 5);
    const bool no_c6 = !contains_cycle_len(g, 6);

    if (connected && girth(g) >= 5) return {w2_girth5(g), "girth5"};
    if (connected && no_c3 && no_c5) return {w2_c3c5free(g), "c3c5free"};
    if (connected && no_c4 && no_c5) return {w2_c45free(g), "c45free"};

    if (no_c5 && n <= oracle_cap) {
        Verdict wc = is_well_covered_oracle(g);
        if (!wc.answer) {
            // a maximal non-maximum set makes (empty, S) an unextendable pair
            VertexSet s(n);
            if (const auto* ws = std::get_if<WitnessSet>(&wc.certificate)) s = ws->set;
            return {Verdict::no(SetPair{VertexSet(n), s}), "c5free"};
        }
        return {w2_via_shedding(g, [](const Graph& h, int v) { return shed_c5free(h, v); }),
                "c5free"};
    }
    if (no_c4 && no_c6 && n <= oracle_cap) {
        Verdict wc = is_well_covered_oracle(g);
        if (!wc.answer) {
            VertexSet s(n);
            if (const auto* ws = std::get_if<WitnessSet>(&wc.certificate)) s = ws->set;
            return {Verdict::no(SetPair{VertexSet(n), s}), "c46free"};
        }
        return {w2_via_shedding(g, [](const Graph& h, int v) { return shed_c46free(h, v); }),
                "c46free"};
    }
    if (is_claw_free(g) && n <= oracle_cap)
        return {w2_via_vertex_deletion(g, is_well_covered_oracle), "clawfree"};

    if (n <= 20) {
        const int alpha = independence_number(g);
        if (alpha == 1) return {n >= 2 ? Verdict::yes() : Verdict::no(), "clique"};
        if (alpha <= 4) return {w2_bounded_alpha(g, alpha), "bounded-alpha"};
    }
    if (n <= oracle_cap) return {is_w2_oracle(g), "oracle"};
    throw family_error("dispatch_w2: no applicable algorithm for this graph at this size");
}

}  // namespace wellcov
