#include "wellcov/oracle.hpp"

#include <algorithm>

namespace wellcov {

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.adjacency(v).intersects(s)) return false;
    return true;
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    return is_independent(g, s) && dominates(g, s, g.vertices());
}

namespace {

// Non-neighbourhood V \ N[v]: adjacency of v in the complement graph, so
// maximal independent sets of g are maximal cliques there.
VertexSet nonadjacency(const Graph& g, int v) {
    VertexSet s = g.adjacency(v).complemented();
    s.remove(v);
    return s;
}

bool bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   const std::function<bool(const VertexSet&)>& visit) {
    if (p.empty() && x.empty()) return visit(r);
    int pivot = -1, pivot_score = -1;
    for (int u : p | x) {
        int score = (p & nonadjacency(g, u)).count();
        if (score > pivot_score) {
            pivot_score = score;
            pivot = u;
        }
    }
    VertexSet ext = p - nonadjacency(g, pivot);
    for (int v : ext) {
        VertexSet rv = r;
        rv.add(v);
        if (!bron_kerbosch(g, rv, p & nonadjacency(g, v), x & nonadjacency(g, v), visit))
            return false;
        p.remove(v);
        x.add(v);
    }
    return true;
}

}  // namespace

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit) {
    const int n = g.vertex_count();
    bron_kerbosch(g, VertexSet(n), VertexSet::full(n), VertexSet(n), visit);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

namespace {

void alpha_dfs(const Graph& g, VertexSet p, int size, int& best) {
    if (size + p.count() <= best) return;
    if (p.empty()) {
        best = std::max(best, size);
        return;
    }
    int v = p.lowest();
    VertexSet closed = g.adjacency(v);
    closed.add(v);
    alpha_dfs(g, p - closed, size + 1, best);
    VertexSet q = p;
    q.remove(v);
    alpha_dfs(g, q, size, best);
}

}  // namespace

int independence_number(const Graph& g) {
    int best = 0;
    alpha_dfs(g, VertexSet::full(g.vertex_count()), 0, best);
    return best;
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
    const int alpha = independence_number(g);
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (s.count() == alpha) out.push_back(s);
        return true;
    });
    return out;
}

namespace {

void independent_sets_dfs(const Graph& g, VertexSet allowed, std::uint64_t current,
                          std::vector<std::uint64_t>& out) {
    out.push_back(current);
    for (int v : allowed) {
        VertexSet next = allowed - g.adjacency(v);
        // keep only vertices above v so each set is built once
        next &= VertexSet(g.vertex_count(),
                          v + 1 >= 64 ? 0 : allowed.bits() & ~((std::uint64_t{2} << v) - 1));
        independent_sets_dfs(g, next, current | (std::uint64_t{1} << v), out);
    }
}

}  // namespace

std::vector<std::uint64_t> independent_set_masks(const Graph& g) {
    std::vector<std::uint64_t> out;
    independent_sets_dfs(g, VertexSet::full(g.vertex_count()), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet greedy_maximal_independent_in(const Graph& g, const VertexSet& within) {
    VertexSet chosen(g.vertex_count());
    VertexSet rest = within;
    while (!rest.empty()) {
        int v = rest.lowest();
        chosen.add(v);
        rest -= g.adjacency(v);
        rest.remove(v);
    }
    return chosen;
}

Verdict is_well_covered_oracle(const Graph& g) {
    const int alpha = independence_number(g);
    Verdict verdict = Verdict::yes();
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (s.count() < alpha) {
            verdict = Verdict::no(WitnessSet{s});
            return false;
        }
        return true;
    });
    return verdict;
}

Verdict is_shedding_oracle(const Graph& g, int v) {
    g.check_vertex(v);
    const VertexSet open = neighborhood(g, v, NeighborhoodKind::open);
    const VertexSet second = neighborhood(g, v, NeighborhoodKind::second);

    // Only second-neighbourhood vertices can dominate N(v) from outside N[v],
    // and domination is monotone, so maximal sets of G[N2(v)] suffice.
    std::vector<int> to_parent;
    const Graph h = g.induced(second, &to_parent);
    Verdict verdict = Verdict::yes();
    for_each_maximal_independent_set(h, [&](const VertexSet& s) {
        VertexSet in_g(g.vertex_count());
        for (int i : s) in_g.add(to_parent[static_cast<std::size_t>(i)]);
        if (dominates(g, in_g, open)) {
            verdict = Verdict::no(WitnessSet{in_g});
            return false;
        }
        return true;
    });
    return verdict;
}

namespace {

bool pair_extends(const VertexSet& a, const VertexSet& b,
                  const std::vector<VertexSet>& maxsets) {
    for (const VertexSet& m1 : maxsets) {
        if (!a.is_subset_of(m1) || m1.intersects(b)) continue;
        for (const VertexSet& m2 : maxsets)
            if (b.is_subset_of(m2) && !m2.intersects(m1)) return true;
    }
    return false;
}

bool two_disjoint_maximum_sets(const std::vector<VertexSet>& maxsets, SetPair* out) {
    for (std::size_t i = 0; i < maxsets.size(); ++i)
        for (std::size_t j = i; j < maxsets.size(); ++j) {
            if (i == j && !maxsets[i].empty()) continue;
            if (!maxsets[i].intersects(maxsets[j])) {
                if (out) *out = SetPair{maxsets[i], maxsets[j]};
                return true;
            }
        }
    return false;
}

}  // namespace

Verdict is_w2_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return Verdict::yes();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) return Verdict::no(SetPair{VertexSet(n), VertexSet(n)});

    const std::vector<VertexSet> maxsets = maximum_independent_sets(g);
    if (!two_disjoint_maximum_sets(maxsets, nullptr))
        return Verdict::no(SetPair{VertexSet(n), VertexSet(n)});

    // Nonempty pairs suffice once two disjoint maximum sets exist: a pair
    // (empty, B) extends iff ({a}, B) extends for some a outside B, and all
    // such singleton pairs are checked below.
    const std::vector<std::uint64_t> indep = independent_set_masks(g);
    for (std::size_t i = 1; i < indep.size(); ++i)
        for (std::size_t j = i + 1; j < indep.size(); ++j) {
            if ((indep[i] & indep[j]) != 0) continue;
            VertexSet a(n, indep[i]), b(n, indep[j]);
            if (!pair_extends(a, b, maxsets)) return Verdict::no(SetPair{a, b});
        }
    return Verdict::yes();
}

Verdict is_relating_oracle(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y))
        throw std::invalid_argument("is_relating_oracle requires an edge of the graph");
    VertexSet excluded = neighborhood(g, x, NeighborhoodKind::closed) |
                         neighborhood(g, y, NeighborhoodKind::closed);
    const std::uint64_t region = (g.vertices() - excluded).bits();
    const int n = g.vertex_count();
    std::uint64_t s = 0;
    while (true) {
        VertexSet candidate(n, s);
        if (is_independent(g, candidate)) {
            VertexSet with_x = candidate, with_y = candidate;
            with_x.add(x);
            with_y.add(y);
            if (is_maximal_independent(g, with_x) && is_maximal_independent(g, with_y))
                return Verdict::yes(WitnessSet{candidate});
        }
        s = (s - region) & region;
        if (s == 0) break;
    }
    return Verdict::no();
}

namespace {

bool is_bipartite(const Graph& g, const VertexSet& within) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int start : within) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.adjacency(u) & within) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] =
                        1 - color[static_cast<std::size_t>(u)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool matching_dfs(const Graph& g, const std::vector<Edge>& edges, std::size_t from,
                  VertexSet used, int remaining, std::vector<Edge>& picked,
                  std::optional<MatchingCert>& found) {
    if (remaining == 0) {
        if (is_bipartite(g, used)) {
            found = MatchingCert{picked};
            return true;
        }
        return false;
    }
    for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= edges.size(); ++i) {
        const auto& [u, v] = edges[i];
        if (used.contains(u) || used.contains(v)) continue;
        VertexSet next = used;
        next.add(u);
        next.add(v);
        picked.push_back(edges[i]);
        if (matching_dfs(g, edges, i + 1, next, remaining - 1, picked, found)) return true;
        picked.pop_back();
    }
    return false;
}

bool has_perfect_matching(const Graph& g, VertexSet within) {
    if (within.empty()) return true;
    int v = within.lowest();
    VertexSet rest = within;
    rest.remove(v);
    for (int w : g.adjacency(v) & rest) {
        VertexSet next = rest;
        next.remove(w);
        if (has_perfect_matching(g, next)) return true;
    }
    return false;
}

}  // namespace

std::optional<MatchingCert> find_alpha_matching_bipartite(const Graph& g) {
    const int alpha = independence_number(g);
    const std::vector<Edge> edges = g.edges();
    std::vector<Edge> picked;
    std::optional<MatchingCert> found;
    matching_dfs(g, edges, 0, VertexSet(g.vertex_count()), alpha, picked, found);
    return found;
}

bool exists_bipartite_alpha_deletion(const Graph& g) {
    const int n = g.vertex_count();
    const int alpha = independence_number(g);
    const std::uint64_t all = VertexSet::full(n).bits();
    for (std::uint64_t a = 0;; a = ((a | ~all) + 1) & all) {
        VertexSet rest(n, all & ~a);
        if (rest.count() == 2 * alpha && is_bipartite(g, rest) && has_perfect_matching(g, rest))
            return true;
        if (a == all) break;
    }
    return false;
}

Verdict disjoint_max_independent_sets(const Graph& g) {
    const std::vector<VertexSet> maxsets = maximum_independent_sets(g);
    SetPair pair{VertexSet(g.vertex_count()), VertexSet(g.vertex_count())};
    const bool condition1 = two_disjoint_maximum_sets(maxsets, &pair);
    const bool condition2 = find_alpha_matching_bipartite(g).has_value();
    if (condition1 != condition2)
        throw std::logic_error("disjoint maximum set search and matching search disagree");
    return condition1 ? Verdict::yes(pair) : Verdict::no();
}

Verdict w2_alpha_condition(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const VertexSet open = neighborhood(g, v, NeighborhoodKind::open);
        const VertexSet rest = g.vertices() - neighborhood(g, v, NeighborhoodKind::closed);
        std::vector<int> to_parent;
        const Graph h = g.induced(rest, &to_parent);
        Verdict verdict = Verdict::yes();
        for_each_maximal_independent_set(h, [&](const VertexSet& s) {
            VertexSet in_g(n);
            for (int i : s) in_g.add(to_parent[static_cast<std::size_t>(i)]);
            const VertexSet w = open - closed_neighborhood(g, in_g);
            // alpha == 1 means nonempty clique
            bool ok = !w.empty();
            for (int u : w) {
                VertexSet missing = w - g.adjacency(u);
                missing.remove(u);
                if (!missing.empty()) ok = false;
            }
            if (!ok) {
                verdict = Verdict::no(SetPair{VertexSet::of(n, {v}), in_g});
                return false;
            }
            return true;
        });
        if (!verdict.answer) return verdict;
    }
    return Verdict::yes();
}

bool verify_non_shedding_witness(const Graph& g, int v, const VertexSet& s) {
    const VertexSet closed = neighborhood(g, v, NeighborhoodKind::closed);
    return !s.intersects(closed) && is_independent(g, s) &&
           dominates(g, s, neighborhood(g, v, NeighborhoodKind::open));
}

bool verify_not_well_covered_witness(const Graph& g, const VertexSet& s) {
    return is_maximal_independent(g, s) && s.count() < independence_number(g);
}

bool verify_relating_witness(const Graph& g, int x, int y, const VertexSet& s) {
    VertexSet excluded = neighborhood(g, x, NeighborhoodKind::closed) |
                         neighborhood(g, y, NeighborhoodKind::closed);
    if (s.intersects(excluded)) return false;
    VertexSet with_x = s, with_y = s;
    with_x.add(x);
    with_y.add(y);
    return is_maximal_independent(g, with_x) && is_maximal_independent(g, with_y);
}

bool verify_disjoint_maximum_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
    const int alpha = independence_number(g);
    return !a.intersects(b) && is_independent(g, a) && is_independent(g, b) &&
           a.count() == alpha && b.count() == alpha;
}

bool verify_unextendable_pair(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b) || !is_independent(g, a) || !is_independent(g, b)) return false;
    return !pair_extends(a, b, maximum_independent_sets(g));
}

}  // namespace wellcov
