#include "wellcov/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace wellcov {

std::optional<FamilySpec> FamilySpec::from_name(const std::string& name) {
    if (name == "general" || name == "all") return FamilySpec{};
    if (name == "c5free") return FamilySpec{.forbid_c5 = true};
    if (name == "c3c5free") return FamilySpec{.forbid_c3 = true, .forbid_c5 = true};
    if (name == "c45free" || name == "c4c5free")
        return FamilySpec{.forbid_c4 = true, .forbid_c5 = true};
    if (name == "c46free" || name == "c4c6free")
        return FamilySpec{.forbid_c4 = true, .forbid_c6 = true};
    if (name == "c456free")
        return FamilySpec{.forbid_c4 = true, .forbid_c5 = true, .forbid_c6 = true};
    if (name == "girth5") return FamilySpec{.girth_min = 5};
    if (name == "clawfree" || name == "claw-free") return FamilySpec{.claw_free = true};
    return std::nullopt;
}

std::string FamilySpec::name() const {
    if (girth_min >= 5) return "girth5";
    std::string forbidden;
    if (forbid_c3) forbidden += "3";
    if (forbid_c4) forbidden += "4";
    if (forbid_c5) forbidden += "5";
    if (forbid_c6) forbidden += "6";
    std::string out;
    if (!forbidden.empty()) out = "c" + forbidden + "free";
    if (claw_free) out += out.empty() ? "clawfree" : "+clawfree";
    return out.empty() ? "general" : out;
}

bool satisfies_family(const Graph& g, const FamilySpec& f) {
    if (f.girth_min > 0 && girth(g) < f.girth_min) return false;
    if (f.forbid_c3 && contains_cycle_len(g, 3)) return false;
    if (f.forbid_c4 && contains_cycle_len(g, 4)) return false;
    if (f.forbid_c5 && contains_cycle_len(g, 5)) return false;
    if (f.forbid_c6 && contains_cycle_len(g, 6)) return false;
    if (f.claw_free && !is_claw_free(g)) return false;
    return true;
}

namespace {

// Upper-triangle column code: segment j holds bits (0,j)..(j-1,j), first bit
// most significant. A graph is canonical when the identity labelling attains
// the lexicographic maximum over all relabelings.
std::vector<std::uint64_t> identity_segments(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> seg(static_cast<std::size_t>(n), 0);
    for (int j = 1; j < n; ++j) {
        std::uint64_t bits = 0;
        for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
        seg[static_cast<std::size_t>(j)] = bits;
    }
    return seg;
}

struct CanonicalSearch {
    const Graph& g;
    const std::vector<std::uint64_t>& identity;
    std::vector<int> pos_to_orig;

    bool larger_exists(int pos, std::uint64_t used) {
        const int n = g.vertex_count();
        if (pos == n) return false;
        for (int u = 0; u < n; ++u) {
            if ((used >> u) & 1) continue;
            std::uint64_t seg = 0;
            for (int i = 0; i < pos; ++i)
                seg = (seg << 1) |
                      (g.has_edge(pos_to_orig[static_cast<std::size_t>(i)], u) ? 1 : 0);
            if (seg > identity[static_cast<std::size_t>(pos)]) return true;
            if (seg < identity[static_cast<std::size_t>(pos)]) continue;
            pos_to_orig[static_cast<std::size_t>(pos)] = u;
            if (larger_exists(pos + 1, used | (std::uint64_t{1} << u))) return true;
        }
        return false;
    }
};

}  // namespace

bool is_canonical(const Graph& g) {
    const std::vector<std::uint64_t> identity = identity_segments(g);
    CanonicalSearch search{g, identity,
                           std::vector<int>(static_cast<std::size_t>(g.vertex_count()), -1)};
    return !search.larger_exists(0, 0);
}

std::vector<std::uint64_t> canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("canonical_code is exhaustive; limited to n <= 10");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> best;
    do {
        std::vector<std::uint64_t> code(static_cast<std::size_t>(n), 0);
        for (int j = 1; j < n; ++j) {
            std::uint64_t bits = 0;
            for (int i = 0; i < j; ++i)
                bits = (bits << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)],
                                                 perm[static_cast<std::size_t>(j)])
                                          ? 1
                                          : 0);
            code[static_cast<std::size_t>(j)] = bits;
        }
        if (best.empty() || code > best) best = std::move(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) best.clear();
    return best;
}

namespace {

bool adds_claw(const Graph& g, int w) {
    // claw with w as centre
    std::vector<int> nb = g.adjacency(w).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (g.has_edge(nb[i], nb[j])) continue;
            for (std::size_t k = j + 1; k < nb.size(); ++k)
                if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return true;
        }
    // claw with w as a tip: centre u, two other tips nonadjacent to w
    for (int u : g.adjacency(w)) {
        std::vector<int> others;
        for (int x : g.adjacency(u))
            if (x != w && !g.has_edge(x, w)) others.push_back(x);
        for (std::size_t i = 0; i < others.size(); ++i)
            for (std::size_t j = i + 1; j < others.size(); ++j)
                if (!g.has_edge(others[i], others[j])) return true;
    }
    return false;
}

bool extension_in_family(const Graph& candidate, int new_vertex, const FamilySpec& f) {
    if ((f.forbid_c3 || f.girth_min >= 4) && vertex_on_cycle_len(candidate, new_vertex, 3))
        return false;
    if ((f.forbid_c4 || f.girth_min >= 5) && vertex_on_cycle_len(candidate, new_vertex, 4))
        return false;
    if (f.forbid_c5 && vertex_on_cycle_len(candidate, new_vertex, 5)) return false;
    if (f.forbid_c6 && vertex_on_cycle_len(candidate, new_vertex, 6)) return false;
    if (f.girth_min > 5) {
        for (int len = 5; len < f.girth_min && len <= 7; ++len)
            if (vertex_on_cycle_len(candidate, new_vertex, len)) return false;
    }
    if (f.claw_free && adds_claw(candidate, new_vertex)) return false;
    return true;
}

void extend(const Graph& g, int n_max, const FamilySpec& family,
            const std::function<void(const Graph&)>& visit) {
    const int k = g.vertex_count();
    if (k >= n_max) return;
    std::vector<Edge> base = g.edges();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Edge> edges = base;
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
            edges.emplace_back(__builtin_ctzll(rest), k);
        Graph candidate(k + 1, edges);
        if (!extension_in_family(candidate, k, family)) continue;
        if (!is_canonical(candidate)) continue;
        visit(candidate);
        extend(candidate, n_max, family, visit);
    }
}

}  // namespace

void enumerate_graphs(int n_max, const FamilySpec& family,
                      const std::function<void(const Graph&)>& visit) {
    if (n_max <= 0) return;
    Graph k1 = empty_graph(1);
    visit(k1);
    extend(k1, n_max, family, visit);
}

std::vector<Graph> connected_graphs_up_to(int n_max, const FamilySpec& family) {
    std::vector<Graph> out;
    enumerate_graphs(n_max, family, [&](const Graph& g) {
        if (g.is_connected()) out.push_back(g);
    });
    return out;
}

bool random_bernoulli(std::mt19937_64& rng, double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    return (rng() >> 11) < threshold;
}

int random_below(std::mt19937_64& rng, int n) {
    if (n <= 0) throw std::invalid_argument("random_below needs a positive bound");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<int>(draw % bound);
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (random_bernoulli(rng, edge_probability)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::optional<Graph> random_graph_in_family(int n, double edge_probability,
                                            const FamilySpec& family, std::mt19937_64& rng,
                                            int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        Graph g = random_graph(n, edge_probability, rng);
        if (satisfies_family(g, family)) return g;
    }
    return std::nullopt;
}

}  // namespace wellcov
