#include "wellcov/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wellcov {

Graph::Graph(int n, const std::vector<Edge>& edge_list) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0," +
                                    std::to_string(kMaxVertices) + "]");
    adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (const auto& [u, v] : edge_list) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (adj_[static_cast<std::size_t>(u)].contains(v))
            throw std::invalid_argument("multi-edge " + std::to_string(u) + "-" +
                                        std::to_string(v));
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
        ++m_;
    }
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (v > u) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* to_parent) const {
    std::vector<int> old_ids = keep.to_vector();
    std::array<int, kMaxVertices> new_id{};
    new_id.fill(-1);
    for (std::size_t i = 0; i < old_ids.size(); ++i)
        new_id[static_cast<std::size_t>(old_ids[i])] = static_cast<int>(i);

    std::vector<Edge> es;
    for (int u : old_ids)
        for (int v : adj_[static_cast<std::size_t>(u)] & keep)
            if (v > u) es.emplace_back(new_id[static_cast<std::size_t>(u)],
                                       new_id[static_cast<std::size_t>(v)]);
    if (to_parent) *to_parent = std::move(old_ids);
    return Graph(keep.count(), es);
}

Graph Graph::without_vertex(int v, std::vector<int>* to_parent) const {
    check_vertex(v);
    VertexSet keep = vertices();
    keep.remove(v);
    return induced(keep, to_parent);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    VertexSet seen = VertexSet::of(n_, {0});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(n_);
        for (int u : frontier) next |= adj_[static_cast<std::size_t>(u)];
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen == vertices();
}

VertexSet neighborhood(const Graph& g, int v, NeighborhoodKind kind) {
    g.check_vertex(v);
    const VertexSet& open = g.adjacency(v);
    switch (kind) {
        case NeighborhoodKind::open:
            return open;
        case NeighborhoodKind::closed: {
            VertexSet s = open;
            s.add(v);
            return s;
        }
        case NeighborhoodKind::second: {
            VertexSet reach(g.vertex_count());
            for (int u : open) reach |= g.adjacency(u);
            VertexSet closed = open;
            closed.add(v);
            return reach - closed;
        }
    }
    throw std::invalid_argument("bad neighborhood kind");
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    for (int v : s) out |= g.adjacency(v);
    return out;
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    return closed_neighborhood(g, s) - s;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t) {
    return t.is_subset_of(closed_neighborhood(g, s));
}

namespace {

// Walks simple paths from `root` inside `allowed`; closing back to root after
// `remaining` more steps witnesses a cycle.
bool cycle_dfs(const Graph& g, int root, int current, VertexSet visited, int remaining,
               const VertexSet& allowed) {
    if (remaining == 0) return g.has_edge(current, root);
    for (int w : (g.adjacency(current) & allowed) - visited) {
        VertexSet next = visited;
        next.add(w);
        if (cycle_dfs(g, root, w, next, remaining - 1, allowed)) return true;
    }
    return false;
}

void check_cycle_len_arg(int k) {
    if (k < 3 || k > 7)
        throw std::invalid_argument("cycle length " + std::to_string(k) +
                                    " unsupported (want 3..7)");
}

}  // namespace

bool contains_cycle_len(const Graph& g, int k) {
    check_cycle_len_arg(k);
    const int n = g.vertex_count();
    // Each cycle is found once, from its minimum vertex: the rest stay above root.
    VertexSet allowed = VertexSet::full(n);
    for (int root = 0; root + k <= n; ++root) {
        VertexSet visited = VertexSet::of(n, {root});
        if (cycle_dfs(g, root, root, visited, k - 1, allowed)) return true;
        allowed.remove(root);
    }
    return false;
}

bool vertex_on_cycle_len(const Graph& g, int v, int k) {
    check_cycle_len_arg(k);
    g.check_vertex(v);
    VertexSet visited = VertexSet::of(g.vertex_count(), {v});
    return cycle_dfs(g, v, v, visited, k - 1, VertexSet::full(g.vertex_count()));
}

int girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = kGirthInfinity;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        int head = 0, tail = 0;
        dist[static_cast<std::size_t>(root)] = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            if (2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (int w : g.adjacency(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue[tail++] = w;
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                              dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    return best;
}

bool is_simplicial(const Graph& g, int v) {
    const VertexSet nv = g.adjacency(v);
    for (int u : nv) {
        VertexSet missing = nv - g.adjacency(u);
        missing.remove(u);
        if (!missing.empty()) return false;
    }
    return true;
}

bool is_claw_free(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb = g.adjacency(v).to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

namespace {

bool isomorphism_dfs(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                     VertexSet used_b, int next_a) {
    const int n = a.vertex_count();
    if (next_a == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used_b.contains(w)) continue;
        if (a.degree(next_a) != b.degree(w)) continue;
        bool ok = true;
        for (int prev = 0; prev < next_a && ok; ++prev)
            if (a.has_edge(prev, next_a) != b.has_edge(map_ab[static_cast<std::size_t>(prev)], w))
                ok = false;
        if (!ok) continue;
        map_ab[static_cast<std::size_t>(next_a)] = w;
        VertexSet used = used_b;
        used.add(w);
        if (isomorphism_dfs(a, b, map_ab, used, next_a + 1)) return true;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();
    std::vector<int> da, db;
    for (int v = 0; v < n; ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    std::vector<int> map_ab(static_cast<std::size_t>(n), -1);
    return isomorphism_dfs(a, b, map_ab, VertexSet(n), 0);
}

bool is_isomorphic_small(const Graph& g, SmallGraph target) {
    return are_isomorphic(g, small_graph(target));
}

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

Graph small_graph(SmallGraph which) {
    switch (which) {
        case SmallGraph::K1: return empty_graph(1);
        case SmallGraph::K2: return complete_graph(2);
        case SmallGraph::P3: return path_graph(3);
        case SmallGraph::C5: return cycle_graph(5);
        case SmallGraph::C7: return cycle_graph(7);
    }
    throw std::invalid_argument("bad small graph tag");
}

}  // namespace wellcov
