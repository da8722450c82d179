#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wellcov {

// Single machine word per adjacency row; exhaustive suites stay far below this.
inline constexpr int kMaxVertices = 64;

// Sentinel returned by girth() for forests.
inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();

/// Subset of the vertices of a fixed-width graph, stored as one 64-bit word.
/// Iteration order is ascending vertex id.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int width, std::uint64_t bits = 0) : bits_(bits), width_(width) {
        assert(width >= 0 && width <= kMaxVertices);
        assert(width == kMaxVertices || (bits >> width) == 0);
    }

    static VertexSet full(int width) {
        return VertexSet(width, width == kMaxVertices ? ~std::uint64_t{0}
                                                      : ((std::uint64_t{1} << width) - 1));
    }
    static VertexSet of(int width, std::initializer_list<int> vs) {
        VertexSet s(width);
        for (int v : vs) s.add(v);
        return s;
    }

    int width() const { return width_; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int v) const {
        assert(v >= 0 && v < width_);
        return (bits_ >> v) & 1;
    }
    VertexSet& add(int v) {
        assert(v >= 0 && v < width_);
        bits_ |= std::uint64_t{1} << v;
        return *this;
    }
    VertexSet& remove(int v) {
        assert(v >= 0 && v < width_);
        bits_ &= ~(std::uint64_t{1} << v);
        return *this;
    }

    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcountll(bits_); }
    int lowest() const { return bits_ == 0 ? -1 : __builtin_ctzll(bits_); }

    bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }
    bool is_subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

    VertexSet operator|(const VertexSet& o) const { return with(bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return with(bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return with(bits_ & ~o.bits_); }
    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(const VertexSet& o) { bits_ &= ~o.bits_; return *this; }

    VertexSet complemented() const { return with(full(width_).bits_ & ~bits_); }

    bool operator==(const VertexSet& o) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
        return out;
    }

    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return __builtin_ctzll(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    VertexSet with(std::uint64_t bits) const { return VertexSet(width_, bits); }

    std::uint64_t bits_ = 0;
    int width_ = 0;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
/// Construction rejects loops, multi-edges and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }
    const VertexSet& adjacency(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const { return adjacency(v).count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    /// Canonical sorted edge list (u < v, lexicographic).
    std::vector<Edge> edges() const;

    /// Induced subgraph on `keep`; vertices renumbered ascending. If
    /// `to_parent` is given it receives new-id -> old-id.
    Graph induced(const VertexSet& keep, std::vector<int>* to_parent = nullptr) const;
    Graph without_vertex(int v, std::vector<int>* to_parent = nullptr) const;

    bool is_connected() const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                        std::to_string(n_) + ")");
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

enum class NeighborhoodKind { open, closed, second };

VertexSet neighborhood(const Graph& g, int v, NeighborhoodKind kind);
/// N[S] = union of closed neighborhoods over S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
/// N(S) = N[S] \ S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// S dominates T iff T is contained in N[S].
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Does G contain a cycle of length exactly k as a subgraph? k must be in 3..7.
bool contains_cycle_len(const Graph& g, int k);
/// Same, restricted to cycles through v. Used for incremental family checks.
bool vertex_on_cycle_len(const Graph& g, int v, int k);

/// Minimal cycle length; kGirthInfinity for forests.
int girth(const Graph& g);

bool is_simplicial(const Graph& g, int v);
bool is_claw_free(const Graph& g);

enum class SmallGraph { K1, K2, P3, C5, C7 };

bool is_isomorphic_small(const Graph& g, SmallGraph target);
/// Exhaustive isomorphism test; intended for small graphs only (n <= 10).
bool are_isomorphic(const Graph& a, const Graph& b);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph small_graph(SmallGraph which);

}  // namespace wellcov
