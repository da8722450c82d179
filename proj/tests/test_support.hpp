#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov::testing {

// Brute-force cycle detection independent of the DFS in graph-core: tries
// every injective vertex sequence of length k starting at its minimum member.
inline bool brute_has_cycle(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::vector<int> seq;
    std::function<bool(int)> extend = [&](int root) -> bool {
        if (static_cast<int>(seq.size()) == k)
            return g.has_edge(seq.back(), root);
        for (int w = 0; w < n; ++w) {
            if (w <= root) continue;
            if (std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
            if (!g.has_edge(seq.back(), w)) continue;
            seq.push_back(w);
            if (extend(root)) return true;
            seq.pop_back();
        }
        return false;
    };
    for (int root = 0; root < n; ++root) {
        seq = {root};
        if (extend(root)) return true;
    }
    return false;
}

// Naive maximal-independent-set listing by filtering all subsets.
inline std::vector<std::uint64_t> brute_maximal_independent_sets(const Graph& g) {
    const int n = g.vertex_count();
    auto independent = [&](std::uint64_t mask) {
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1 && (g.adjacency(v).bits() & mask)) return false;
        return true;
    };
    std::vector<std::uint64_t> all;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        if (independent(mask)) all.push_back(mask);
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t mask : all) {
        bool is_max = true;
        for (std::uint64_t other : all)
            if (other != mask && (mask & ~other) == 0) is_max = false;
        if (is_max) maximal.push_back(mask);
    }
    return maximal;
}

inline std::set<std::uint64_t> as_mask_set(const std::vector<VertexSet>& sets) {
    std::set<std::uint64_t> out;
    for (const VertexSet& s : sets) out.insert(s.bits());
    return out;
}

// Fixture graphs used across the suites.

// Two triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangles_bridge() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

}  // namespace wellcov::testing
