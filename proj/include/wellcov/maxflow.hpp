#pragma once

#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov {

// Unit-capacity layered network for the C4/C6-free shedding test:
// s -> N(v) -> N2(v) -> component nodes -> t.
struct FlowNetwork {
    struct Arc {
        int from;
        int to;
    };

    int node_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;                 // all capacities are 1
    std::vector<int> graph_vertex_of_node; // -1 for s, t and component nodes
    std::vector<int> first_layer_nodes;    // N(v)
    std::vector<int> second_layer_nodes;   // N2(v)
    std::vector<int> component_nodes;      // a_1..a_k
    int graph_width = 0;
};

struct FlowResult {
    int value = 0;
    VertexSet positive_flow_vertices;  // S_v, in graph coordinates
    std::vector<int> arc_flows;        // parallel to FlowNetwork::arcs
};

/// Builds the shedding network for v. Preconditions (no C4, no C6) are the
/// caller's; the structural consequences (each N2 vertex has exactly one
/// neighbour in N(v), each component of G[N2(v)] has at most 2 vertices) are
/// asserted here and throw std::logic_error if violated.
FlowNetwork build_shedding_network(const Graph& g, int v);

/// Breadth-first augmenting paths with lowest-node-id tie-break, so the
/// resulting S_v is deterministic.
FlowResult max_flow(const FlowNetwork& net);

}  // namespace wellcov
