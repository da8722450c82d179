#include "wellcov/maxflow.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace wellcov {

FlowNetwork build_shedding_network(const Graph& g, int v) {
    g.check_vertex(v);
    const VertexSet nv = neighborhood(g, v, NeighborhoodKind::open);
    const VertexSet n2 = neighborhood(g, v, NeighborhoodKind::second);

    FlowNetwork net;
    net.graph_width = g.vertex_count();
    net.source = 0;

    std::array<int, kMaxVertices> node_of{};
    node_of.fill(-1);
    net.graph_vertex_of_node.push_back(-1);  // s
    for (int u : nv) {
        node_of[static_cast<std::size_t>(u)] = static_cast<int>(net.graph_vertex_of_node.size());
        net.first_layer_nodes.push_back(static_cast<int>(net.graph_vertex_of_node.size()));
        net.graph_vertex_of_node.push_back(u);
    }
    for (int z : n2) {
        node_of[static_cast<std::size_t>(z)] = static_cast<int>(net.graph_vertex_of_node.size());
        net.second_layer_nodes.push_back(static_cast<int>(net.graph_vertex_of_node.size()));
        net.graph_vertex_of_node.push_back(z);
    }

    // Components of G[N2(v)], discovered in ascending order of least vertex.
    std::array<int, kMaxVertices> component_of{};
    component_of.fill(-1);
    int component_count = 0;
    VertexSet pending = n2;
    while (!pending.empty()) {
        int start = pending.lowest();
        VertexSet comp = VertexSet::of(g.vertex_count(), {start});
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(g.vertex_count());
            for (int u : frontier) next |= g.adjacency(u) & n2;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        if (comp.count() > 2)
            throw std::logic_error("component of N2(v) larger than 2; graph violates the "
                                   "C4/C6-free structure");
        for (int z : comp) component_of[static_cast<std::size_t>(z)] = component_count;
        pending -= comp;
        ++component_count;
    }
    for (int i = 0; i < component_count; ++i) {
        net.component_nodes.push_back(static_cast<int>(net.graph_vertex_of_node.size()));
        net.graph_vertex_of_node.push_back(-1);
    }
    net.sink = static_cast<int>(net.graph_vertex_of_node.size());
    net.graph_vertex_of_node.push_back(-1);  // t
    net.node_count = static_cast<int>(net.graph_vertex_of_node.size());

    for (int node : net.first_layer_nodes) net.arcs.push_back({net.source, node});
    for (int u : nv)
        for (int z : g.adjacency(u) & n2)
            net.arcs.push_back({node_of[static_cast<std::size_t>(u)],
                                node_of[static_cast<std::size_t>(z)]});
    for (int z : n2) {
        if ((g.adjacency(z) & nv).count() != 1)
            throw std::logic_error("N2(v) vertex with neighbour count in N(v) != 1; graph "
                                   "violates the C4-free structure");
        net.arcs.push_back({node_of[static_cast<std::size_t>(z)],
                            net.component_nodes[static_cast<std::size_t>(
                                component_of[static_cast<std::size_t>(z)])]});
    }
    for (int node : net.component_nodes) net.arcs.push_back({node, net.sink});
    return net;
}

FlowResult max_flow(const FlowNetwork& net) {
    const int nodes = net.node_count;
    const std::size_t arc_count = net.arcs.size();

    // Residual graph as arc indices: arc i forward when flow 0, backward when 1.
    std::vector<std::vector<int>> out_arcs(static_cast<std::size_t>(nodes));
    std::vector<std::vector<int>> in_arcs(static_cast<std::size_t>(nodes));
    for (std::size_t i = 0; i < arc_count; ++i) {
        out_arcs[static_cast<std::size_t>(net.arcs[i].from)].push_back(static_cast<int>(i));
        in_arcs[static_cast<std::size_t>(net.arcs[i].to)].push_back(static_cast<int>(i));
    }

    std::vector<int> flow(arc_count, 0);
    FlowResult result;
    result.positive_flow_vertices = VertexSet(net.graph_width);

    while (true) {
        // BFS for a shortest augmenting path; neighbours are scanned in
        // ascending node id for a deterministic outcome.
        std::vector<int> via_arc(static_cast<std::size_t>(nodes), -1);
        std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
        std::vector<int> queue{net.source};
        seen[static_cast<std::size_t>(net.source)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            std::vector<std::pair<int, int>> steps;  // (next node, arc index)
            for (int i : out_arcs[static_cast<std::size_t>(u)])
                if (flow[static_cast<std::size_t>(i)] == 0)
                    steps.emplace_back(net.arcs[static_cast<std::size_t>(i)].to, i);
            for (int i : in_arcs[static_cast<std::size_t>(u)])
                if (flow[static_cast<std::size_t>(i)] == 1)
                    steps.emplace_back(net.arcs[static_cast<std::size_t>(i)].from, i);
            std::sort(steps.begin(), steps.end());
            for (const auto& [w, arc] : steps) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                via_arc[static_cast<std::size_t>(w)] = arc;
                queue.push_back(w);
            }
        }
        if (!seen[static_cast<std::size_t>(net.sink)]) break;

        int u = net.sink;
        while (u != net.source) {
            int arc = via_arc[static_cast<std::size_t>(u)];
            if (net.arcs[static_cast<std::size_t>(arc)].to == u) {
                flow[static_cast<std::size_t>(arc)] = 1;
                u = net.arcs[static_cast<std::size_t>(arc)].from;
            } else {
                flow[static_cast<std::size_t>(arc)] = 0;
                u = net.arcs[static_cast<std::size_t>(arc)].to;
            }
        }
        ++result.value;
    }

    result.arc_flows = flow;
    for (std::size_t i = 0; i < arc_count; ++i) {
        if (flow[i] == 0) continue;
        int gv = net.graph_vertex_of_node[static_cast<std::size_t>(net.arcs[i].to)];
        bool to_second = std::find(net.second_layer_nodes.begin(), net.second_layer_nodes.end(),
                                   net.arcs[i].to) != net.second_layer_nodes.end();
        if (to_second && gv >= 0) result.positive_flow_vertices.add(gv);
    }
    return result;
}

}  // namespace wellcov
