#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wellcov/graph.hpp"
#include "wellcov/reduction.hpp"  // parse_error

namespace wellcov {

enum class GraphFormat { edge_list, graph6, dimacs };

struct GraphDocument {
    Graph graph;
    std::vector<std::string> labels;  // empty when labels are just the ids
    GraphFormat format = GraphFormat::edge_list;
};

const char* format_name(GraphFormat f);
std::optional<GraphFormat> format_from_name(std::string_view name);

/// Edge list: one "u v" pair per line, optional "n <count>" header line,
/// "#" comments. Vertices are 0-based.
GraphDocument parse_edge_list(std::string_view text);

/// Standard graph6 (single line, printable ASCII).
GraphDocument parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// DIMACS graph: "c" comments, "p edge <n> <m>", then "e u v" with 1-based ids.
GraphDocument parse_dimacs_graph(std::string_view text);

GraphDocument parse_graph(std::string_view text, GraphFormat format);
/// Sniffs the format: ">>graph6<<" prefix or a plausible graph6 line, a
/// DIMACS "p edge" header, otherwise edge list.
GraphDocument parse_graph_auto(std::string_view text);

std::string encode_edge_list(const Graph& g);
std::string encode_dimacs_graph(const Graph& g);
std::string encode_graph(const Graph& g, GraphFormat format);

}  // namespace wellcov
