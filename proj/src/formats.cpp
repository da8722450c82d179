#include "wellcov/formats.hpp"

#include <algorithm>
#include <sstream>

namespace wellcov {

const char* format_name(GraphFormat f) {
    switch (f) {
        case GraphFormat::edge_list: return "edge-list";
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::dimacs: return "dimacs";
    }
    return "?";
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "edge-list" || name == "edgelist") return GraphFormat::edge_list;
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "dimacs" || name == "dimacs-graph") return GraphFormat::dimacs;
    return std::nullopt;
}

namespace {

int parse_int_token(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw parse_error(line_no, "bad integer '" + tok + "'");
    }
}

Graph build_graph(int n, const std::vector<Edge>& edges, int line_no) {
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    }
}

}  // namespace

GraphDocument parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<int> declared_n;
    std::vector<Edge> edges;
    int max_seen = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string a, b, extra;
        if (!(tokens >> a)) continue;
        if (a == "n") {
            if (!(tokens >> b)) throw parse_error(line_no, "header needs a count");
            if (declared_n) throw parse_error(line_no, "duplicate 'n' header");
            declared_n = parse_int_token(b, line_no);
            if (*declared_n < 0) throw parse_error(line_no, "negative vertex count");
            continue;
        }
        if (!(tokens >> b)) throw parse_error(line_no, "expected 'u v'");
        if (tokens >> extra) throw parse_error(line_no, "trailing token '" + extra + "'");
        int u = parse_int_token(a, line_no);
        int v = parse_int_token(b, line_no);
        if (u < 0 || v < 0) throw parse_error(line_no, "negative vertex id");
        max_seen = std::max({max_seen, u, v});
        edges.emplace_back(u, v);
    }
    int n = declared_n.value_or(max_seen + 1);
    if (max_seen >= n)
        throw parse_error(line_no, "vertex " + std::to_string(max_seen) +
                                       " exceeds declared count " + std::to_string(n));
    return GraphDocument{build_graph(n, edges, line_no), {}, GraphFormat::edge_list};
}

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string strip_graph6(std::string_view text) {
    std::string s(text);
    if (s.starts_with(kGraph6Header)) s.erase(0, kGraph6Header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    return s;
}

}  // namespace

GraphDocument parse_graph6(std::string_view text) {
    const std::string s = strip_graph6(text);
    if (s.empty()) throw parse_error(1, "empty graph6 input");
    for (char c : s)
        if (c < 63 || c > 126) throw parse_error(1, "graph6 byte out of range");

    std::size_t pos = 0;
    long n;
    if (s[0] != 126) {
        n = s[0] - 63;
        pos = 1;
    } else {
        if (s.size() >= 2 && s[1] == 126)
            throw parse_error(1, "graph6 sizes above 258047 are not supported");
        if (s.size() < 4) throw parse_error(1, "truncated graph6 size");
        n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw parse_error(1, "graph on " + std::to_string(n) + " vertices exceeds the " +
                                 std::to_string(kMaxVertices) + "-vertex limit");

    const long bit_count = n * (n - 1) / 2;
    const long byte_count = (bit_count + 5) / 6;
    if (static_cast<long>(s.size()) - static_cast<long>(pos) != byte_count)
        throw parse_error(1, "graph6 body length mismatch");

    std::vector<Edge> edges;
    long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    for (long b = bit; b < byte_count * 6; ++b) {
        int byte = s[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw parse_error(1, "nonzero graph6 padding");
    }
    return GraphDocument{build_graph(static_cast<int>(n), edges, 1), {}, GraphFormat::graph6};
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                used = 0;
            }
        }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

GraphDocument parse_dimacs_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1, declared_m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (n >= 0) throw parse_error(line_no, "duplicate header");
            std::string kind;
            if (!(tokens >> kind) || kind != "edge")
                throw parse_error(line_no, "expected 'p edge <n> <m>'");
            if (!(tokens >> n >> declared_m) || n < 0 || declared_m < 0)
                throw parse_error(line_no, "malformed header counts");
            continue;
        }
        if (tok == "e") {
            if (n < 0) throw parse_error(line_no, "edge before 'p edge' header");
            std::string a, b;
            if (!(tokens >> a >> b)) throw parse_error(line_no, "expected 'e u v'");
            int u = parse_int_token(a, line_no);
            int v = parse_int_token(b, line_no);
            if (u < 1 || v < 1 || u > n || v > n)
                throw parse_error(line_no, "vertex outside 1.." + std::to_string(n));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw parse_error(line_no, "unknown line type '" + tok + "'");
    }
    if (n < 0) throw parse_error(line_no, "missing 'p edge' header");
    if (static_cast<int>(edges.size()) != declared_m)
        throw parse_error(line_no, "edge count " + std::to_string(edges.size()) +
                                       " does not match header " + std::to_string(declared_m));
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return GraphDocument{build_graph(n, edges, line_no), std::move(labels),
                         GraphFormat::dimacs};
}

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::graph6: return parse_graph6(text);
        case GraphFormat::dimacs: return parse_dimacs_graph(text);
    }
    throw std::invalid_argument("bad graph format");
}

GraphDocument parse_graph_auto(std::string_view text) {
    if (text.starts_with(kGraph6Header)) return parse_graph6(text);
    std::istringstream in{std::string(text)};
    std::string first;
    while (std::getline(in, first)) {
        if (first.empty()) continue;
        std::istringstream tokens(first);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "p" || tok == "c" || tok == "e") return parse_dimacs_graph(text);
        if (tok == "n" || tok[0] == '#' || (std::isdigit(static_cast<unsigned char>(tok[0])) &&
                                            first.find(' ') != std::string::npos))
            return parse_edge_list(text);
        return parse_graph6(text);
    }
    return parse_edge_list(text);  // empty input: empty graph
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string encode_dimacs_graph(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string encode_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::edge_list: return encode_edge_list(g);
        case GraphFormat::graph6: return encode_graph6(g) + "\n";
        case GraphFormat::dimacs: return encode_dimacs_graph(g);
    }
    throw std::invalid_argument("bad graph format");
}

}  // namespace wellcov
