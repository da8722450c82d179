#include "wellcov/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "wellcov/oracle.hpp"

namespace wellcov {

SatInstance parse_cnf(std::string_view text) {
    SatInstance inst;
    int declared_clauses = -1;
    bool header_seen = false;
    std::vector<Literal> current;
    bool clause_open = false;

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tok;
        if (!(tokens >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            if (header_seen) throw parse_error(line_no, "duplicate header");
            std::string kind;
            if (!(tokens >> kind) || kind != "cnf")
                throw parse_error(line_no, "malformed header: expected 'p cnf <vars> <clauses>'");
            if (!(tokens >> inst.variable_count >> declared_clauses) ||
                inst.variable_count < 0 || declared_clauses < 0)
                throw parse_error(line_no, "malformed header counts");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw parse_error(line_no, "clause before 'p cnf' header");
        // push the first token back through the literal path
        do {
            int lit;
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parse_error(line_no, "bad token '" + tok + "'");
            }
            if (lit == 0) {
                if (!clause_open) throw parse_error(line_no, "empty clause");
                inst.clauses.push_back(current);
                current.clear();
                clause_open = false;
                continue;
            }
            const int var = std::abs(lit) - 1;
            if (var >= inst.variable_count)
                throw parse_error(line_no, "literal " + std::to_string(lit) + " out of range");
            Literal literal{var, lit < 0};
            for (const Literal& prev : current) {
                if (prev == literal)
                    throw parse_error(line_no, "duplicate literal in clause");
                if (prev.variable == var)
                    throw parse_error(line_no, "tautological clause (variable " +
                                                   std::to_string(var + 1) +
                                                   " and its negation)");
            }
            current.push_back(literal);
            clause_open = true;
        } while (tokens >> tok);
    }
    if (clause_open) throw parse_error(line_no, "unterminated clause");
    if (!header_seen) throw parse_error(line_no, "missing 'p cnf' header");
    if (static_cast<int>(inst.clauses.size()) != declared_clauses)
        throw parse_error(line_no, "clause count " + std::to_string(inst.clauses.size()) +
                                       " does not match header " +
                                       std::to_string(declared_clauses));
    return inst;
}

namespace {

bool literal_true(const Literal& l, const Assignment& t) {
    return t[static_cast<std::size_t>(l.variable)] != l.negated;
}

bool satisfies(const SatInstance& inst, const Assignment& t) {
    for (const auto& clause : inst.clauses) {
        bool any = false;
        for (const Literal& l : clause)
            if (literal_true(l, t)) any = true;
        if (!any) return false;
    }
    return true;
}

}  // namespace

bool brute_force_satisfiable(const SatInstance& inst, int max_variables) {
    if (inst.variable_count > max_variables)
        throw std::invalid_argument("instance exceeds the brute-force variable limit");
    const std::uint64_t total = std::uint64_t{1} << inst.variable_count;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Assignment t(static_cast<std::size_t>(inst.variable_count));
        for (int i = 0; i < inst.variable_count; ++i) t[static_cast<std::size_t>(i)] = (bits >> i) & 1;
        if (satisfies(inst, t)) return true;
    }
    return false;
}

ReductionOutput sat_to_shed(const SatInstance& inst) {
    const int m = static_cast<int>(inst.clauses.size());

    ReductionOutput out;
    out.v = 0;
    out.variable_count = inst.variable_count;
    int next = 1;
    for (int i = 0; i < m; ++i) out.clause_vertices.push_back(next++);
    for (int i = 0; i < m; ++i) {
        std::vector<Literal> sorted = inst.clauses[static_cast<std::size_t>(i)];
        std::sort(sorted.begin(), sorted.end());
        for (const Literal& l : sorted) {
            out.literal_vertices[{i, l}] = next++;
            out.literal_of_vertex_table.emplace_back(i, l);
        }
    }

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(out.v, out.clause_vertices[static_cast<std::size_t>(i)]);
        for (const auto& [key, u] : out.literal_vertices)
            if (key.first == i)
                edges.emplace_back(out.clause_vertices[static_cast<std::size_t>(i)], u);
    }
    for (const auto& [key_a, u_a] : out.literal_vertices)
        for (const auto& [key_b, u_b] : out.literal_vertices) {
            if (u_a >= u_b) continue;
            if (key_a.second.variable == key_b.second.variable &&
                key_a.second.negated != key_b.second.negated)
                edges.emplace_back(u_a, u_b);
        }

    out.gadget = Graph(next, edges);
    return out;
}

VertexSet assignment_to_witness(const ReductionOutput& out, const Assignment& t) {
    VertexSet s(out.gadget.vertex_count());
    for (const auto& [key, u] : out.literal_vertices)
        if (literal_true(key.second, t)) s.add(u);
    return s;
}

Assignment witness_to_assignment(const ReductionOutput& out, const VertexSet& s) {
    const int literal_base = 1 + static_cast<int>(out.clause_vertices.size());
    for (int u : s)
        if (u < literal_base)
            throw std::invalid_argument("witness contains a non-literal vertex");
    if (!is_independent(out.gadget, s))
        throw std::invalid_argument("witness is not independent");
    VertexSet clause_nodes(out.gadget.vertex_count());
    for (int u : out.clause_vertices) clause_nodes.add(u);
    if (!dominates(out.gadget, s, clause_nodes))
        throw std::invalid_argument("witness does not dominate the clause vertices");

    Assignment t(static_cast<std::size_t>(out.variable_count), false);
    for (int u : s) {
        const Literal& literal =
            out.literal_of_vertex_table[static_cast<std::size_t>(u - literal_base)].second;
        t[static_cast<std::size_t>(literal.variable)] = !literal.negated;
    }
    return t;
}

bool verify_reduction(const SatInstance& inst) {
    const bool sat = brute_force_satisfiable(inst);
    const ReductionOutput out = sat_to_shed(inst);
    const bool non_shedding = !is_shedding_oracle(out.gadget, out.v).answer;
    return sat == non_shedding;
}

}  // namespace wellcov
