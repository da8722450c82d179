#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov {

/// Positive literal of variable i is {i, false}; its negation {i, true}.
struct Literal {
    int variable = 0;
    bool negated = false;

    auto operator<=>(const Literal&) const = default;
};

struct SatInstance {
    int variable_count = 0;
    std::vector<std::vector<Literal>> clauses;
};

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// DIMACS CNF: "c" comments, "p cnf <vars> <clauses>" header, clauses as
/// 0-terminated signed integers. Tautological clauses, duplicate literals,
/// empty clauses and out-of-range variables are rejected.
SatInstance parse_cnf(std::string_view text);

/// Satisfiable by brute force? Limited to instances with few variables.
bool brute_force_satisfiable(const SatInstance& inst, int max_variables = 12);

struct ReductionOutput {
    Graph gadget;
    int v = 0;                              // the distinguished vertex
    int variable_count = 0;
    std::vector<int> clause_vertices;       // clause index -> vertex
    std::map<std::pair<int, Literal>, int> literal_vertices;
    std::vector<std::pair<int, Literal>> literal_of_vertex_table;  // aligned with literal ids
};

/// Builds the gadget: v adjacent to one vertex per clause, clause vertices
/// adjacent to one vertex per literal occurrence, and every occurrence of a
/// literal adjacent to every occurrence of its negation. The instance is
/// satisfiable iff v is not a shedding vertex of the gadget.
ReductionOutput sat_to_shed(const SatInstance& inst);

using Assignment = std::vector<bool>;  // indexed by variable

/// The occurrence vertices of all literals true under t.
VertexSet assignment_to_witness(const ReductionOutput& out, const Assignment& t);

/// Reads a satisfying assignment back off an independent dominating witness;
/// unmentioned variables default to false. Throws std::invalid_argument when
/// the set is not a valid witness.
Assignment witness_to_assignment(const ReductionOutput& out, const VertexSet& s);

/// Brute-force satisfiability must equal "v is not shedding" on the gadget.
bool verify_reduction(const SatInstance& inst);

}  // namespace wellcov
