#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "wellcov/certificates.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

// ---------------------------------------------------------------------------
// Exponential-time definitional checkers. These are the ground truth the
// polynomial recognizers are validated against; everything here is a pure
// function of an immutable graph.
// ---------------------------------------------------------------------------

bool is_independent(const Graph& g, const VertexSet& s);
/// Maximal independent <=> independent and dominating V(G).
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// Visits each maximal independent set exactly once (pivoted recursion over
/// bitsets). Return false from the visitor to stop early.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

int independence_number(const Graph& g);
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

/// All independent sets as bitmasks, ascending by numeric value.
std::vector<std::uint64_t> independent_set_masks(const Graph& g);

/// Greedy lowest-id-first maximal independent set of the induced subgraph on
/// `within`, returned in parent coordinates.
VertexSet greedy_maximal_independent_in(const Graph& g, const VertexSet& within);

Verdict is_well_covered_oracle(const Graph& g);
Verdict is_shedding_oracle(const Graph& g, int v);
Verdict is_w2_oracle(const Graph& g);
Verdict is_relating_oracle(const Graph& g, int x, int y);

/// Two disjoint maximum independent sets? Internally also runs the exhaustive
/// matching search (a matching M of size alpha(G) with G[V(M)] bipartite) and
/// throws std::logic_error if the two searches ever disagree.
Verdict disjoint_max_independent_sets(const Graph& g);

/// Exhaustive search for a matching M with |M| = alpha and G[V(M)] bipartite.
std::optional<MatchingCert> find_alpha_matching_bipartite(const Graph& g);
/// Is there A subseteq V with G \ A bipartite and perfectly matched by alpha edges?
bool exists_bipartite_alpha_deletion(const Graph& g);

/// For every vertex v and every maximal independent set S of G \ N[v], the
/// subgraph induced on N(v) \ N(S) has independence number exactly 1.
Verdict w2_alpha_condition(const Graph& g);

// Independent re-checks for emitted certificates.
bool verify_non_shedding_witness(const Graph& g, int v, const VertexSet& s);
bool verify_not_well_covered_witness(const Graph& g, const VertexSet& s);
bool verify_relating_witness(const Graph& g, int x, int y, const VertexSet& s);
bool verify_disjoint_maximum_pair(const Graph& g, const VertexSet& a, const VertexSet& b);
bool verify_unextendable_pair(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace wellcov
