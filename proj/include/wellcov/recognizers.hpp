#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wellcov/certificates.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

/// Thrown when an input violates a recognizer's family gate; the message
/// names the violated condition.
class family_error : public std::runtime_error {
public:
    explicit family_error(const std::string& what) : std::runtime_error(what) {}
};

/// Gate a recognizer enforces before answering. Gates are re-checked, never
/// trusted: a violating input gets a family_error instead of an answer.
struct FamilyGate {
    bool forbid_c3 = false;
    bool forbid_c4 = false;
    bool forbid_c5 = false;
    bool forbid_c6 = false;
    bool claw_free = false;
    int girth_min = 0;  // 0 = unconstrained
    bool well_covered_required = false;
    bool connected_required = false;
};

void require_gate(const Graph& g, const FamilyGate& gate, const char* who);

// --- Shedding -------------------------------------------------------------

/// C5-free graphs: v is shedding iff N2(v) does not dominate N(v).
Verdict shed_c5free(const Graph& g, int v);

/// Pluggable maximum-weight-independent-set solver. The default is brute
/// force; a polynomial claw-free solver can be slotted in without touching
/// shed_clawfree.
using MwisSolver = std::function<VertexSet(const Graph&, std::span<const long long>)>;

VertexSet mwis_brute_force(const Graph& g, std::span<const long long> weights);
VertexSet mwis(const Graph& g, std::span<const long long> weights,
               const MwisSolver& solver = {});

/// Claw-free graphs: weight x in N2(v) by |N(x) cap N(v)|; v is shedding iff
/// the maximum weight independent set of G[N2(v)] weighs less than |N(v)|.
Verdict shed_clawfree(const Graph& g, int v, const MwisSolver& solver = {});

/// C4/C6-free graphs: unit-capacity max flow on the layered network; v is
/// shedding iff the flow value falls short of |N(v)|.
Verdict shed_c46free(const Graph& g, int v);

// --- Girth >= 5 and the PC family ------------------------------------------

struct PCPartition {
    VertexSet p;
    VertexSet c;
    std::vector<Edge> pendant_edges;
    std::vector<std::array<int, 5>> basic_cycles;
};

std::optional<PCPartition> find_pc_partition(const Graph& g);
bool verify_pc_partition(const Graph& g, const PCPartition& pc);
Verdict recognize_pc_family(const Graph& g);

/// Connected well-covered graphs with girth >= 5 (well-coveredness is the
/// caller's attestation). Not in PC means no vertex is shedding; otherwise a
/// leaf is never shedding, a stem always is, a cycle vertex of degree >= 3
/// always is, and a degree-2 cycle vertex with N(v) = {v1, v2} is shedding
/// exactly when N({v1,v2}) stays inside its basic cycle.
Verdict shed_girth5_wc(const Graph& g, int v);

// --- Bounded independence number -------------------------------------------

Verdict wc_bounded_alpha(const Graph& g, int k);
Verdict shed_bounded_alpha(const Graph& g, int v, int k);
Verdict w2_bounded_alpha(const Graph& g, int k);

// --- Hereditary compositions -----------------------------------------------

using WellCoveredCheck = std::function<Verdict(const Graph&)>;
using SheddingCheck = std::function<Verdict(const Graph&, int)>;

/// G in W2 iff G is not P3, has no isolated vertex, and every vertex-deleted
/// subgraph is well-covered. Sound whenever wc_check is sound on the
/// vertex-deleted subgraphs.
Verdict w2_via_vertex_deletion(const Graph& g, const WellCoveredCheck& wc_check);

/// For well-covered G: G in W2 iff it has no isolated vertex and every vertex
/// is shedding.
Verdict w2_via_shedding(const Graph& g, const SheddingCheck& shed_check);

// --- Family-specific W2 recognizers ----------------------------------------

Verdict w2_girth5(const Graph& g);
Verdict w2_c3c5free(const Graph& g);

struct TrianglePartition {
    std::vector<std::array<int, 3>> triples;
};

std::optional<TrianglePartition> find_triangle_partition(const Graph& g);
bool verify_triangle_partition(const Graph& g, const TrianglePartition& tp);
Verdict w2_c45free(const Graph& g);

/// C4/C5/C6-free, disjoint neighbourhoods, both degrees >= 2: the edge is
/// relating iff neither endpoint is shedding.
Verdict relating_via_shedding(const Graph& g, int x, int y);

// --- Routing ----------------------------------------------------------------

struct DispatchResult {
    Verdict verdict;
    std::string algorithm;
};

/// Picks the most restrictive applicable W2 recognizer, falling back to the
/// oracle for small graphs. `oracle_cap` bounds where exponential checks may
/// run. Throws family_error when nothing applies.
DispatchResult dispatch_w2(const Graph& g, int oracle_cap = 12);

}  // namespace wellcov
