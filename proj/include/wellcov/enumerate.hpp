#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov {

/// Forbidden-structure family description used by generation and routing.
struct FamilySpec {
    bool forbid_c3 = false;
    bool forbid_c4 = false;
    bool forbid_c5 = false;
    bool forbid_c6 = false;
    bool claw_free = false;
    int girth_min = 0;

    static std::optional<FamilySpec> from_name(const std::string& name);
    std::string name() const;
};

bool satisfies_family(const Graph& g, const FamilySpec& f);

/// True when the identity labelling achieves the maximum upper-triangle
/// column code over all permutations.
bool is_canonical(const Graph& g);

/// The maximum code itself, one column segment per entry; equal codes mean
/// isomorphic graphs.
std::vector<std::uint64_t> canonical_code(const Graph& g);

/// Orderly generation: visits every isomorphism class with 1..n_max vertices
/// inside the family exactly once (connected and disconnected alike).
void enumerate_graphs(int n_max, const FamilySpec& family,
                      const std::function<void(const Graph&)>& visit);

/// Convenience: all connected members with exactly n or up to n vertices.
std::vector<Graph> connected_graphs_up_to(int n_max, const FamilySpec& family = {});

// --- Seeded random generation -------------------------------------------------

/// Deterministic across platforms: raw engine draws, no distribution objects.
bool random_bernoulli(std::mt19937_64& rng, double p);
int random_below(std::mt19937_64& rng, int n);

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

/// Rejection sampling inside the family; nullopt when the budget runs out.
std::optional<Graph> random_graph_in_family(int n, double edge_probability,
                                            const FamilySpec& family, std::mt19937_64& rng,
                                            int budget = 10000);

}  // namespace wellcov
