#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wellcov/enumerate.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

struct Mismatch {
    std::string graph6;
    std::string detail;
};

struct ValidationReport {
    std::string family;
    std::string property;
    int n_max = 0;
    long graphs_checked = 0;
    long cases_checked = 0;
    std::vector<Mismatch> mismatches;
};

/// Enumerates the connected members of the family up to n_max and compares
/// every applicable polynomial recognizer of the requested property ("shed",
/// "wc", "w2", "relating" or "all") against the definitional oracle. A clean
/// run has an empty mismatch list.
ValidationReport crossvalidate(const FamilySpec& family, const std::string& property,
                               int n_max);

struct ConjectureReport {
    int n_max = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    long graphs_checked = 0;
    long well_covered_checked = 0;
    std::vector<std::string> well_covered_disagreements;  // would violate a theorem
    std::vector<std::string> candidate_counterexamples;   // conjecture falsifiers
};

/// Compares the W2 oracle with the alpha-condition checker. Exhaustive over
/// connected graphs when n_max <= 9; sampling with the given seed otherwise.
ConjectureReport conjecture_search(int n_max, std::uint64_t seed = 0, int sample_count = 200);

int worker_count();
/// Runs fn(0..count-1) on a bounded pool; result slots keep input order.
void parallel_over(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace wellcov
