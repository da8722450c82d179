#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "wellcov/graph.hpp"

namespace wellcov {

struct WitnessSet {
    VertexSet set;
};

struct SetPair {
    VertexSet first;
    VertexSet second;
};

struct SizedSets {
    std::vector<std::pair<VertexSet, int>> items;
};

struct MatchingCert {
    std::vector<Edge> edges;
};

struct PartitionCert {
    std::vector<VertexSet> parts;
};

/// Machine-checkable witness attached to a Verdict. std::monostate means "no
/// certificate" (e.g. a positive answer established by exhaustion).
using Certificate =
    std::variant<std::monostate, WitnessSet, SetPair, SizedSets, MatchingCert, PartitionCert>;

struct Verdict {
    bool answer = false;
    Certificate certificate;

    static Verdict yes(Certificate c = {}) { return Verdict{true, std::move(c)}; }
    static Verdict no(Certificate c = {}) { return Verdict{false, std::move(c)}; }
};

}  // namespace wellcov
