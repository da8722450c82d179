#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "wellcov/certificates.hpp"
#include "wellcov/graph.hpp"

namespace wellcov {

struct RunReport {
    std::string command;
    std::string format;
    std::string digest;
    int n = 0;
    int m = 0;
    std::string property;
    std::string algorithm;
    bool verdict = false;
    Certificate certificate;
    std::optional<std::int64_t> elapsed_ms;  // only serialized when present
};

/// FNV-1a over the vertex count and canonical edge list.
std::string graph_digest(const Graph& g);

nlohmann::ordered_json certificate_to_json(const Certificate& c);
nlohmann::ordered_json report_to_json(const RunReport& report);

/// What a recognition run was asked about; drives certificate verification.
struct PropertyQuery {
    std::string property;  // wc | w2 | shed | relating
    int vertex = -1;       // shed
    int x = -1, y = -1;    // relating
};

/// Re-checks an emitted certificate with the oracle-side independent
/// checkers. Returns true when the certificate is consistent (or there is
/// nothing to verify). Exponential re-checks only run for n <= verify_cap.
bool verify_report_certificate(const Graph& g, const PropertyQuery& query,
                               const std::string& algorithm, const Verdict& verdict,
                               int verify_cap);

}  // namespace wellcov
