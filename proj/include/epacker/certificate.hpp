#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "epacker/graph.hpp"
#include "epacker/oracles.hpp"
#include "epacker/pathwidth_ep.hpp"
#include "epacker/solver.hpp"

namespace epk {

// Certificate documents, schema_version "1". All vertices are reported as
// labels so certificates stay meaningful for graphs whose input ids were
// not dense. Kinds: "tree", "forest" (pack-or-cover runs), "pathwidth"
// (two-phase pathwidth runs), "oracle" (brute-force baselines).

inline constexpr const char* kCertificateSchemaVersion = "1";

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json build_solve_certificate(const std::string& kind, const Instance& instance,
                                       const Outcome& outcome, double solve_ms);

nlohmann::json build_pathwidth_certificate(const Graph& g, int p, int k, const PwOutcome& outcome,
                                           double solve_ms);

nlohmann::json build_oracle_packing_certificate(const Graph& g, const Tree& tree,
                                                const MaxPackingResult& result, double solve_ms);
nlohmann::json build_oracle_hitting_certificate(const Graph& g, const Tree& tree,
                                                const MinHittingResult& result, double solve_ms);
nlohmann::json build_oracle_pathwidth_certificate(const Graph& g, int width, double solve_ms);

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

// Re-derives everything checkable from the document: the embedded instance
// must match the supplied graph, stated bounds must equal recomputed ones,
// and the outcome payload must verify from scratch. Capacity errors from
// the re-checks propagate.
CertificateCheck verify_certificate(const Graph& user_graph, const nlohmann::json& certificate,
                                    const SolveOptions& options = {});

} // namespace epk
