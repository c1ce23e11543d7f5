#pragma once

#include <vector>

#include "epacker/graph.hpp"
#include "epacker/minors.hpp"

namespace epk {

// The oracles are ground-truth baselines: exhaustive, structurally
// independent of the solver-side searches, and limited to small instances.
struct OracleLimits {
    int max_vertices = 10;
};

struct MaxPackingResult {
    int nu = 0;                    // maximum number of disjoint models
    std::vector<MinorModel> models; // a witness family of that size
};

struct MinHittingResult {
    int tau = 0;      // minimum |X| with no T minor in G - X
    VertexSet witness; // an X of that size
};

// Per-instance cache: minor presence for every vertex subset of G, decided
// by enumerating spanning partitions into connected branch sets (monotone
// shortcuts fill non-minimal subsets). Packing and hitting numbers both
// read off this table.
class MinorOracle {
public:
    MinorOracle(const Graph& g, const Tree& pattern, const OracleLimits& limits = {});

    bool has_minor() const;
    bool has_minor_within(const VertexSet& s) const;
    MaxPackingResult max_packing() const;
    MinHittingResult min_hitting() const;

private:
    Graph g_;
    Graph pattern_;
    int t_;
    std::vector<char> table_;                     // subset mask -> minor present
    std::vector<bits::Mask> minimal_;             // minimal true masks, ascending
    std::vector<std::vector<bits::Mask>> parts_;  // witness partition per minimal mask
};

MaxPackingResult max_packing_bruteforce(const Graph& g, const Tree& pattern,
                                        const OracleLimits& limits = {});
MinHittingResult min_hitting_bruteforce(const Graph& g, const Tree& pattern,
                                        const OracleLimits& limits = {});
bool has_minor_bruteforce(const Graph& g, const Tree& pattern, const OracleLimits& limits = {});

// Pathwidth via the vertex separation number: minimize, over all vertex
// orderings, the maximum number of already-placed vertices that still have
// a neighbor among the unplaced ones (subset dynamic program). Independent
// of the decomposition-search engine.
int pathwidth_reference(const Graph& g, const OracleLimits& limits = {});

} // namespace epk
