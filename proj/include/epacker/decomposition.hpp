#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epacker/graph.hpp"
#include "epacker/minors.hpp"

namespace epk {

// Ordered bag sequence (B_1, ..., B_q); width = max bag size - 1.
// An empty sequence is the decomposition of the empty graph (width -1).
struct PathDecomposition {
    std::vector<VertexSet> bags;
    int width() const;
};

struct PdValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

// Accepts iff every vertex appears in a nonempty set of consecutive bags,
// every edge has a bag containing both endpoints, and all bag members are
// vertices of g. Violations are reported with witnesses, never thrown.
PdValidation validate_pd(const Graph& g, const PathDecomposition& pd);

struct DecompositionLimits {
    int max_vertices = 16;
};

struct PathwidthResult {
    int width = -1;
    PathDecomposition pd;
};

// Exact pathwidth by iterative-deepening search over (forgotten set, bag)
// states with introduce/forget transitions. Deterministic: among optimal
// decompositions the one with the lexicographically smallest introduce
// order is returned.
PathwidthResult pathwidth_exact(const Graph& g, const DecompositionLimits& limits = {});

// Same state search with the bag size capped at `bag_cap` and the vertices
// of `keep` never forgettable (hence contained in the final bag).
// nullopt iff no such decomposition exists.
std::optional<PathDecomposition> constrained_path_decomposition(
    const Graph& g, int bag_cap, const VertexSet& keep, const DecompositionLimits& limits = {});

// Y plus a path decomposition of G[Y] with bags of size at most the bound
// supplied at extraction and boundary(G, Y) inside the last bag.
struct BoundedRegion {
    VertexSet region;
    PathDecomposition pd; // bags in the ids of the original graph
};

// Region extractor behind each recursion step of the solver: if pw(G) < t-1
// the whole graph with an optimal decomposition; otherwise the first vertex
// set (by size, then numeric order) that carries a minor of patterns[active
// front] and admits a cap-t decomposition keeping its boundary in the last
// bag. Such a set always exists; exhausting the enumeration is a bug and
// raises invariant_violation.
BoundedRegion extract_bounded_region(const Graph& g, int t, const std::vector<Tree>& patterns,
                                     const std::vector<int>& active, SearchBudget& budget,
                                     const DecompositionLimits& limits = {});

// G[B_1 u ... u B_len]; len is 1-based, 1 <= len <= q.
Graph prefix_graph(const Graph& g, const PathDecomposition& pd, int len);

// One bag per line as sorted labels in braces.
std::string format_path_decomposition(const Graph& g, const PathDecomposition& pd);

} // namespace epk
