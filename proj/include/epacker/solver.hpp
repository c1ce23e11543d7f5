#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "epacker/decomposition.hpp"
#include "epacker/graph.hpp"
#include "epacker/minors.hpp"

namespace epk {

// Host graph with pattern trees T_1 <= ... <= T_c (by size) and required
// multiplicities x_1, ..., x_c. At least one x_i must be positive.
class Instance {
public:
    Instance(Graph g, std::vector<Tree> trees, std::vector<int> multiplicities);

    const Graph& graph() const { return graph_; }
    const std::vector<Tree>& trees() const { return trees_; }
    const std::vector<int>& multiplicities() const { return x_; }
    int tree_count() const { return static_cast<int>(trees_.size()); }

    // I = {i | x_i >= 1}, recomputed on demand, ascending.
    std::vector<int> active_indices() const;
    int smallest_active() const; // m = min(I)
    long long missing_models() const;

    // Cover size bound: sum over I of x_i * t_i, minus t_{max(I)}.
    long long cover_bound() const;

private:
    Graph graph_;
    std::vector<Tree> trees_;
    std::vector<int> x_;
};

// One model of tree `tree_index` (copy `copy_index` in 1..x_i) living inside
// the host vertex set removed at some recursion level.
struct PackedModel {
    int tree_index = 0;
    int copy_index = 0;
    VertexSet host;   // vertex set of the packed subgraph
    MinorModel model; // branch sets within `host`
};

struct Packing {
    std::vector<PackedModel> models;
};

struct Cover {
    VertexSet vertices;
    int witness = 0; // index i in I with no T_i minor in G - X
};

// Diagnostic record of one recursion level.
struct TraceStep {
    int level = 0;
    VertexSet region;                 // Y
    std::vector<VertexSet> bags;      // decomposition of G[Y]
    int prefix_len = 0;               // l: G_l = G[B_1 u ... u B_l]
    int tree_index = 0;               // i'
};

struct Outcome {
    std::variant<Packing, Cover> result;
    std::vector<TraceStep> trace;
    long long bound = 0;

    bool is_packing() const { return std::holds_alternative<Packing>(result); }
    const Packing& packing() const { return std::get<Packing>(result); }
    const Cover& cover() const { return std::get<Cover>(result); }
};

struct SolveOptions {
    // Re-derive the two proof invariants at every level: the pruned prefix
    // has no active minor, and no edge leaves the removed part except
    // through the selected bag. Costs extra exponential minor searches.
    bool debug_assertions = false;
    long long node_budget = 10'000'000;
    DecompositionLimits decomposition;
};

// The recursive pack-or-cover procedure. Either a full packing (x_i models
// of each T_i, all pairwise disjoint) or a cover X with |X| <= cover_bound()
// such that G - X has no T_witness minor.
Outcome solve(const Instance& instance, const SolveOptions& options = {});

struct PrefixChoice {
    int prefix_len = 0; // smallest l with an active minor in G_l
    int tree_index = 0; // smallest active index with a minor in G_l
    MinorModel model;   // model of that tree inside G_l, in g's ids
};

// Scans prefixes of pd in order; the graph being scanned must contain some
// active pattern as a minor (the region extractor's contract).
PrefixChoice find_smallest_prefix(const Graph& g, const PathDecomposition& pd,
                                  const std::vector<Tree>& trees, const std::vector<int>& active,
                                  SearchBudget& budget);

// Theorem-level wrappers: c = 1 and x_1 = k, respectively all components of
// the forest with every x_i = k. Cover sizes obey t(k-1) and tk - t'.
Outcome pack_or_cover_tree(const Graph& g, const Tree& tree, int k,
                           const SolveOptions& options = {});
Outcome pack_or_cover_forest(const Graph& g, const Forest& forest, int k,
                             const SolveOptions& options = {});

// Regroups a forest packing into k copies, each mapping component index to
// its model.
std::vector<std::vector<PackedModel>> forest_copies(const Packing& packing, int components,
                                                    int k);

struct OutcomeValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

// Independent re-check of an outcome against its instance: model validity,
// multiplicities and global disjointness for packings; bound and a fresh
// minor search on G - X for covers. Uses only graph-core and minors.
OutcomeValidation verify_outcome(const Instance& instance, const Outcome& outcome,
                                 const SolveOptions& options = {});

} // namespace epk
