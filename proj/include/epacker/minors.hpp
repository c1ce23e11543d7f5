#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epacker/graph.hpp"

namespace epk {

// Pattern tree; connected, acyclic, at least one vertex.
class Tree {
public:
    explicit Tree(Graph g);
    const Graph& graph() const { return graph_; }
    int t() const { return graph_.vertex_count(); }

private:
    Graph graph_;
};

// Forest as its component trees, sorted by ascending vertex count.
class Forest {
public:
    explicit Forest(const Graph& g);
    const std::vector<Tree>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int total_vertices() const { return total_; }      // t
    int max_component_size() const { return max_; }    // t'

private:
    std::vector<Tree> components_;
    int total_ = 0;
    int max_ = 0;
};

// Branch sets indexed by pattern vertex.
struct MinorModel {
    std::vector<VertexSet> branch_sets;
};

struct ModelValidation {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the three model invariants: nonempty connected branch sets,
// pairwise disjointness, and a host edge for every pattern edge.
ModelValidation validate_model(const Graph& host, const Tree& pattern, const MinorModel& model);

// Shared node counter for the exact searches. Exceeding the limit raises
// capacity_error; a negative search answer is only ever reported after the
// search space was exhausted within budget.
struct SearchBudget {
    long long limit = 10'000'000;
    long long used = 0;
    void tick(const char* what) {
        if (++used > limit)
            throw capacity_error(std::string(what) + ": node budget of " +
                                 std::to_string(limit) + " exceeded");
    }
};

// Exact search for a T-minor model in the host. Returns the first model
// found under the deterministic search order, post-processed to
// inclusion-minimal branch sets; nullopt means no model exists.
std::optional<MinorModel> find_tree_minor(const Graph& host, const Tree& pattern,
                                          SearchBudget& budget);
std::optional<MinorModel> find_tree_minor(const Graph& host, const Tree& pattern);

// Pairwise vertex-disjoint models of all forest components (indexed like
// Forest::components), or nullopt. Components are attempted in descending
// size order with backtracking across components.
std::optional<std::vector<MinorModel>> find_forest_minor(const Graph& host, const Forest& forest,
                                                         SearchBudget& budget);
std::optional<std::vector<MinorModel>> find_forest_minor(const Graph& host, const Forest& forest);

// One "pattern_vertex: {host labels}" line per branch set.
std::string format_model(const Graph& host, const MinorModel& model);

} // namespace epk
