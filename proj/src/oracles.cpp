#include "epacker/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace epk {

using bits::Mask;

namespace {

void require_oracle_size(const Graph& g, const OracleLimits& limits, const char* what) {
    if (limits.max_vertices > 20)
        throw domain_error(std::string(what) + ": oracle limit cannot exceed 20");
    if (g.vertex_count() > limits.max_vertices)
        throw capacity_error(std::string(what) + ": graph has " +
                             std::to_string(g.vertex_count()) + " vertices, oracle limit is " +
                             std::to_string(limits.max_vertices));
}

// Looks for a partition of exactly the vertices of `mask` into t connected
// classes realizing every pattern edge. Plain assignment backtracking with
// a counting prune; first hit (vertices ascending, classes ascending) wins.
bool spanning_partition(const std::vector<Mask>& adj, const Graph& pattern, Mask mask,
                        std::vector<Mask>& classes_out) {
    int t = pattern.vertex_count();
    std::vector<int> verts = bits::from_mask(mask);
    int k = static_cast<int>(verts.size());
    std::vector<Mask> classes(t, 0);
    std::function<bool(int, int)> assign = [&](int idx, int empty_left) -> bool {
        if (k - idx < empty_left) return false;
        if (idx == k) {
            for (int c = 0; c < t; ++c)
                if (!bits::mask_connected(adj, classes[c])) return false;
            for (auto [a, b] : pattern.edges()) {
                Mask nb = 0;
                Mask m = classes[a];
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    nb |= adj[v];
                }
                if ((nb & classes[b]) == 0) return false;
            }
            classes_out = classes;
            return true;
        }
        Mask vbit = Mask{1} << verts[idx];
        for (int c = 0; c < t; ++c) {
            bool was_empty = classes[c] == 0;
            classes[c] |= vbit;
            if (assign(idx + 1, empty_left - (was_empty ? 1 : 0))) return true;
            classes[c] &= ~vbit;
        }
        return false;
    };
    return assign(0, t);
}

} // namespace

MinorOracle::MinorOracle(const Graph& g, const Tree& pattern, const OracleLimits& limits)
    : g_(g), pattern_(pattern.graph()), t_(pattern.t()) {
    require_oracle_size(g, limits, "minor oracle");
    int n = g_.vertex_count();
    auto adj = bits::adjacency_masks(g_);
    std::size_t size = std::size_t{1} << n;
    table_.assign(size, 0);
    // Ascending masks: every child (one vertex dropped) is numerically
    // smaller, so the monotone shortcut only consults finished entries.
    for (Mask mask = 0; mask < size; ++mask) {
        if (std::popcount(mask) < t_) continue;
        bool child_true = false;
        Mask probe = mask;
        while (probe && !child_true) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            child_true = table_[mask & ~(Mask{1} << v)];
        }
        if (child_true) {
            table_[mask] = 1;
            continue;
        }
        // All children negative: any model inside `mask` must span it.
        std::vector<Mask> classes;
        if (spanning_partition(adj, pattern_, mask, classes)) {
            table_[mask] = 1;
            minimal_.push_back(mask);
            parts_.push_back(std::move(classes));
        }
    }
}

bool MinorOracle::has_minor() const { return table_.back() != 0; }

bool MinorOracle::has_minor_within(const VertexSet& s) const {
    validate_vertex_set(g_, s, "has_minor_within");
    return table_[bits::to_mask(s)] != 0;
}

MaxPackingResult MinorOracle::max_packing() const {
    int n = g_.vertex_count();
    Mask full = n == 0 ? 0 : ((Mask{1} << n) - 1);
    std::map<Mask, int> value;
    std::map<Mask, int> choice; // index into minimal_
    std::function<int(Mask)> nu = [&](Mask mask) -> int {
        if (!table_[mask]) return 0;
        auto it = value.find(mask);
        if (it != value.end()) return it->second;
        int best = 0, best_choice = -1;
        for (int i = 0; i < static_cast<int>(minimal_.size()); ++i) {
            Mask s = minimal_[i];
            if ((s & mask) != s) continue;
            int candidate = 1 + nu(mask & ~s);
            if (candidate > best) {
                best = candidate;
                best_choice = i;
            }
        }
        value[mask] = best;
        choice[mask] = best_choice;
        return best;
    };
    MaxPackingResult result;
    result.nu = nu(full);
    Mask mask = full;
    while (table_[mask]) {
        int i = choice[mask];
        MinorModel model;
        for (Mask cm : parts_[i]) model.branch_sets.push_back(bits::from_mask(cm));
        result.models.push_back(std::move(model));
        mask &= ~minimal_[i];
    }
    return result;
}

MinHittingResult MinorOracle::min_hitting() const {
    int n = g_.vertex_count();
    std::size_t size = std::size_t{1} << n;
    int best_size = -1;
    Mask best_mask = 0;
    for (Mask mask = 0; mask < size; ++mask) {
        if (table_[mask]) continue;
        int pc = std::popcount(mask);
        if (pc > best_size) {
            best_size = pc;
            best_mask = mask;
        }
    }
    MinHittingResult result;
    result.tau = n - best_size;
    result.witness = set_difference(all_vertices(g_), bits::from_mask(best_mask));
    return result;
}

MaxPackingResult max_packing_bruteforce(const Graph& g, const Tree& pattern,
                                        const OracleLimits& limits) {
    return MinorOracle(g, pattern, limits).max_packing();
}

MinHittingResult min_hitting_bruteforce(const Graph& g, const Tree& pattern,
                                        const OracleLimits& limits) {
    return MinorOracle(g, pattern, limits).min_hitting();
}

bool has_minor_bruteforce(const Graph& g, const Tree& pattern, const OracleLimits& limits) {
    return MinorOracle(g, pattern, limits).has_minor();
}

int pathwidth_reference(const Graph& g, const OracleLimits& limits) {
    require_oracle_size(g, limits, "pathwidth_reference");
    int n = g.vertex_count();
    if (n == 0) return -1;
    auto adj = bits::adjacency_masks(g);
    std::size_t size = std::size_t{1} << n;
    Mask full = static_cast<Mask>(size - 1);
    std::vector<int> cost(size, 0); // |active boundary| of the placed prefix
    for (Mask mask = 1; mask < size; ++mask) {
        int c = 0;
        Mask probe = mask;
        while (probe) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            if (adj[v] & ~mask & full) ++c;
        }
        cost[mask] = c;
    }
    std::vector<int> best(size, 0);
    for (Mask mask = 1; mask < size; ++mask) {
        int over_orderings = n + 1;
        Mask probe = mask;
        while (probe) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            over_orderings = std::min(over_orderings, best[mask & ~(Mask{1} << v)]);
        }
        best[mask] = std::max(cost[mask], over_orderings);
    }
    return best[full];
}

} // namespace epk
