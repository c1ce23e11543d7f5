#pragma once

// Test-side corpus machinery: isomorph-free enumeration of small graphs,
// random instance samplers, and a brute-force matching baseline. Not part
// of the shipped library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "epacker/generate.hpp"
#include "epacker/graph.hpp"
#include "epacker/minors.hpp"

namespace corpus {

using epk::Graph;

namespace detail {

// Upper-triangle bit layout shared with graph6: (0,1),(0,2),(1,2),(0,3),...
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; } // i < j

inline const std::vector<std::pair<int, int>>& pairs_for(int n) {
    static std::map<int, std::vector<std::pair<int, int>>> cache;
    auto& entry = cache[n];
    if (entry.empty() && n >= 2) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) entry.emplace_back(i, j);
    }
    return entry;
}

// All permutations of 0..n-1 preserving consecutive blocks of given sizes.
inline const std::vector<std::vector<int>>& block_perms(const std::vector<int>& block_sizes) {
    static std::map<std::vector<int>, std::vector<std::vector<int>>> cache;
    auto it = cache.find(block_sizes);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<int>> blocks;
    int next = 0;
    for (int size : block_sizes) {
        std::vector<int> block(size);
        std::iota(block.begin(), block.end(), next);
        next += size;
        blocks.push_back(block);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::vector<std::vector<int>> arrangement = blocks;
    // Odometer over per-block permutations.
    auto emit = [&]() {
        std::vector<int> perm;
        for (const auto& b : arrangement) perm.insert(perm.end(), b.begin(), b.end());
        out.push_back(std::move(perm));
    };
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == arrangement.size()) {
            emit();
            return;
        }
        std::sort(arrangement[idx].begin(), arrangement[idx].end());
        do {
            rec(idx + 1);
        } while (std::next_permutation(arrangement[idx].begin(), arrangement[idx].end()));
        std::sort(arrangement[idx].begin(), arrangement[idx].end());
    };
    rec(0);
    return cache.emplace(block_sizes, std::move(out)).first->second;
}

inline std::uint32_t apply_perm(std::uint32_t mask, const std::vector<int>& perm,
                                const std::vector<std::pair<int, int>>& pairs) {
    std::uint32_t out = 0;
    std::uint32_t probe = mask;
    while (probe) {
        int b = std::countr_zero(probe);
        probe &= probe - 1;
        int i = perm[pairs[b].first], j = perm[pairs[b].second];
        if (i > j) std::swap(i, j);
        out |= std::uint32_t{1} << pair_index(i, j);
    }
    return out;
}

} // namespace detail

// All graphs on exactly n labeled-as-canonical vertices, one per isomorphism
// class. Representative = degree-sorted labeling minimizing the adjacency
// bit string over degree-preserving permutations.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    if (n == 0) {
        out.emplace_back(0, std::vector<std::pair<int, int>>{});
        return out;
    }
    const auto& pairs = detail::pairs_for(n);
    int bit_count = n * (n - 1) / 2;
    std::uint32_t limit = std::uint32_t{1} << bit_count;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        std::vector<int> deg(n, 0);
        std::uint32_t probe = mask;
        while (probe) {
            int b = std::countr_zero(probe);
            probe &= probe - 1;
            ++deg[pairs[b].first];
            ++deg[pairs[b].second];
        }
        bool sorted = true;
        for (int v = 1; v < n && sorted; ++v) sorted = deg[v - 1] >= deg[v];
        if (!sorted) continue;
        std::vector<int> block_sizes;
        for (int v = 0; v < n;) {
            int w = v;
            while (w < n && deg[w] == deg[v]) ++w;
            block_sizes.push_back(w - v);
            v = w;
        }
        std::uint32_t best = mask;
        for (const auto& perm : detail::block_perms(block_sizes))
            best = std::min(best, detail::apply_perm(mask, perm, pairs));
        if (best != mask) continue; // not the canonical representative
        std::vector<std::pair<int, int>> edges;
        probe = mask;
        while (probe) {
            int b = std::countr_zero(probe);
            probe &= probe - 1;
            edges.push_back(pairs[b]);
        }
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (epk::is_connected(g)) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> all_trees(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (epk::is_connected(g) && g.edge_count() == n - 1) out.push_back(std::move(g));
    return out;
}

// Expected class counts for the enumerator self-checks (n = 1..7).
inline constexpr int kGraphCounts[7] = {1, 2, 4, 11, 34, 156, 1044};
inline constexpr int kConnectedCounts[7] = {1, 1, 2, 6, 21, 112, 853};
inline constexpr int kTreeCounts[7] = {1, 1, 1, 2, 3, 6, 11};

// -- random samplers (all deterministic given the generator state) --------

inline Graph random_graph(std::mt19937_64& rng, int min_n, int max_n) {
    int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
    double p = 0.2 + 0.6 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    return epk::make_erdos_renyi(n, p, rng());
}

inline Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    return Graph(n, std::move(edges));
}

// Forest on at most max_total vertices with 1..3 components.
inline Graph random_forest_graph(std::mt19937_64& rng, int max_total) {
    int total = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total - 1));
    int c = 1 + static_cast<int>(rng() % 3u);
    c = std::min(c, total);
    std::vector<int> sizes(c, 1);
    for (int extra = total - c; extra > 0; --extra) ++sizes[rng() % static_cast<std::uint64_t>(c)];
    Graph forest(0, {});
    for (int size : sizes) forest = epk::disjoint_union(forest, random_tree(rng, size));
    return forest;
}

// Maximum matching by masked recursion; baseline for the bag-stabbing tests.
inline int max_matching(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> memo(std::size_t{1} << n, -1);
    auto adj = epk::bits::adjacency_masks(g);
    std::function<int(std::uint32_t)> rec = [&](std::uint32_t free) -> int {
        if (free == 0) return 0;
        int& entry = memo[free];
        if (entry >= 0) return entry;
        int v = std::countr_zero(free);
        std::uint32_t rest = free & ~(std::uint32_t{1} << v);
        int best = rec(rest); // leave v unmatched
        std::uint32_t partners = adj[v] & rest;
        while (partners) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::max(best, 1 + rec(rest & ~(std::uint32_t{1} << u)));
        }
        entry = best;
        return best;
    };
    return rec(n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
}

} // namespace corpus
