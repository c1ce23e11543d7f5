#include "epacker/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_set>

namespace epk {

using bits::Mask;

int PathDecomposition::width() const {
    int max_bag = 0;
    for (const auto& b : bags) max_bag = std::max(max_bag, static_cast<int>(b.size()));
    return max_bag - 1;
}

PdValidation validate_pd(const Graph& g, const PathDecomposition& pd) {
    PdValidation result;
    auto flag = [&](const std::string& msg) {
        result.ok = false;
        result.violations.push_back(msg);
    };
    int q = static_cast<int>(pd.bags.size());
    for (int i = 0; i < q; ++i) {
        try {
            validate_vertex_set(g, pd.bags[i], "bag");
        } catch (const domain_error& e) {
            flag(std::string(e.what()) + " (bag " + std::to_string(i + 1) + ")");
            return result;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        int first = -1, last = -1, count = 0;
        for (int i = 0; i < q; ++i)
            if (set_contains(pd.bags[i], v)) {
                if (first < 0) first = i;
                last = i;
                ++count;
            }
        if (count == 0)
            flag("vertex " + std::to_string(v) + " appears in no bag");
        else if (count != last - first + 1)
            flag("bags of vertex " + std::to_string(v) + " are not consecutive");
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i = 0; i < q && !covered; ++i)
            covered = set_contains(pd.bags[i], u) && set_contains(pd.bags[i], v);
        if (!covered)
            flag("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }
    return result;
}

namespace {

// Feasibility search over states (forgotten, bag). Introducing v adds it to
// the bag; v becomes forgettable once all its neighbors are introduced
// (interval overlap then covers every incident edge). Vertices in `keep`
// are never forgotten. Forgettable vertices are dropped eagerly: doing so
// never loses a solution and shrinks the state space to closed states.
class DecompositionSearch {
public:
    DecompositionSearch(const std::vector<Mask>& adj, int n, int bag_cap, Mask keep)
        : adj_(adj), n_(n), bag_cap_(bag_cap), keep_(keep) {
        full_ = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
    }

    std::optional<std::vector<std::pair<char, int>>> run() {
        moves_.clear();
        visited_.clear();
        if (dfs(0, 0)) return moves_;
        return std::nullopt;
    }

private:
    void close(Mask& forgotten, Mask& bag) {
        for (;;) {
            Mask introduced = forgotten | bag;
            Mask droppable = 0;
            Mask probe = bag & ~keep_;
            while (probe) {
                int v = std::countr_zero(probe);
                probe &= probe - 1;
                if ((adj_[v] & ~introduced) == 0) {
                    droppable = Mask{1} << v;
                    break;
                }
            }
            if (!droppable) return;
            int v = std::countr_zero(droppable);
            bag &= ~droppable;
            forgotten |= droppable;
            moves_.emplace_back('f', v);
        }
    }

    bool dfs(Mask forgotten, Mask bag) {
        if ((forgotten | bag) == full_) return true;
        std::uint64_t key = (static_cast<std::uint64_t>(forgotten) << 32) | bag;
        if (!visited_.insert(key).second) return false;
        if (std::popcount(bag) + 1 > bag_cap_) return false;
        Mask fresh = full_ & ~(forgotten | bag);
        while (fresh) {
            int v = std::countr_zero(fresh);
            fresh &= fresh - 1;
            size_t mark = moves_.size();
            moves_.emplace_back('i', v);
            Mask f2 = forgotten, b2 = bag | (Mask{1} << v);
            close(f2, b2);
            if (dfs(f2, b2)) return true;
            moves_.resize(mark);
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    int n_;
    int bag_cap_;
    Mask keep_;
    Mask full_ = 0;
    std::vector<std::pair<char, int>> moves_;
    std::unordered_set<std::uint64_t> visited_;
};

PathDecomposition bags_from_moves(const std::vector<std::pair<char, int>>& moves) {
    PathDecomposition pd;
    VertexSet bag;
    for (auto [kind, v] : moves) {
        if (kind == 'i') {
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
        } else {
            bag.erase(std::find(bag.begin(), bag.end(), v));
        }
        pd.bags.push_back(bag);
    }
    // Drop bags contained in a neighbor; coverage and consecutiveness survive.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < pd.bags.size(); ++i) {
            bool left = i > 0 && is_subset(pd.bags[i], pd.bags[i - 1]);
            bool right = i + 1 < pd.bags.size() && is_subset(pd.bags[i], pd.bags[i + 1]);
            if (left || right) {
                pd.bags.erase(pd.bags.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    return pd;
}

void require_decomposition_size(const Graph& g, const DecompositionLimits& limits,
                                const char* what) {
    if (g.vertex_count() > limits.max_vertices)
        throw capacity_error(std::string(what) + ": graph has " +
                             std::to_string(g.vertex_count()) + " vertices, limit is " +
                             std::to_string(limits.max_vertices));
}

} // namespace

PathwidthResult pathwidth_exact(const Graph& g, const DecompositionLimits& limits) {
    require_decomposition_size(g, limits, "pathwidth_exact");
    int n = g.vertex_count();
    if (n == 0) return {-1, {}};
    auto adj = bits::adjacency_masks(g);
    for (int w = 0; w < n; ++w) {
        DecompositionSearch search(adj, n, w + 1, 0);
        if (auto moves = search.run()) {
            PathDecomposition pd = bags_from_moves(*moves);
            if (pd.width() != w)
                throw invariant_violation("pathwidth search produced width " +
                                          std::to_string(pd.width()) + " at cap " +
                                          std::to_string(w));
            return {w, std::move(pd)};
        }
    }
    throw invariant_violation("pathwidth search failed at trivial cap");
}

std::optional<PathDecomposition> constrained_path_decomposition(const Graph& g, int bag_cap,
                                                                const VertexSet& keep,
                                                                const DecompositionLimits& limits) {
    require_decomposition_size(g, limits, "constrained_path_decomposition");
    validate_vertex_set(g, keep, "constrained_path_decomposition");
    if (bag_cap < 0) throw domain_error("bag capacity must be nonnegative");
    if (static_cast<int>(keep.size()) > bag_cap) return std::nullopt;
    int n = g.vertex_count();
    if (n == 0) return PathDecomposition{};
    auto adj = bits::adjacency_masks(g);
    DecompositionSearch search(adj, n, bag_cap, bits::to_mask(keep));
    auto moves = search.run();
    if (!moves) return std::nullopt;
    return bags_from_moves(*moves);
}

BoundedRegion extract_bounded_region(const Graph& g, int t, const std::vector<Tree>& patterns,
                                     const std::vector<int>& active, SearchBudget& budget,
                                     const DecompositionLimits& limits) {
    if (t < 1) throw domain_error("extract_bounded_region: t must be positive");
    if (active.empty()) throw domain_error("extract_bounded_region: empty index set");
    for (int i : active)
        if (i < 0 || i >= static_cast<int>(patterns.size()))
            throw domain_error("extract_bounded_region: bad pattern index");
    require_decomposition_size(g, limits, "extract_bounded_region");

    auto [width, pd] = pathwidth_exact(g, limits);
    if (width < t - 1) {
        if (pd.bags.empty()) pd.bags.push_back({});
        return {all_vertices(g), std::move(pd)};
    }

    // pw(g) >= t-1: a region satisfying the contract with the smallest
    // still-needed tree exists; find the first one by increasing size.
    const Tree& smallest = patterns[active.front()];
    int n = g.vertex_count();
    auto low_bits = [](int k) { return k >= 32 ? ~Mask{0} : ((Mask{1} << k) - 1); };
    for (int size = t; size <= n; ++size) {
        Mask y = low_bits(size);
        Mask last = low_bits(size) << (n - size);
        for (;;) {
            VertexSet region = bits::from_mask(y);
            VertexSet bd = boundary(g, region);
            if (static_cast<int>(bd.size()) <= t) {
                Graph h = induced_subgraph(g, region);
                if (find_tree_minor(h, smallest, budget)) {
                    VertexSet keep_local;
                    for (int k = 0; k < static_cast<int>(region.size()); ++k)
                        if (set_contains(bd, region[k])) keep_local.push_back(k);
                    if (auto local_pd = constrained_path_decomposition(h, t, keep_local, limits)) {
                        BoundedRegion out;
                        out.region = region;
                        for (const auto& bag : local_pd->bags) {
                            VertexSet lifted;
                            lifted.reserve(bag.size());
                            for (int k : bag) lifted.push_back(region[k]);
                            out.pd.bags.push_back(std::move(lifted));
                        }
                        if (out.pd.bags.empty()) out.pd.bags.push_back({});
                        return out;
                    }
                }
            }
            if (y == last) break;
            // Gosper's hack: next mask of the same popcount.
            Mask c = y & (~y + 1);
            Mask r = y + c;
            y = (((r ^ y) >> 2) / c) | r;
        }
    }
    throw invariant_violation("extract_bounded_region: search exhausted, contract unmet");
}

Graph prefix_graph(const Graph& g, const PathDecomposition& pd, int len) {
    if (len < 1 || len > static_cast<int>(pd.bags.size()))
        throw domain_error("prefix_graph: index out of range");
    VertexSet prefix;
    for (int i = 0; i < len; ++i) prefix = set_union(prefix, pd.bags[i]);
    return induced_subgraph(g, prefix);
}

std::string format_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    std::ostringstream out;
    for (const auto& bag : pd.bags) {
        out << "{";
        for (size_t i = 0; i < bag.size(); ++i) {
            if (i) out << ", ";
            out << g.label_of(bag[i]);
        }
        out << "}\n";
    }
    return out.str();
}

} // namespace epk
