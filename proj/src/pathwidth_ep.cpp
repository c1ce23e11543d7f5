#include "epacker/pathwidth_ep.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "epacker/generate.hpp"

namespace epk {

using bits::Mask;

namespace {

class EdgeOracle final : public MemberOracle {
public:
    explicit EdgeOracle(Graph base) : base_(std::move(base)) {}
    const Graph& base() const override { return base_; }

    std::optional<VertexSet> find_in(const VertexSet& allowed) override {
        validate_vertex_set(base_, allowed, "edge oracle query");
        for (int u : allowed)
            for (int v : base_.neighbors(u))
                if (v > u && set_contains(allowed, v)) return VertexSet{u, v};
        return std::nullopt;
    }

private:
    Graph base_;
};

class PwOracle final : public MemberOracle {
public:
    PwOracle(Graph base, int p, DecompositionLimits limits)
        : base_(std::move(base)), p_(p), limits_(limits) {
        bits::require_mask_capacity(base_, "pathwidth member oracle");
        adj_ = bits::adjacency_masks(base_);
    }

    const Graph& base() const override { return base_; }

    std::optional<VertexSet> find_in(const VertexSet& allowed) override {
        validate_vertex_set(base_, allowed, "pathwidth oracle query");
        // Scan connected subsets of the allowed region in increasing size;
        // the first subset inducing pathwidth >= p is inclusion-minimal
        // (smaller witnesses, connected or not, would have been seen first).
        std::vector<int> positions = allowed;
        int k = static_cast<int>(positions.size());
        for (int size = p_ + 1; size <= k; ++size) {
            Mask packed = size >= 32 ? ~Mask{0} : ((Mask{1} << size) - 1);
            Mask last = packed << (k - size);
            for (;;) {
                Mask expanded = 0;
                Mask probe = packed;
                while (probe) {
                    int b = std::countr_zero(probe);
                    probe &= probe - 1;
                    expanded |= Mask{1} << positions[b];
                }
                if (bits::mask_connected(adj_, expanded) && pw_at_least_p(expanded))
                    return bits::from_mask(expanded);
                if (packed == last) break;
                Mask c = packed & (~packed + 1);
                Mask r = packed + c;
                packed = (((r ^ packed) >> 2) / c) | r;
            }
        }
        return std::nullopt;
    }

private:
    bool pw_at_least_p(Mask subset) {
        auto it = decided_.find(subset);
        if (it != decided_.end()) return it->second;
        Graph h = induced_subgraph(base_, bits::from_mask(subset));
        bool answer = pathwidth_exact(h, limits_).width >= p_;
        decided_.emplace(subset, answer);
        return answer;
    }

    Graph base_;
    int p_;
    DecompositionLimits limits_;
    std::vector<Mask> adj_;
    std::unordered_map<Mask, bool> decided_;
};

// Exact search for `need` pairwise disjoint members inside `free`, driven
// only by oracle queries. Candidate sets are tried by increasing size, so
// minimal members anchor the recursion; failed (free, need) states are
// memoized.
class DisjointMemberSearch {
public:
    DisjointMemberSearch(MemberOracle& oracle, int n) : oracle_(oracle), n_(n) {}

    std::optional<std::vector<VertexSet>> run(Mask free, int need) {
        chosen_.clear();
        if (search(free, need)) return chosen_;
        return std::nullopt;
    }

private:
    std::optional<VertexSet> query(Mask allowed) {
        auto it = query_cache_.find(allowed);
        if (it != query_cache_.end()) return it->second;
        auto result = oracle_.find_in(bits::from_mask(allowed));
        query_cache_.emplace(allowed, result);
        return result;
    }

    bool search(Mask free, int need) {
        if (need == 0) return true;
        std::uint64_t key = (static_cast<std::uint64_t>(free) << 8) | static_cast<unsigned>(need);
        if (failed_.count(key)) return false;
        int free_count = std::popcount(free);
        std::vector<int> positions = bits::from_mask(free);
        for (int size = 1; size <= free_count; ++size) {
            Mask packed = size >= 32 ? ~Mask{0} : ((Mask{1} << size) - 1);
            Mask last = packed << (free_count - size);
            for (;;) {
                Mask candidate = 0;
                Mask probe = packed;
                while (probe) {
                    int b = std::countr_zero(probe);
                    probe &= probe - 1;
                    candidate |= Mask{1} << positions[b];
                }
                if (auto member = query(candidate)) {
                    Mask member_mask = bits::to_mask(*member);
                    chosen_.push_back(*member);
                    if (search(free & ~member_mask, need - 1)) return true;
                    chosen_.pop_back();
                }
                if (packed == last) break;
                Mask c = packed & (~packed + 1);
                Mask r = packed + c;
                packed = (((r ^ packed) >> 2) / c) | r;
            }
        }
        failed_.insert(key);
        return false;
    }

    MemberOracle& oracle_;
    int n_;
    std::vector<VertexSet> chosen_;
    std::unordered_map<Mask, std::optional<VertexSet>> query_cache_;
    std::unordered_set<std::uint64_t> failed_;
};

} // namespace

std::unique_ptr<MemberOracle> edge_member_oracle(const Graph& base) {
    return std::make_unique<EdgeOracle>(base);
}

std::unique_ptr<MemberOracle> pw_member_oracle(const Graph& base, int p,
                                               const DecompositionLimits& limits) {
    if (p < 1) throw domain_error("pw_member_oracle: p must be at least 1");
    return std::make_unique<PwOracle>(base, p, limits);
}

HellyResult helly_pack_or_stab(const Graph& g, const PathDecomposition& pd, MemberOracle& oracle,
                               int d) {
    if (d < 1) throw domain_error("helly_pack_or_stab: d must be at least 1");
    if (!oracle.base().same_structure(g))
        throw domain_error("helly_pack_or_stab: oracle is bound to a different graph");
    {
        auto check = validate_pd(g, pd);
        if (!check.ok)
            throw domain_error("helly_pack_or_stab: invalid path decomposition: " +
                               check.violations.front());
    }
    if (g.vertex_count() > 16)
        throw capacity_error("helly_pack_or_stab: exact packing search limited to 16 vertices");

    Mask full = g.vertex_count() == 0 ? 0 : ((Mask{1} << g.vertex_count()) - 1);
    DisjointMemberSearch packer(oracle, g.vertex_count());
    if (auto members = packer.run(full, d)) {
        HellyResult result;
        result.packed = true;
        result.members = std::move(*members);
        return result;
    }

    // No d disjoint members exist; the greedy sweep yields the stabbing
    // bags: repeatedly find the smallest r such that the strip past the
    // last selected bag, minus all selected bags, contains a member, and
    // select B_r. A connected member meets a contiguous range of bags, so
    // every member overlapping the strip at r is hit by B_r.
    HellyResult result;
    result.packed = false;
    int q = static_cast<int>(pd.bags.size());
    VertexSet blocked;
    int last = 0;
    while (last < q) {
        VertexSet window;
        bool found = false;
        for (int r = last + 1; r <= q; ++r) {
            window = set_union(window, pd.bags[r - 1]);
            VertexSet allowed = set_difference(window, blocked);
            if (auto member = oracle.find_in(allowed)) {
                result.members.push_back(*member);
                if (static_cast<int>(result.members.size()) >= d)
                    throw invariant_violation(
                        "greedy sweep found a packing the exact search missed");
                result.stab_bags.push_back(r);
                blocked = set_union(blocked, pd.bags[r - 1]);
                last = r;
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return result;
}

long long pw_cover_bound(int p, int k) {
    long long pow3 = 1;
    for (int i = 0; i <= p; ++i) pow3 *= 3;
    return 2 * pow3 * k;
}

PwOutcome pathwidth_pack_or_cover(const Graph& g, int p, int k, const SolveOptions& options) {
    if (p < 1) throw domain_error("pathwidth_pack_or_cover: p must be at least 1");
    if (k < 1) throw domain_error("pathwidth_pack_or_cover: k must be at least 1");
    long long pow3 = 1;
    for (int i = 0; i <= p; ++i) pow3 *= 3;

    Tree ternary(make_complete_ternary_tree(p));
    long long t_p = ternary.t(); // (3^(p+1) - 1) / 2

    PwOutcome out;
    out.bound = pw_cover_bound(p, k);
    out.phase1 = pack_or_cover_tree(g, ternary, k, options);

    if (out.phase1.is_packing()) {
        out.packed = true;
        for (const auto& m : out.phase1.packing().models) out.subgraphs.push_back(m.host);
        std::sort(out.subgraphs.begin(), out.subgraphs.end());
        if (options.debug_assertions)
            for (const auto& s : out.subgraphs)
                if (pathwidth_exact(induced_subgraph(g, s), options.decomposition).width < p)
                    throw invariant_violation("packed subgraph has pathwidth below p");
        return out;
    }

    out.cover_phase1 = out.phase1.cover().vertices;
    if (static_cast<long long>(out.cover_phase1.size()) > t_p * (k - 1))
        throw invariant_violation("phase-1 cover exceeds |V(T_p)|(k-1)");

    Graph residual = remove_vertices(g, out.cover_phase1);
    auto [res_width, res_pd] = pathwidth_exact(residual, options.decomposition);
    // No T_p minor left, so the residual pathwidth is below t_p - 1.
    if (res_width > t_p - 2)
        throw invariant_violation("residual pathwidth contradicts the excluded ternary tree");

    auto oracle = pw_member_oracle(residual, p, options.decomposition);
    HellyResult helly = helly_pack_or_stab(residual, res_pd, *oracle, k);

    VertexSet rest = set_difference(all_vertices(g), out.cover_phase1);
    auto lift = [&](const VertexSet& local) {
        VertexSet lifted;
        lifted.reserve(local.size());
        for (int v : local) lifted.push_back(rest[v]);
        std::sort(lifted.begin(), lifted.end());
        return lifted;
    };

    if (helly.packed) {
        out.packed = true;
        for (const auto& member : helly.members) out.subgraphs.push_back(lift(member));
        std::sort(out.subgraphs.begin(), out.subgraphs.end());
        return out;
    }

    out.packed = false;
    out.stab_bags = helly.stab_bags;
    for (int r : helly.stab_bags)
        out.cover_phase2 = set_union(out.cover_phase2, lift(res_pd.bags[r - 1]));
    if (static_cast<long long>(out.cover_phase2.size()) >
        static_cast<long long>(k - 1) * (t_p - 1))
        throw invariant_violation("phase-2 cover exceeds (k-1) bags of residual width");
    out.cover = set_union(out.cover_phase1, out.cover_phase2);
    if (static_cast<long long>(out.cover.size()) > out.bound)
        throw invariant_violation("pathwidth cover exceeds 2*3^(p+1)*k");
    if (pathwidth_exact(remove_vertices(g, out.cover), options.decomposition).width >= p)
        throw invariant_violation("cover fails to reduce pathwidth below p");
    return out;
}

} // namespace epk
