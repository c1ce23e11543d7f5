#include "epacker/solver.hpp"

#include <algorithm>
#include <numeric>

namespace epk {

Instance::Instance(Graph g, std::vector<Tree> trees, std::vector<int> multiplicities)
    : graph_(std::move(g)), trees_(std::move(trees)), x_(std::move(multiplicities)) {
    if (trees_.empty()) throw domain_error("instance needs at least one pattern tree");
    if (x_.size() != trees_.size())
        throw domain_error("instance has " + std::to_string(trees_.size()) + " trees but " +
                           std::to_string(x_.size()) + " multiplicities");
    for (size_t i = 1; i < trees_.size(); ++i)
        if (trees_[i - 1].t() > trees_[i].t())
            throw domain_error("instance trees must be sorted by ascending size");
    bool any = false;
    for (int v : x_) {
        if (v < 0) throw domain_error("multiplicities must be nonnegative");
        any = any || v >= 1;
    }
    if (!any) throw domain_error("at least one multiplicity must be positive");
}

std::vector<int> Instance::active_indices() const {
    std::vector<int> active;
    for (int i = 0; i < tree_count(); ++i)
        if (x_[i] >= 1) active.push_back(i);
    return active;
}

int Instance::smallest_active() const { return active_indices().front(); }

long long Instance::missing_models() const {
    return std::accumulate(x_.begin(), x_.end(), 0LL);
}

long long Instance::cover_bound() const {
    auto active = active_indices();
    long long sum = 0;
    for (int i : active) sum += static_cast<long long>(x_[i]) * trees_[i].t();
    return sum - trees_[active.back()].t();
}

namespace {

long long cover_bound_for(const std::vector<Tree>& trees, const std::vector<int>& x) {
    long long sum = 0;
    int max_active = -1;
    for (int i = 0; i < static_cast<int>(trees.size()); ++i)
        if (x[i] >= 1) {
            sum += static_cast<long long>(x[i]) * trees[i].t();
            max_active = i;
        }
    return sum - trees[max_active].t();
}

VertexSet lift(const VertexSet& local, const std::vector<int>& origin) {
    VertexSet out;
    out.reserve(local.size());
    for (int v : local) out.push_back(origin[v]);
    std::sort(out.begin(), out.end());
    return out;
}

MinorModel lift_model(const MinorModel& local, const std::vector<int>& origin) {
    MinorModel out;
    out.branch_sets.reserve(local.branch_sets.size());
    for (const auto& bs : local.branch_sets) out.branch_sets.push_back(lift(bs, origin));
    return out;
}

struct SolveContext {
    const std::vector<Tree>& trees;
    const SolveOptions& options;
    SearchBudget budget;
    std::vector<TraceStep> trace;
};

void assert_proof_invariants(const Graph& g, const VertexSet& prefix, const VertexSet& bag,
                             const std::vector<Tree>& trees, const std::vector<int>& active,
                             SearchBudget& budget) {
    // (a) the prefix minus its last bag carries no active minor
    Graph pruned = induced_subgraph(g, set_difference(prefix, bag));
    for (int i : active)
        if (find_tree_minor(pruned, trees[i], budget))
            throw invariant_violation(
                "prefix minus selected bag still contains an active minor (tree " +
                std::to_string(i) + ")");
    // (b) no edge joins the pruned prefix to the rest of the graph
    VertexSet inner = set_difference(prefix, bag);
    VertexSet outside = set_difference(all_vertices(g), prefix);
    for (int u : inner)
        for (int v : g.neighbors(u))
            if (set_contains(outside, v))
                throw invariant_violation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                          " escapes the removed prefix outside its bag");
}

// The recursion from the proof: either assemble a packing bottom-up from
// removed prefixes, or merge the recursive cover with the selected bag.
std::variant<Packing, Cover> solve_rec(const Graph& g, const std::vector<int>& origin,
                                       std::vector<int> x, int depth, SolveContext& ctx) {
    std::vector<int> active;
    long long missing = 0;
    for (int i = 0; i < static_cast<int>(ctx.trees.size()); ++i) {
        if (x[i] >= 1) active.push_back(i);
        missing += x[i];
    }

    int found_index = -1;
    std::optional<MinorModel> found_model;
    for (int i : active) {
        found_model = find_tree_minor(g, ctx.trees[i], ctx.budget);
        if (found_model) {
            found_index = i;
            break;
        }
    }
    if (found_index < 0) {
        // No active pattern fits at all: the empty set is a valid cover.
        return Cover{{}, active.front()};
    }
    if (missing == 1) {
        PackedModel packed;
        packed.tree_index = found_index;
        packed.copy_index = x[found_index]; // = 1
        packed.host = lift(all_vertices(g), origin);
        packed.model = lift_model(*found_model, origin);
        return Packing{{std::move(packed)}};
    }

    int m = active.front();
    int t_m = ctx.trees[m].t();
    BoundedRegion region =
        extract_bounded_region(g, t_m, ctx.trees, active, ctx.budget, ctx.options.decomposition);
    PrefixChoice choice = find_smallest_prefix(g, region.pd, ctx.trees, active, ctx.budget);

    VertexSet prefix;
    for (int i = 0; i < choice.prefix_len; ++i) prefix = set_union(prefix, region.pd.bags[i]);
    const VertexSet& bag = region.pd.bags[choice.prefix_len - 1];

    if (ctx.options.debug_assertions)
        assert_proof_invariants(g, prefix, bag, ctx.trees, active, ctx.budget);

    TraceStep step;
    step.level = depth;
    step.region = lift(region.region, origin);
    for (const auto& b : region.pd.bags) step.bags.push_back(lift(b, origin));
    step.prefix_len = choice.prefix_len;
    step.tree_index = choice.tree_index;
    ctx.trace.push_back(std::move(step));

    VertexSet rest = set_difference(all_vertices(g), prefix);
    Graph next = induced_subgraph(g, rest);
    std::vector<int> next_origin;
    next_origin.reserve(rest.size());
    for (int v : rest) next_origin.push_back(origin[v]);

    std::vector<int> next_x = x;
    --next_x[choice.tree_index];

    auto sub = solve_rec(next, next_origin, next_x, depth + 1, ctx);

    if (auto* packing = std::get_if<Packing>(&sub)) {
        PackedModel packed;
        packed.tree_index = choice.tree_index;
        packed.copy_index = x[choice.tree_index];
        packed.host = lift(prefix, origin);
        packed.model = lift_model(choice.model, origin);
        packing->models.push_back(std::move(packed));
        return std::move(*packing);
    }
    Cover cover = std::get<Cover>(std::move(sub));
    cover.vertices = set_union(cover.vertices, lift(bag, origin));
    long long bound = cover_bound_for(ctx.trees, x);
    if (static_cast<long long>(cover.vertices.size()) > bound)
        throw invariant_violation("cover of size " + std::to_string(cover.vertices.size()) +
                                  " exceeds its bound " + std::to_string(bound));
    return cover;
}

} // namespace

PrefixChoice find_smallest_prefix(const Graph& g, const PathDecomposition& pd,
                                  const std::vector<Tree>& trees, const std::vector<int>& active,
                                  SearchBudget& budget) {
    int q = static_cast<int>(pd.bags.size());
    VertexSet prefix;
    for (int len = 1; len <= q; ++len) {
        VertexSet grown = set_union(prefix, pd.bags[len - 1]);
        if (len > 1 && grown == prefix) continue; // same graph, answers stay negative
        prefix = std::move(grown);
        Graph h = induced_subgraph(g, prefix);
        for (int i : active) {
            if (auto model = find_tree_minor(h, trees[i], budget)) {
                PrefixChoice choice;
                choice.prefix_len = len;
                choice.tree_index = i;
                MinorModel lifted;
                for (const auto& bs : model->branch_sets) {
                    VertexSet s;
                    s.reserve(bs.size());
                    for (int v : bs) s.push_back(prefix[v]);
                    lifted.branch_sets.push_back(std::move(s));
                }
                choice.model = std::move(lifted);
                return choice;
            }
        }
    }
    throw invariant_violation("find_smallest_prefix: no prefix contains an active minor");
}

Outcome solve(const Instance& instance, const SolveOptions& options) {
    SolveContext ctx{instance.trees(), options, SearchBudget{options.node_budget, 0}, {}};
    std::vector<int> origin(instance.graph().vertex_count());
    std::iota(origin.begin(), origin.end(), 0);
    auto result = solve_rec(instance.graph(), origin, instance.multiplicities(), 0, ctx);
    Outcome outcome;
    outcome.result = std::move(result);
    outcome.trace = std::move(ctx.trace);
    outcome.bound = instance.cover_bound();
    return outcome;
}

Outcome pack_or_cover_tree(const Graph& g, const Tree& tree, int k, const SolveOptions& options) {
    if (k < 1) throw domain_error("k must be at least 1");
    return solve(Instance(g, {tree}, {k}), options);
}

Outcome pack_or_cover_forest(const Graph& g, const Forest& forest, int k,
                             const SolveOptions& options) {
    if (k < 1) throw domain_error("k must be at least 1");
    std::vector<int> x(forest.component_count(), k);
    return solve(Instance(g, forest.components(), std::move(x)), options);
}

std::vector<std::vector<PackedModel>> forest_copies(const Packing& packing, int components,
                                                    int k) {
    std::vector<std::vector<PackedModel>> copies(k);
    for (const auto& m : packing.models) {
        if (m.copy_index < 1 || m.copy_index > k)
            throw domain_error("packing copy index out of range");
        copies[m.copy_index - 1].push_back(m);
    }
    for (auto& copy : copies) {
        std::sort(copy.begin(), copy.end(), [](const PackedModel& a, const PackedModel& b) {
            return a.tree_index < b.tree_index;
        });
        if (static_cast<int>(copy.size()) != components)
            throw domain_error("packing copy does not cover every forest component");
    }
    return copies;
}

OutcomeValidation verify_outcome(const Instance& instance, const Outcome& outcome,
                                 const SolveOptions& options) {
    OutcomeValidation result;
    auto flag = [&](const std::string& msg) {
        result.ok = false;
        result.violations.push_back(msg);
    };
    const Graph& g = instance.graph();
    auto active = instance.active_indices();

    if (outcome.bound != instance.cover_bound())
        flag("stated bound " + std::to_string(outcome.bound) + " differs from recomputed " +
             std::to_string(instance.cover_bound()));

    if (outcome.is_packing()) {
        const auto& models = outcome.packing().models;
        // multiplicity bookkeeping: exactly x_i copies 1..x_i per tree
        std::vector<std::vector<char>> seen(instance.tree_count());
        for (int i = 0; i < instance.tree_count(); ++i)
            seen[i].assign(instance.multiplicities()[i] + 1, 0);
        for (const auto& m : models) {
            if (m.tree_index < 0 || m.tree_index >= instance.tree_count()) {
                flag("model references unknown tree index " + std::to_string(m.tree_index));
                continue;
            }
            int xi = instance.multiplicities()[m.tree_index];
            if (m.copy_index < 1 || m.copy_index > xi) {
                flag("model copy index " + std::to_string(m.copy_index) + " out of range for tree " +
                     std::to_string(m.tree_index));
                continue;
            }
            if (seen[m.tree_index][m.copy_index]++)
                flag("duplicate model for tree " + std::to_string(m.tree_index) + " copy " +
                     std::to_string(m.copy_index));
        }
        for (int i = 0; i < instance.tree_count(); ++i)
            for (int j = 1; j <= instance.multiplicities()[i]; ++j)
                if (j < static_cast<int>(seen[i].size()) && !seen[i][j])
                    flag("missing model for tree " + std::to_string(i) + " copy " +
                         std::to_string(j));
        for (const auto& m : models) {
            if (m.tree_index < 0 || m.tree_index >= instance.tree_count()) continue;
            try {
                validate_vertex_set(g, m.host, "packed host");
            } catch (const domain_error& e) {
                flag(e.what());
                continue;
            }
            auto mv = validate_model(g, instance.trees()[m.tree_index], m.model);
            for (const auto& v : mv.violations)
                flag("tree " + std::to_string(m.tree_index) + " copy " +
                     std::to_string(m.copy_index) + ": " + v);
            for (const auto& bs : m.model.branch_sets)
                if (!is_subset(bs, m.host)) {
                    flag("tree " + std::to_string(m.tree_index) + " copy " +
                         std::to_string(m.copy_index) + ": branch set leaves its host subgraph");
                    break;
                }
        }
        for (size_t a = 0; a < models.size(); ++a)
            for (size_t b = a + 1; b < models.size(); ++b)
                if (!set_intersection(models[a].host, models[b].host).empty())
                    flag("packed subgraphs " + std::to_string(a) + " and " + std::to_string(b) +
                         " overlap");
    } else {
        const Cover& cover = outcome.cover();
        try {
            validate_vertex_set(g, cover.vertices, "cover");
        } catch (const domain_error& e) {
            flag(e.what());
            return result;
        }
        if (static_cast<long long>(cover.vertices.size()) > instance.cover_bound())
            flag("cover has " + std::to_string(cover.vertices.size()) +
                 " vertices, bound allows " + std::to_string(instance.cover_bound()));
        if (!std::binary_search(active.begin(), active.end(), cover.witness)) {
            flag("cover witness " + std::to_string(cover.witness) + " is not an active index");
        } else {
            Graph rest = remove_vertices(g, cover.vertices);
            SearchBudget budget{options.node_budget, 0};
            if (find_tree_minor(rest, instance.trees()[cover.witness], budget))
                flag("witness tree " + std::to_string(cover.witness) +
                     " still has a minor after removing the cover");
        }
    }
    return result;
}

} // namespace epk
