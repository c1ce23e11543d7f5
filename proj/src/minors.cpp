#include "epacker/minors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>

namespace epk {

using bits::Mask;

Tree::Tree(Graph g) : graph_(std::move(g)) {
    if (graph_.vertex_count() < 1) throw domain_error("tree must have at least one vertex");
    if (!is_connected(graph_)) throw domain_error("tree pattern is not connected");
    if (graph_.edge_count() != graph_.vertex_count() - 1)
        throw domain_error("tree pattern has a cycle");
}

Forest::Forest(const Graph& g) {
    if (g.vertex_count() < 1) throw domain_error("forest must have at least one vertex");
    if (!is_acyclic(g)) throw domain_error("forest pattern has a cycle");
    for (const auto& comp : connected_components(g))
        components_.emplace_back(induced_subgraph(g, comp));
    std::stable_sort(components_.begin(), components_.end(),
                     [](const Tree& a, const Tree& b) { return a.t() < b.t(); });
    for (const auto& c : components_) total_ += c.t();
    max_ = components_.back().t();
}

ModelValidation validate_model(const Graph& host, const Tree& pattern, const MinorModel& model) {
    ModelValidation result;
    auto flag = [&](const std::string& msg) {
        result.ok = false;
        result.violations.push_back(msg);
    };
    int t = pattern.t();
    if (static_cast<int>(model.branch_sets.size()) != t) {
        flag("model has " + std::to_string(model.branch_sets.size()) + " branch sets, pattern has " +
             std::to_string(t) + " vertices");
        return result;
    }
    for (int p = 0; p < t; ++p) {
        const auto& bs = model.branch_sets[p];
        try {
            validate_vertex_set(host, bs, "branch set");
        } catch (const domain_error& e) {
            flag(std::string(e.what()) + " (pattern vertex " + std::to_string(p) + ")");
            return result;
        }
        if (bs.empty()) {
            flag("branch set of pattern vertex " + std::to_string(p) + " is empty");
            continue;
        }
        if (!is_connected(induced_subgraph(host, bs)))
            flag("branch set of pattern vertex " + std::to_string(p) + " is not connected");
    }
    for (int p = 0; p < t; ++p)
        for (int q = p + 1; q < t; ++q) {
            auto common = set_intersection(model.branch_sets[p], model.branch_sets[q]);
            if (!common.empty())
                flag("branch sets of pattern vertices " + std::to_string(p) + " and " +
                     std::to_string(q) + " share host vertex " + std::to_string(common.front()));
        }
    for (auto [p, q] : pattern.graph().edges()) {
        bool realized = false;
        for (int u : model.branch_sets[p]) {
            for (int v : model.branch_sets[q])
                if (host.has_edge(u, v)) {
                    realized = true;
                    break;
                }
            if (realized) break;
        }
        if (!realized)
            flag("pattern edge " + std::to_string(p) + "-" + std::to_string(q) +
                 " has no host edge between its branch sets");
    }
    return result;
}

namespace {

// Pattern vertices ordered by BFS from a centroid; every non-root position
// has its unique earlier neighbor (its BFS parent) recorded, so all pattern
// edges are (parent, child) pairs along the placement order.
struct PatternOrder {
    std::vector<int> vertex_at;   // position -> pattern vertex
    std::vector<int> position_of; // pattern vertex -> position
    std::vector<int> parent_pos;  // position -> parent position (-1 for root)
};

int centroid_of(const Graph& tree) {
    int t = tree.vertex_count();
    int best = 0, best_weight = t + 1;
    for (int root = 0; root < t; ++root) {
        // Weight of root = largest component of tree - root.
        int max_comp = 0;
        std::vector<char> seen(t, 0);
        seen[root] = 1;
        for (int s = 0; s < t; ++s) {
            if (seen[s]) continue;
            int size = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                ++size;
                for (int w : tree.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            max_comp = std::max(max_comp, size);
        }
        if (max_comp < best_weight) {
            best_weight = max_comp;
            best = root;
        }
    }
    return best;
}

PatternOrder order_pattern(const Tree& pattern) {
    const Graph& g = pattern.graph();
    int t = g.vertex_count();
    PatternOrder order;
    order.vertex_at.reserve(t);
    order.position_of.assign(t, -1);
    order.parent_pos.reserve(t);
    int root = centroid_of(g);
    std::vector<int> queue{root};
    order.position_of[root] = 0;
    order.vertex_at.push_back(root);
    order.parent_pos.push_back(-1);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (order.position_of[w] >= 0) continue;
            order.position_of[w] = static_cast<int>(order.vertex_at.size());
            order.vertex_at.push_back(w);
            order.parent_pos.push_back(order.position_of[u]);
            queue.push_back(w);
        }
    }
    return order;
}

// Backtracking embedder: branch sets are grown position by position as
// connected sets of unused host vertices attached to the parent's set.
// Candidate sets are produced by the exclusion scheme for connected-subgraph
// enumeration, so each set is tried exactly once per anchor choice.
class TreeSearch {
public:
    TreeSearch(const std::vector<Mask>& adj, int host_n, SearchBudget& budget)
        : adj_(adj), host_n_(host_n), budget_(budget) {}

    // on_complete sees branch sets indexed by pattern vertex and returns
    // true to stop the whole search.
    bool run(const PatternOrder& order, Mask blocked,
             const std::function<bool(const std::vector<Mask>&)>& on_complete) {
        order_ = &order;
        blocked_ = blocked;
        on_complete_ = &on_complete;
        int t = static_cast<int>(order.vertex_at.size());
        sets_.assign(t, 0);
        used_ = blocked;
        return place(0);
    }

private:
    Mask full_mask() const {
        return host_n_ == 32 ? ~Mask{0} : ((Mask{1} << host_n_) - 1);
    }

    Mask neighbors_of_set(Mask m) const {
        Mask out = 0;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out |= adj_[v];
        }
        return out;
    }

    bool place(int pos) {
        budget_.tick("minor search");
        int t = static_cast<int>(order_->vertex_at.size());
        if (pos == t) {
            // Reindex by pattern vertex before reporting.
            std::vector<Mask> by_vertex(t, 0);
            for (int p = 0; p < t; ++p) by_vertex[order_->vertex_at[p]] = sets_[p];
            return (*on_complete_)(by_vertex);
        }
        Mask free = full_mask() & ~used_;
        int remaining_after = t - pos - 1;
        if (std::popcount(free) < t - pos) return false;
        Mask anchors;
        if (pos == 0)
            anchors = free;
        else
            anchors = neighbors_of_set(sets_[order_->parent_pos[pos]]) & free;
        Mask banned = 0;
        while (anchors) {
            int a = std::countr_zero(anchors);
            anchors &= anchors - 1;
            Mask seed = Mask{1} << a;
            Mask cand = adj_[a] & free & ~banned & ~seed;
            if (grow(pos, seed, cand, banned, remaining_after)) return true;
            banned |= seed;
        }
        return false;
    }

    bool grow(int pos, Mask set, Mask cand, Mask excluded, int remaining_after) {
        budget_.tick("minor search");
        sets_[pos] = set;
        used_ |= set;
        bool stop = place(pos + 1);
        used_ &= ~set;
        sets_[pos] = 0;
        if (stop) return true;
        Mask free = full_mask() & ~used_;
        // Growing further is pointless once the leftover vertices could not
        // host the remaining pattern vertices.
        if (std::popcount(free) - std::popcount(set) <= remaining_after) return false;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            Mask vbit = Mask{1} << v;
            Mask next_set = set | vbit;
            Mask next_cand = (cand | (adj_[v] & free & ~excluded)) & ~next_set & ~excluded;
            if (grow(pos, next_set, next_cand, excluded, remaining_after)) return true;
            excluded |= vbit;
        }
        return false;
    }

    const std::vector<Mask>& adj_;
    int host_n_;
    SearchBudget& budget_;
    const PatternOrder* order_ = nullptr;
    Mask blocked_ = 0;
    const std::function<bool(const std::vector<Mask>&)>* on_complete_ = nullptr;
    std::vector<Mask> sets_;
    Mask used_ = 0;
};

// Shrinks branch sets to inclusion-minimality: repeatedly drop the smallest
// droppable host vertex until none can be removed.
void minimalize(std::vector<Mask>& sets, const std::vector<Mask>& adj, const Graph& pattern_graph) {
    int t = static_cast<int>(sets.size());
    auto edge_realized = [&](int p, int q) {
        Mask nb = 0;
        Mask m = sets[p];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            nb |= adj[v];
        }
        return (nb & sets[q]) != 0;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        Mask all = 0;
        for (Mask m : sets) all |= m;
        Mask probe = all;
        while (probe) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            Mask vbit = Mask{1} << v;
            int owner = -1;
            for (int p = 0; p < t; ++p)
                if (sets[p] & vbit) owner = p;
            if (std::popcount(sets[owner]) == 1) continue;
            Mask saved = sets[owner];
            sets[owner] = saved & ~vbit;
            bool ok = bits::mask_connected(adj, sets[owner]);
            if (ok)
                for (int q : pattern_graph.neighbors(owner))
                    if (!edge_realized(owner, q)) {
                        ok = false;
                        break;
                    }
            if (ok)
                changed = true;
            else
                sets[owner] = saved;
        }
    }
}

MinorModel model_from_masks(const std::vector<Mask>& sets) {
    MinorModel model;
    model.branch_sets.reserve(sets.size());
    for (Mask m : sets) model.branch_sets.push_back(bits::from_mask(m));
    return model;
}

} // namespace

std::optional<MinorModel> find_tree_minor(const Graph& host, const Tree& pattern,
                                          SearchBudget& budget) {
    bits::require_mask_capacity(host, "find_tree_minor");
    if (host.vertex_count() < pattern.t()) return std::nullopt;
    auto adj = bits::adjacency_masks(host);
    PatternOrder order = order_pattern(pattern);
    std::optional<MinorModel> found;
    TreeSearch search(adj, host.vertex_count(), budget);
    search.run(order, 0, [&](const std::vector<Mask>& sets) {
        std::vector<Mask> shrunk = sets;
        minimalize(shrunk, adj, pattern.graph());
        found = model_from_masks(shrunk);
        return true;
    });
    return found;
}

std::optional<MinorModel> find_tree_minor(const Graph& host, const Tree& pattern) {
    SearchBudget budget;
    return find_tree_minor(host, pattern, budget);
}

std::optional<std::vector<MinorModel>> find_forest_minor(const Graph& host, const Forest& forest,
                                                         SearchBudget& budget) {
    bits::require_mask_capacity(host, "find_forest_minor");
    if (host.vertex_count() < forest.total_vertices()) return std::nullopt;
    auto adj = bits::adjacency_masks(host);
    int c = forest.component_count();
    // Largest component first; ties by component index.
    std::vector<int> attempt_order(c);
    std::iota(attempt_order.begin(), attempt_order.end(), 0);
    std::stable_sort(attempt_order.begin(), attempt_order.end(), [&](int a, int b) {
        return forest.components()[a].t() > forest.components()[b].t();
    });
    std::vector<PatternOrder> orders;
    orders.reserve(c);
    for (int i = 0; i < c; ++i) orders.push_back(order_pattern(forest.components()[i]));

    std::vector<std::vector<Mask>> placed(c);
    bool done = false;
    std::function<bool(int, Mask)> chain = [&](int level, Mask blocked) -> bool {
        if (level == c) {
            done = true;
            return true;
        }
        int comp = attempt_order[level];
        TreeSearch search(adj, host.vertex_count(), budget);
        return search.run(orders[comp], blocked, [&](const std::vector<Mask>& sets) {
            std::vector<Mask> shrunk = sets;
            minimalize(shrunk, adj, forest.components()[comp].graph());
            placed[comp] = shrunk;
            Mask next_blocked = blocked;
            for (Mask m : shrunk) next_blocked |= m;
            return chain(level + 1, next_blocked);
        });
    };
    chain(0, 0);
    if (!done) return std::nullopt;
    std::vector<MinorModel> models;
    models.reserve(c);
    for (int i = 0; i < c; ++i) models.push_back(model_from_masks(placed[i]));
    return models;
}

std::optional<std::vector<MinorModel>> find_forest_minor(const Graph& host, const Forest& forest) {
    SearchBudget budget;
    return find_forest_minor(host, forest, budget);
}

std::string format_model(const Graph& host, const MinorModel& model) {
    std::ostringstream out;
    for (size_t p = 0; p < model.branch_sets.size(); ++p) {
        out << p << ": {";
        const auto& bs = model.branch_sets[p];
        for (size_t i = 0; i < bs.size(); ++i) {
            if (i) out << ", ";
            out << host.label_of(bs[i]);
        }
        out << "}\n";
    }
    return out.str();
}

} // namespace epk
