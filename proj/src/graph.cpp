#include "epacker/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace epk {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> labels)
    : n_(n) {
    if (n < 0) throw domain_error("vertex count must be nonnegative");
    if (labels.empty()) {
        labels_.resize(n);
        std::iota(labels_.begin(), labels_.end(), 0);
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw domain_error("label vector size does not match vertex count");
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw domain_error("vertex labels must be unique");
        labels_ = std::move(labels);
    }
    for (auto& [u, v] : edges) {
        if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw domain_error("edge endpoint out of range: " + std::to_string(u) + " " +
                               std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw domain_error("parallel edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (!has_vertex(v)) throw domain_error("unknown vertex " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::label_of(int v) const {
    if (!has_vertex(v)) throw domain_error("unknown vertex " + std::to_string(v));
    return labels_[v];
}

int Graph::vertex_with_label(int label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    throw domain_error("unknown vertex label " + std::to_string(label));
}

void validate_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
    int prev = -1;
    for (int v : s) {
        if (!g.has_vertex(v))
            throw domain_error(std::string(what) + ": unknown vertex " + std::to_string(v));
        if (v <= prev)
            throw domain_error(std::string(what) + ": vertex set not sorted/unique");
        prev = v;
    }
}

VertexSet all_vertices(const Graph& g) {
    VertexSet s(g.vertex_count());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s, "induced_subgraph");
    std::vector<int> pos(g.vertex_count(), -1);
    for (int k = 0; k < static_cast<int>(s.size()); ++k) pos[s[k]] = k;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    std::vector<int> labels;
    labels.reserve(s.size());
    for (int v : s) labels.push_back(g.label_of(v));
    int n = static_cast<int>(s.size());
    return Graph(n, std::move(edges), std::move(labels));
}

Graph remove_vertices(const Graph& g, const VertexSet& x) {
    validate_vertex_set(g, x, "remove_vertices");
    return induced_subgraph(g, set_difference(all_vertices(g), x));
}

VertexSet boundary(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s, "boundary");
    VertexSet out;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (!set_contains(s, u)) {
                out.push_back(v);
                break;
            }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[v]) continue;
        VertexSet comp;
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool is_acyclic(const Graph& g) {
    // A simple graph is a forest iff every component has |E| = |V| - 1.
    int comp_count = static_cast<int>(connected_components(g).size());
    return g.edge_count() == g.vertex_count() - comp_count;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int shift = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    int label_shift = 0;
    for (int l : a.labels()) label_shift = std::max(label_shift, l + 1);
    std::vector<int> labels = a.labels();
    for (int l : b.labels()) labels.push_back(l + label_shift);
    return Graph(a.vertex_count() + b.vertex_count(), std::move(edges), std::move(labels));
}

namespace bits {

void require_mask_capacity(const Graph& g, const char* what) {
    if (g.vertex_count() > 32)
        throw capacity_error(std::string(what) + ": graph has " +
                             std::to_string(g.vertex_count()) +
                             " vertices, bitset search supports at most 32");
}

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    return m;
}

VertexSet from_mask(Mask m) {
    VertexSet s;
    while (m) {
        int v = std::countr_zero(m);
        s.push_back(v);
        m &= m - 1;
    }
    return s;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    require_mask_capacity(g, "adjacency_masks");
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

bool mask_connected(const std::vector<Mask>& adj, Mask m) {
    if (m == 0) return false;
    Mask reached = m & (~m + 1); // lowest set bit
    for (;;) {
        Mask frontier = 0;
        Mask probe = reached;
        while (probe) {
            int v = std::countr_zero(probe);
            probe &= probe - 1;
            frontier |= adj[v] & m;
        }
        Mask next = reached | frontier;
        if (next == reached) break;
        reached = next;
    }
    return reached == m;
}

} // namespace bits

} // namespace epk
