#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "epacker/errors.hpp"

namespace epk {

// A set of vertex identifiers of some graph, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Finite simple undirected graph. Vertices are dense integers 0..n-1 plus a
// label map carrying the original names, so that answers computed on derived
// (induced) graphs can be reported in the coordinates of the graph the user
// supplied. Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Throws domain_error on self-loops, parallel edges or out-of-range
    // endpoints. An empty label vector means identity labels.
    Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(int u, int v) const;

    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    const std::vector<int>& labels() const { return labels_; }
    int label_of(int v) const;

    // Inverse of the label map; throws domain_error for unknown labels.
    int vertex_with_label(int label) const;

    bool same_structure(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> labels_;
};

// Throws domain_error unless S is sorted, duplicate-free and within V(G).
void validate_vertex_set(const Graph& g, const VertexSet& s, const char* what);

VertexSet all_vertices(const Graph& g);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
bool is_subset(const VertexSet& a, const VertexSet& b);

// G[S]: vertex k of the result is S[k] (S sorted ascending); labels inherited.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// G - X = G[V(G) \ X].
Graph remove_vertices(const Graph& g, const VertexSet& x);

// {v in S | v has a neighbor outside S}.
VertexSet boundary(const Graph& g, const VertexSet& s);

// Partition of V(G) into maximal connected sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

// Vertices of `a` keep their ids, vertices of `b` are shifted by a.n.
// Labels of `b` are shifted past max(label of a) to stay unique.
Graph disjoint_union(const Graph& a, const Graph& b);

namespace bits {

// Bitmask helpers for the exact search modules (hosts capped at 32 vertices).
using Mask = std::uint32_t;

void require_mask_capacity(const Graph& g, const char* what);
Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);
std::vector<Mask> adjacency_masks(const Graph& g);

// True iff the vertices of m induce a connected subgraph (empty mask: false).
bool mask_connected(const std::vector<Mask>& adj, Mask m);

} // namespace bits

} // namespace epk
