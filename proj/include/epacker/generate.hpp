#pragma once

#include <cstdint>

#include "epacker/graph.hpp"

namespace epk {

Graph make_complete(int n);
Graph make_path(int n);

// Star with `leaves` leaf vertices: vertex 0 is the center, leaves+1 vertices.
Graph make_star(int leaves);

Graph make_cycle(int n); // n >= 3

// Complete ternary tree of height p (edge counting): (3^(p+1)-1)/2 vertices,
// every internal vertex has 3 children, all leaves at depth p. Vertex 0 is
// the root, children of v are 3v+1, 3v+2, 3v+3.
Graph make_complete_ternary_tree(int height);

// G(n, p) with each pair drawn independently; reproducible from the seed.
Graph make_erdos_renyi(int n, double edge_probability, std::uint64_t seed);

} // namespace epk
