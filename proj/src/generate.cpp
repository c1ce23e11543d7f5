#include "epacker/generate.hpp"

#include <random>

namespace epk {

Graph make_complete(int n) {
    if (n < 0) throw domain_error("complete: n must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    if (n < 0) throw domain_error("path: n must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
    if (leaves < 0) throw domain_error("star: leaf count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw domain_error("cycle: n must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph make_complete_ternary_tree(int height) {
    if (height < 0) throw domain_error("complete_ternary_tree: height must be nonnegative");
    long long n = 1, layer = 1;
    for (int d = 1; d <= height; ++d) {
        layer *= 3;
        n += layer;
    }
    if (n > 100000) throw domain_error("complete_ternary_tree: height too large");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 3, v);
    return Graph(static_cast<int>(n), std::move(edges));
}

Graph make_erdos_renyi(int n, double edge_probability, std::uint64_t seed) {
    if (n < 0) throw domain_error("erdos_renyi: n must be nonnegative");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw domain_error("erdos_renyi: probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // Map the raw draw to [0,1) directly; the standard pins mt19937_64
            // output but not distribution algorithms.
            double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < edge_probability) edges.emplace_back(u, v);
        }
    return Graph(n, std::move(edges));
}

} // namespace epk
