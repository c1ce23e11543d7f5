#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "epacker/decomposition.hpp"
#include "epacker/graph.hpp"
#include "epacker/solver.hpp"

namespace epk {

// Query interface over an implicit family of connected subgraphs of a fixed
// working graph. The family itself is never materialized; queries restrict
// it to induced subgraphs. A returned member is a vertex set inducing a
// connected member of the family inside `allowed`; nullopt means the
// restricted family is empty.
class MemberOracle {
public:
    virtual ~MemberOracle() = default;
    virtual const Graph& base() const = 0;
    virtual std::optional<VertexSet> find_in(const VertexSet& allowed) = 0;
};

// Family of all single edges of the base graph.
std::unique_ptr<MemberOracle> edge_member_oracle(const Graph& base);

// Family of connected subgraphs of the base graph with pathwidth >= p.
// Answers by scanning connected vertex subsets of the allowed region in
// increasing size, so returned members are inclusion-minimal.
std::unique_ptr<MemberOracle> pw_member_oracle(const Graph& base, int p,
                                               const DecompositionLimits& limits = {});

struct HellyResult {
    bool packed = false;
    std::vector<VertexSet> members; // packed: the d disjoint members
    std::vector<int> stab_bags;     // 1-based bag positions, ascending
};

// Bag-stabbing dichotomy on a path decomposition: either d pairwise
// disjoint members of the oracle's family, or at most d-1 bags whose union
// meets every member. The packing side is decided exactly (a greedy sweep
// alone can miss packings whose members share a bag); the stabbing side is
// the left-to-right greedy sweep, whose selected bags provably hit every
// member.
HellyResult helly_pack_or_stab(const Graph& g, const PathDecomposition& pd, MemberOracle& oracle,
                               int d);

struct PwOutcome {
    bool packed = false;
    std::vector<VertexSet> subgraphs; // packed: k disjoint sets, each pw >= p
    VertexSet cover;                  // X = X1 u X2
    VertexSet cover_phase1;           // X1 from the tree solver
    VertexSet cover_phase2;           // X2 = union of stab bags
    std::vector<int> stab_bags;       // positions in the residual decomposition
    long long bound = 0;              // 2 * 3^(p+1) * k
    Outcome phase1;                   // underlying ternary-tree solve
};

// Two-phase procedure: pack-or-cover with the complete ternary tree of
// height p, then bag stabbing with the pathwidth->=p family on the residual
// graph. Either k disjoint subgraphs of pathwidth >= p, or X with
// |X| <= 2*3^(p+1)*k and pw(G - X) < p (re-checked before returning).
PwOutcome pathwidth_pack_or_cover(const Graph& g, int p, int k, const SolveOptions& options = {});

long long pw_cover_bound(int p, int k);

} // namespace epk
