#ifndef ECC_ORACLE_HPP
#define ECC_ORACLE_HPP

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "ecc/dfs_frame.hpp"
#include "ecc/multigraph.hpp"

// Brute-force ground truth. Nothing in here reuses the fast path beyond the
// Multigraph type and the DFS tree (parent links and preorder numbers) of a
// frame; every parameter is evaluated literally from explicit B(v) sets.
namespace ecc::oracle {

inline constexpr EdgeId kBruteForceEdgeLimit = 40;
inline constexpr Vertex kPairwiseVertexLimit = 64;

using Triple = std::array<EdgeId, 3>;

/// Every 3-subset of edges whose removal disconnects g (ascending triples).
/// Throws PreconditionError above kBruteForceEdgeLimit edges.
std::set<Triple> brute_3cuts(const Multigraph& g);

/// min(cap, number of edge-disjoint u-v paths), by unit-capacity augmenting paths.
std::int32_t pair_edge_connectivity(const Multigraph& g, Vertex u, Vertex v, std::int32_t cap);

/// Classes of the relation "pair_edge_connectivity >= k".
/// Throws PreconditionError above kPairwiseVertexLimit vertices.
Partition kecc_partition_oracle(const Multigraph& g, std::int32_t k);

/// Every DFS parameter evaluated from its definition. Indexed by preorder
/// number; kNoVertex marks undefined. Witness fields are candidate sets.
struct ParamTable {
    Vertex n = 0;
    std::vector<std::vector<EdgeId>> b;  // B(v), ascending edge ids
    std::vector<std::int32_t> b_count;
    std::vector<Vertex> l1, l2;
    std::vector<Vertex> low1, low2, high;
    std::vector<std::set<EdgeId>> low1_edges;  // back-edges of B(v) ending at low1(v)
    std::vector<std::set<EdgeId>> low2_edges;  // ... ending at low2(v)
    std::vector<std::set<Vertex>> high_d;      // upper ends of back-edges of B(v) ending at high(v)
    std::vector<std::vector<Vertex>> children; // sorted by low1 (undefined last), ties by preorder
    std::vector<Vertex> m, m_tilde, m_low1, m_low2, next_m, prev_m;
    std::vector<Vertex> low_m;
    std::vector<std::set<Vertex>> low_md;      // upper ends x of B(v) \ B(next_m(v)) edges ending at low_m(v)
    std::vector<Vertex> low_md_min;            // lowest x in T(m(v)) with (x, low_m(v)) a back-edge

    std::vector<Vertex> parent;
    std::vector<EdgeId> tree_edge;
    std::vector<Vertex> back_upper, back_lower;  // by edge id, kNoVertex for non-back-edges

    /// Ancestor test by walking parent links.
    bool is_ancestor(Vertex a, Vertex d) const;
    Vertex child(Vertex v, std::size_t i) const {
        return i >= 1 && i <= children[v].size() ? children[v][i - 1] : kNoVertex;
    }
};

ParamTable params_from_definitions(const Multigraph& g, const DfsFrame& frame);

/// A type-2 pair (u, v) with v a proper ancestor of u and B(v) = B(u) + {e}.
struct VSidePair {
    Vertex u;
    Vertex v;
    EdgeId e;
    friend auto operator<=>(const VSidePair&, const VSidePair&) = default;
};

/// All (u, v, e) with B(v) = B(u) + {e}, from the explicit sets.
std::set<VSidePair> v_side_pairs_from_sets(const ParamTable& p);

/// All (u, v) selected by the high-point rule: for m in {m_tilde(v),
/// m_low1(v), m_low2(v)}, u is the least vertex of m^-1(m) above v, and
/// high(u) < v and b_count(v) == b_count(u) + 1. e is left as kNoEdge.
std::set<VSidePair> v_side_pairs_by_high(const ParamTable& p);

}  // namespace ecc::oracle

#endif  // ECC_ORACLE_HPP
