#ifndef ECC_DFS_FRAME_HPP
#define ECC_DFS_FRAME_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ecc/multigraph.hpp"

namespace ecc {

enum class EdgeKind : std::uint8_t { kTree, kBack, kLoop };

/// A back-edge (x, y) as seen from its lower end y: x is the descendant.
struct BackEdgeRef {
    Vertex x;
    EdgeId edge;
};

/// Depth-first spanning tree of a connected multigraph together with the
/// per-vertex low-point parameters.
///
/// Every per-vertex array is indexed by preorder number (1..n, the root is
/// 1), so "u is an ancestor of v" implies u <= v. Index 0 is unused.
/// Undefined entries hold kNoVertex / kNoEdge.
///
/// B(v) is the set of back-edges (x, y) with x in T(v) and y a proper
/// ancestor of v. It is never materialized; b_count, the low points and the
/// In lists carry everything the cut algorithms need.
struct DfsFrame {
    Vertex n = 0;
    Vertex root = kNoVertex;  // original id of the start vertex

    std::vector<Vertex> vertex_of;  // preorder -> original vertex
    std::vector<Vertex> pre_of;     // original vertex -> preorder

    std::vector<Vertex> parent;
    std::vector<EdgeId> tree_edge;  // edge (v, p(v))
    std::vector<Vertex> nd;         // |T(v)|
    std::vector<Vertex> depth;
    std::vector<std::int32_t> b_count;

    // l1/l2: lowest and second lowest targets of back-edges leaving v
    // itself, or v when there is none.
    std::vector<Vertex> l1, l2;
    std::vector<EdgeId> l1_edge, l2_edge;

    // low1/low2 over B(v), counted per edge instance.
    std::vector<Vertex> low1, low1d, low2, low2d;
    std::vector<EdgeId> low1_edge, low2_edge;

    // Children ordered by low1 (undefined last), ties by preorder.
    std::vector<std::size_t> child_begin;
    std::vector<Vertex> child_list;

    // In(y): back-edges entering y, ascending by their upper end x.
    std::vector<std::size_t> in_begin;
    std::vector<BackEdgeRef> in_list;

    // By edge id. Back-edges are oriented (upper, lower) = (x, y).
    std::vector<EdgeKind> kind;
    std::vector<Vertex> upper;
    std::vector<Vertex> lower;
    std::int64_t back_edge_count = 0;

    bool is_descendant(Vertex u, Vertex v) const { return v <= u && u < v + nd[v]; }

    std::span<const Vertex> children(Vertex v) const {
        return std::span<const Vertex>(child_list).subspan(child_begin[v], child_begin[v + 1] - child_begin[v]);
    }

    /// c_i(v) for i >= 1, or kNoVertex.
    Vertex child(Vertex v, std::size_t i) const {
        const auto kids = children(v);
        return i >= 1 && i <= kids.size() ? kids[i - 1] : kNoVertex;
    }

    std::span<const BackEdgeRef> in(Vertex y) const {
        return std::span<const BackEdgeRef>(in_list).subspan(in_begin[y], in_begin[y + 1] - in_begin[y]);
    }

    /// Child endpoint (preorder) of a tree edge, kNoVertex otherwise.
    Vertex tree_child(EdgeId e) const { return kind[e] == EdgeKind::kTree ? upper[e] : kNoVertex; }
};

/// Iterative DFS from `root`, visiting neighbours in incidence order.
/// Throws PreconditionError("graph not connected") on disconnected input.
DfsFrame build_dfs_frame(const Multigraph& g, Vertex root = 1);

struct ConnectivityCertificate {
    bool is_2ec_certificate = false;    // exact: b_count(v) > 0 for all v != r
    bool passes_3ec_necessary = false;  // necessary only: b_count(v) > 1
};

ConnectivityCertificate check_connectivity_necessary(const DfsFrame& frame);

}  // namespace ecc

#endif  // ECC_DFS_FRAME_HPP
