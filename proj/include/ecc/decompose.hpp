#ifndef ECC_DECOMPOSE_HPP
#define ECC_DECOMPOSE_HPP

#include <vector>

#include "ecc/dfs_frame.hpp"
#include "ecc/m_points.hpp"
#include "ecc/multigraph.hpp"

namespace ecc {

/// Carries a cut with fewer than three edges (empty when the input is
/// disconnected).
class NotThreeEdgeConnectedError : public PreconditionError {
public:
    explicit NotThreeEdgeConnectedError(std::vector<EdgeId> witness);
    const std::vector<EdgeId>& witness() const { return witness_; }

private:
    std::vector<EdgeId> witness_;
};

struct TwoEccResult {
    Partition classes;
    std::vector<EdgeId> bridges;  // ascending
};

/// Bridges are the tree edges (v, p(v)) with b_count(v) == 0; handles
/// disconnected input component by component.
TwoEccResult two_ecc(const Multigraph& g);

struct ThreeEcCheck {
    bool ok = false;
    std::vector<EdgeId> witness;  // empty: disconnected; 1 edge: bridge; 2 edges: 2-cut
};

/// Exact 3-edge-connectivity test in one DFS: connected, every b_count >= 2,
/// and no two vertices v = next_m(u) with equal b_count (equal B sets).
ThreeEcCheck check_3ec(const Multigraph& g);
bool is_3ec(const Multigraph& g);

/// The same test on the frame of a connected graph. When the frame is
/// 2-edge-connected, `table` (if given) receives its M-points.
ThreeEcCheck check_3ec(const DfsFrame& frame, MPointTable* table = nullptr);

/// One 3-edge-connected class and the graph that stands for it. Vertices of
/// `graph` are the class members in ascending order; virtual edges replace
/// the 2-cut channels to the rest of the original graph.
struct SplitGraph {
    Multigraph graph;
    std::vector<Vertex> members;      // by member vertex, [0] unused
    std::vector<EdgeId> origin_edge;  // by member edge; kNoEdge for virtual edges

    bool is_virtual(EdgeId e) const { return origin_edge[static_cast<std::size_t>(e)] == kNoEdge; }
};

struct ThreeEccResult {
    Partition classes;
    std::vector<SplitGraph> split_graphs;  // one per class with two or more vertices
};

/// 3-edge-connected components by recursively splitting every 2-edge-connected
/// component along 2-cuts, adding one virtual edge to each side.
ThreeEccResult three_ecc(const Multigraph& g);

/// 4-edge-connected components of a 3-edge-connected graph: two vertices
/// share a class iff no 3-cut separates them. Throws
/// NotThreeEdgeConnectedError otherwise.
Partition four_ecc_3ec(const Multigraph& g);

/// 4-edge-connected components of any multigraph.
Partition four_ecc(const Multigraph& g);

/// k-edge-connected components for k in 1..4.
Partition kecc(const Multigraph& g, int k);

}  // namespace ecc

#endif  // ECC_DECOMPOSE_HPP
