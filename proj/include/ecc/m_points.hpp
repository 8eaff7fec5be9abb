#ifndef ECC_M_POINTS_HPP
#define ECC_M_POINTS_HPP

#include <cstdint>
#include <vector>

#include "ecc/dfs_frame.hpp"

namespace ecc {

/// Maximum points and the chains linking vertices that share one.
/// Indexed by preorder like DfsFrame; kNoVertex marks "undefined".
struct MPointTable {
    std::vector<Vertex> m;        // nca of the upper ends of B(v)
    std::vector<Vertex> m_tilde;  // same, restricted to proper descendants of m(v)
    std::vector<Vertex> m_low1;   // restricted to T(c1(m(v)))
    std::vector<Vertex> m_low2;   // restricted to T(c2(m(v)))
    std::vector<Vertex> next_m;   // largest v' < v with m(v') == m(v)
    std::vector<Vertex> prev_m;   // smallest v' > v with m(v') == m(v)

    // Lowest lower end over B(v) \ B(next_m(v)), with the lowest upper end
    // in T(m(v)) for it. Filled by compute_low_m.
    std::vector<Vertex> low_m;
    std::vector<Vertex> low_md;
    std::vector<EdgeId> low_m_edge;
};

struct LowMStats {
    std::int64_t cursor_advances = 0;  // total In-list steps, bounded by the back-edge count
    std::int64_t descents = 0;
};

/// Computes m, m_tilde, m_low1, m_low2 and the next/prev chains.
///
/// One upward sweep over the vertices keeps the upper ends of all back-edges
/// whose lower end lies above the current vertex in a successor structure;
/// the nca of a set of preorder numbers is the nca of its extremes, answered
/// from a sparse table. O(m + n log n).
///
/// Throws PreconditionError("not 2-edge-connected") if b_count(v) == 0 for
/// some v != root.
MPointTable compute_m_points(const DfsFrame& frame);

/// Fills low_m / low_md / low_m_edge for every v with next_m(v) defined,
/// following the bottom-up descent with persistent In-list cursors.
/// Requires a 3-edge-connected input; fails fast with PreconditionError when
/// some b_count(v) < 2 and with std::logic_error if a descent runs off its path.
LowMStats compute_low_m(const DfsFrame& frame, MPointTable& table);

}  // namespace ecc

#endif  // ECC_M_POINTS_HPP
