#ifndef ECC_CUT_ENUM_HPP
#define ECC_CUT_ENUM_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecc/dfs_frame.hpp"
#include "ecc/m_points.hpp"
#include "ecc/multigraph.hpp"

namespace ecc {

/// Which rule produced a cut. The v-side rules find B(v) = B(u) + {e}
/// (u below v), the u-side rules find B(u) = B(v) + {e}.
enum class CutSource : std::uint8_t {
    kType1,
    kVSideTilde,  // u in m^-1(m_tilde(v)), e leaves m(v)
    kVSideLow1,   // u in m^-1(m_low1(v)), e leaves m_low2(v)
    kVSideLow2,   // u in m^-1(m_low2(v)), e leaves m_low1(v)
    kUSideSameM,  // v = next_m(u), e = (low_md(u), low_m(u))
    kUSideTilde,  // v in m^-1(m_tilde(u)), e leaves m(u)
    kUSideLow1,   // v in m^-1(m_low1(u)), e leaves m_low2(u)
};

const char* to_string(CutSource source);

/// A 3-edge cut. `edges` is ascending. `type` counts the edges that belong to
/// the DFS tree of the input graph (round 0).
///
/// Witness: u and v are the tree-edge children for type-2 cuts and v alone
/// for type-1 cuts; both are preorder numbers when the cut comes straight
/// from a pass over a frame, and original vertex ids in the output of
/// all_3cuts. Type-3 cuts carry only the contraction round.
struct Cut3 {
    std::array<EdgeId, 3> edges{};
    std::int32_t type = 0;
    CutSource source = CutSource::kType1;
    std::int32_t round = 0;
    Vertex u = kNoVertex;
    Vertex v = kNoVertex;
    EdgeId back_edge = kNoEdge;
};

/// Number of nextM steps taken by each chain-walking pass of one frame.
struct PassCounters {
    std::array<std::int64_t, 3> v_side_walk{};  // tilde, low1, low2
    std::array<std::int64_t, 2> u_side_walk{};  // tilde, low1
};

struct RoundStats {
    std::int32_t round = 0;
    Vertex vertices = 0;
    EdgeId edges = 0;
    std::size_t cuts = 0;
    PassCounters walks;
    std::int64_t cursor_advances = 0;
    std::int64_t back_edges = 0;
};

struct CutEnumStats {
    std::vector<RoundStats> rounds;
    std::vector<std::pair<std::string, double>> phase_millis;

    void add_time(const std::string& phase, double millis);
};

struct CutOptions {
    bool require_3ec = true;       // run the 3-edge-connectivity check first
    bool verify_each_cut = false;  // re-check every emitted triple by traversal
    bool parallel_passes = false;  // run the v-side and u-side searches concurrently
};

/// {(v, p(v)), both back-edges of B(v)} for every v with b_count(v) == 2.
std::vector<Cut3> type1_cuts(const DfsFrame& frame);

/// Type-2 cuts with B(v) = B(u) + {e}: three passes (m = m_tilde(v),
/// m_low1(v), m_low2(v)), each walking the nextM chain of m from the bottom
/// with a per-pass cursor. No high points are needed.
std::vector<Cut3> type2_cuts_v_side(const DfsFrame& frame, const MPointTable& table,
                                    PassCounters* counters = nullptr);

/// Type-2 cuts with B(u) = B(v) + {e}: the next_m(u) check plus two
/// chain-walking passes (m = m_tilde(u), m_low1(u)). Needs low_m filled.
std::vector<Cut3> type2_cuts_u_side(const DfsFrame& frame, const MPointTable& table,
                                    PassCounters* counters = nullptr);

/// Runs the type-1 and type-2 searches on g, then contracts every back-edge
/// of the DFS tree and repeats on the contracted graph until one vertex is
/// left. Cuts from later rounds consist of tree edges of the first tree
/// (type 3). Edge ids are those of g; may contain duplicates.
std::vector<Cut3> type3_cuts(const Multigraph& g, const CutOptions& options = {}, CutEnumStats* stats = nullptr);

/// Every 3-edge cut of a 3-edge-connected graph, deduplicated and sorted by
/// edge triple. Throws NotThreeEdgeConnectedError when require_3ec is set
/// and the input has a cut with fewer than three edges.
std::vector<Cut3> all_3cuts(const Multigraph& g, const CutOptions& options = {}, CutEnumStats* stats = nullptr);

}  // namespace ecc

#endif  // ECC_CUT_ENUM_HPP
