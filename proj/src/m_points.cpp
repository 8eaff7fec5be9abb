#include "ecc/m_points.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ecc {

namespace {

// Insert-only set over [0, n) with successor/predecessor queries, stored as
// 64-ary levels of bit words.
class SuccessorSet {
public:
    static constexpr std::int64_t kNone = -1;

    explicit SuccessorSet(std::size_t n) {
        do {
            n = (n + 63) >> 6;
            levels_.emplace_back(n, 0);
        } while (n > 1);
    }

    void insert(std::int64_t i) {
        for (auto& level : levels_) {
            level[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
            i >>= 6;
        }
    }

    // Smallest member >= i.
    std::int64_t next(std::int64_t i) const {
        for (std::size_t h = 0; h < levels_.size(); ++h) {
            if (static_cast<std::size_t>(i >> 6) >= levels_[h].size()) {
                break;
            }
            const std::uint64_t word = levels_[h][static_cast<std::size_t>(i >> 6)] >> (i & 63);
            if (word == 0) {
                i = (i >> 6) + 1;
                continue;
            }
            i += std::countr_zero(word);
            for (std::size_t g = h; g-- > 0;) {
                i <<= 6;
                i += std::countr_zero(levels_[g][static_cast<std::size_t>(i >> 6)]);
            }
            return i;
        }
        return kNone;
    }

    // Largest member <= i.
    std::int64_t prev(std::int64_t i) const {
        for (std::size_t h = 0; h < levels_.size(); ++h) {
            if (i < 0) {
                break;
            }
            const std::uint64_t word = levels_[h][static_cast<std::size_t>(i >> 6)] << (63 - (i & 63));
            if (word == 0) {
                i = (i >> 6) - 1;
                continue;
            }
            i -= std::countl_zero(word);
            for (std::size_t g = h; g-- > 0;) {
                i <<= 6;
                i += 63 - std::countl_zero(levels_[g][static_cast<std::size_t>(i >> 6)]);
            }
            return i;
        }
        return kNone;
    }

private:
    std::vector<std::vector<std::uint64_t>> levels_;
};

// Nearest common ancestors in a preorder-numbered tree. For a < b the nca is
// the parent of the shallowest vertex in (a, b].
class NcaIndex {
public:
    explicit NcaIndex(const DfsFrame& frame) : frame_(frame) {
        const auto n = static_cast<std::size_t>(frame.n);
        table_.emplace_back(n + 1);
        for (std::size_t v = 0; v <= n; ++v) {
            table_.back()[v] = static_cast<Vertex>(v);
        }
        for (std::size_t width = 2; width <= n; width <<= 1) {
            const auto& below = table_.back();
            std::vector<Vertex> level(n + 1 - width + 1);
            for (std::size_t i = 0; i + width <= n + 1; ++i) {
                level[i] = shallower(below[i], below[i + width / 2]);
            }
            table_.push_back(std::move(level));
        }
    }

    Vertex nca(Vertex a, Vertex b) const {
        if (a > b) {
            std::swap(a, b);
        }
        if (a == b) {
            return a;
        }
        const auto lo = static_cast<std::size_t>(a) + 1;
        const auto hi = static_cast<std::size_t>(b) + 1;  // exclusive
        const auto k = static_cast<std::size_t>(std::bit_width(hi - lo) - 1);
        const Vertex w = shallower(table_[k][lo], table_[k][hi - (std::size_t{1} << k)]);
        return frame_.parent[w];
    }

private:
    Vertex shallower(Vertex a, Vertex b) const { return frame_.depth[b] < frame_.depth[a] ? b : a; }

    const DfsFrame& frame_;
    std::vector<std::vector<Vertex>> table_;
};

}  // namespace

MPointTable compute_m_points(const DfsFrame& frame) {
    const Vertex n = frame.n;
    const auto un = static_cast<std::size_t>(n);
    for (Vertex v = 2; v <= n; ++v) {
        if (frame.b_count[v] == 0) {
            throw PreconditionError("not 2-edge-connected");
        }
    }

    MPointTable t;
    t.m.assign(un + 1, kNoVertex);
    t.m_tilde.assign(un + 1, kNoVertex);
    t.m_low1.assign(un + 1, kNoVertex);
    t.m_low2.assign(un + 1, kNoVertex);
    t.next_m.assign(un + 1, kNoVertex);
    t.prev_m.assign(un + 1, kNoVertex);
    t.low_m.assign(un + 1, kNoVertex);
    t.low_md.assign(un + 1, kNoVertex);
    t.low_m_edge.assign(un + 1, kNoEdge);

    const NcaIndex nca(frame);
    SuccessorSet active(un + 2);

    // nca of the active upper ends inside the preorder interval [first, last].
    auto nca_in = [&](Vertex first, Vertex last) -> Vertex {
        const auto lo = active.next(first);
        if (lo == SuccessorSet::kNone || lo > last) {
            return kNoVertex;
        }
        const auto hi = active.prev(last);
        return nca.nca(static_cast<Vertex>(lo), static_cast<Vertex>(hi));
    };
    auto subtree_nca = [&](Vertex c) { return c == kNoVertex ? kNoVertex : nca_in(c, c + frame.nd[c] - 1); };

    for (Vertex v = 2; v <= n; ++v) {
        // Active: every back-edge whose lower end is a proper ancestor
        // candidate of v, i.e. y < v. Those with x in T(v) form B(v).
        for (const BackEdgeRef& in : frame.in(v - 1)) {
            active.insert(in.x);
        }
        const Vertex m = nca_in(v, v + frame.nd[v] - 1);
        if (m == kNoVertex) {
            throw std::logic_error("b_count > 0 but no back-edge leaves T(" + std::to_string(v) + ")");
        }
        t.m[v] = m;
        t.m_tilde[v] = nca_in(m + 1, m + frame.nd[m] - 1);
        t.m_low1[v] = subtree_nca(frame.child(m, 1));
        t.m_low2[v] = subtree_nca(frame.child(m, 2));
    }

    // Chains of equal m, linked in decreasing order.
    std::vector<Vertex> last_seen(un + 1, kNoVertex);
    for (Vertex v = n; v >= 2; --v) {
        const Vertex m = t.m[v];
        const Vertex above = last_seen[m];
        if (above != kNoVertex) {
            t.prev_m[v] = above;
            t.next_m[above] = v;
        }
        last_seen[m] = v;
    }
    return t;
}

LowMStats compute_low_m(const DfsFrame& frame, MPointTable& t) {
    const Vertex n = frame.n;
    for (Vertex v = 2; v <= n; ++v) {
        if (frame.b_count[v] < 2) {
            throw PreconditionError("not 3-edge-connected: b_count(" + std::to_string(v) + ") < 2");
        }
    }

    LowMStats stats;
    std::vector<std::size_t> cursor(frame.in_begin.begin(), frame.in_begin.end() - 1);

    for (Vertex v = n; v >= 1; --v) {
        const Vertex u = t.prev_m[v];
        if (u == kNoVertex) {
            continue;
        }
        const Vertex mu = t.m[u];
        const Vertex mu_end = mu + frame.nd[mu];
        Vertex y = v;
        while (t.low_m[u] == kNoVertex) {
            if (y == kNoVertex || y >= u) {
                throw std::logic_error("low_M descent left T(u, v] for u = " + std::to_string(u));
            }
            const std::size_t end = frame.in_begin[static_cast<std::size_t>(y) + 1];
            auto& at = cursor[static_cast<std::size_t>(y)];
            while (at != end) {
                const BackEdgeRef& in = frame.in_list[at];
                if (in.x < mu) {
                    ++at;
                    ++stats.cursor_advances;
                } else {
                    if (in.x < mu_end) {
                        t.low_m[u] = y;
                        t.low_md[u] = in.x;
                        t.low_m_edge[u] = in.edge;
                    }
                    break;
                }
            }
            if (t.low_m[u] == kNoVertex) {
                ++stats.descents;
                const Vertex c = frame.child(y, 1);
                if (c == kNoVertex) {
                    throw std::logic_error("low_M descent reached a leaf for u = " + std::to_string(u));
                }
                y = t.prev_m[c] == kNoVertex ? c : t.low_m[t.prev_m[c]];
            }
        }
    }
    if (stats.cursor_advances > frame.back_edge_count) {
        throw std::logic_error("In-list cursors advanced more often than there are back-edges");
    }
    return stats;
}

}  // namespace ecc
