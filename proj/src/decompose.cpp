#include "ecc/decompose.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ecc/cut_enum.hpp"
#include "ecc/dfs_frame.hpp"
#include "ecc/m_points.hpp"

namespace ecc {

namespace {

std::string describe(const std::vector<EdgeId>& witness) {
    if (witness.empty()) {
        return "graph is not connected";
    }
    std::string s = "graph is not 3-edge-connected; cut edges=";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        s += (i ? "," : "") + std::to_string(witness[i]);
    }
    return s;
}

// A piece of the graph together with its origin in the input.
struct Piece {
    Multigraph graph;
    std::vector<Vertex> origin_vertex;  // ascending
    std::vector<EdgeId> origin_edge;    // kNoEdge for virtual edges
};

// Splits `piece` along the 2-cut {e1, e2}; each side gets a virtual edge
// between its endpoints of e1 and e2 (dropped when they coincide).
std::pair<Piece, Piece> split_along(const Piece& piece, EdgeId e1, EdgeId e2) {
    const Multigraph& g = piece.graph;
    std::vector<char> mask(static_cast<std::size_t>(g.edge_count()) + 1, 0);
    mask[static_cast<std::size_t>(e1)] = 1;
    mask[static_cast<std::size_t>(e2)] = 1;
    const Partition sides = components_without(g, mask);
    if (sides.size() != 2) {
        throw std::logic_error("2-cut witness does not split the piece into two sides");
    }

    auto build = [&](std::size_t side) {
        const auto& verts = sides.classes[side];
        std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()) + 1, kNoVertex);
        Piece out;
        out.origin_vertex.assign(1, kNoVertex);
        for (const Vertex v : verts) {
            local[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.origin_vertex.size());
            out.origin_vertex.push_back(piece.origin_vertex[static_cast<std::size_t>(v)]);
        }
        std::vector<Edge> edges;
        out.origin_edge.assign(1, kNoEdge);
        for (EdgeId id = 1; id <= g.edge_count(); ++id) {
            const Edge& e = g.edge(id);
            if (local[static_cast<std::size_t>(e.a)] != kNoVertex && local[static_cast<std::size_t>(e.b)] != kNoVertex) {
                edges.push_back({local[static_cast<std::size_t>(e.a)], local[static_cast<std::size_t>(e.b)]});
                out.origin_edge.push_back(piece.origin_edge[static_cast<std::size_t>(id)]);
            }
        }
        auto inside = [&](EdgeId id) {
            const Edge& e = g.edge(id);
            return local[static_cast<std::size_t>(e.a)] != kNoVertex ? local[static_cast<std::size_t>(e.a)]
                                                                    : local[static_cast<std::size_t>(e.b)];
        };
        const Vertex a1 = inside(e1);
        const Vertex a2 = inside(e2);
        if (a1 != a2) {
            edges.push_back({a1, a2});
            out.origin_edge.push_back(kNoEdge);
        }
        out.graph = Multigraph(static_cast<Vertex>(verts.size()), std::move(edges));
        return out;
    };
    return {build(0), build(1)};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

NotThreeEdgeConnectedError::NotThreeEdgeConnectedError(std::vector<EdgeId> witness)
    : PreconditionError(describe(witness)), witness_(std::move(witness)) {}

TwoEccResult two_ecc(const Multigraph& g) {
    TwoEccResult result;
    std::vector<char> bridge_mask(static_cast<std::size_t>(g.edge_count()) + 1, 0);
    const Partition components = connected_components(g);
    for (const auto& members : components.classes) {
        if (members.size() < 2) {
            continue;
        }
        const Subgraph sub = induced_subgraph(g, members);
        const DfsFrame frame = build_dfs_frame(sub.graph);
        for (Vertex v = 2; v <= frame.n; ++v) {
            if (frame.b_count[v] == 0) {
                const EdgeId e = sub.origin_edge[static_cast<std::size_t>(frame.tree_edge[v])];
                bridge_mask[static_cast<std::size_t>(e)] = 1;
                result.bridges.push_back(e);
            }
        }
    }
    std::sort(result.bridges.begin(), result.bridges.end());
    result.classes = components_without(g, bridge_mask);
    return result;
}

ThreeEcCheck check_3ec(const Multigraph& g) {
    if (g.vertex_count() <= 1) {
        return {true, {}};
    }
    DfsFrame frame;
    try {
        frame = build_dfs_frame(g);
    } catch (const PreconditionError&) {
        return {};  // disconnected
    }
    return check_3ec(frame);
}

ThreeEcCheck check_3ec(const DfsFrame& frame, MPointTable* table) {
    ThreeEcCheck check;
    for (Vertex v = 2; v <= frame.n; ++v) {
        if (frame.b_count[v] == 0) {
            check.witness = {frame.tree_edge[v]};
            return check;
        }
    }
    for (Vertex v = 2; v <= frame.n; ++v) {
        if (frame.b_count[v] == 1) {
            check.witness = {frame.tree_edge[v], frame.low1_edge[v]};
            std::sort(check.witness.begin(), check.witness.end());
            return check;
        }
    }
    MPointTable local;
    MPointTable& t = table != nullptr ? *table : local;
    t = compute_m_points(frame);
    // B(next_m(u)) is always a subset of B(u); equal counts mean equal sets.
    for (Vertex u = 2; u <= frame.n; ++u) {
        const Vertex v = t.next_m[u];
        if (v != kNoVertex && frame.b_count[u] == frame.b_count[v]) {
            check.witness = {frame.tree_edge[u], frame.tree_edge[v]};
            std::sort(check.witness.begin(), check.witness.end());
            return check;
        }
    }
    check.ok = true;
    return check;
}

bool is_3ec(const Multigraph& g) { return check_3ec(g).ok; }

ThreeEccResult three_ecc(const Multigraph& g) {
    ThreeEccResult result;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::int64_t> labels(n + 1, 0);
    std::int64_t next_label = 0;

    std::vector<Piece> work;
    for (const auto& members : two_ecc(g).classes.classes) {
        if (members.size() == 1) {
            labels[static_cast<std::size_t>(members[0])] = ++next_label;
            continue;
        }
        Subgraph sub = induced_subgraph(g, members);
        work.push_back({std::move(sub.graph), std::move(sub.origin_vertex), std::move(sub.origin_edge)});
    }

    std::vector<SplitGraph> found;
    while (!work.empty()) {
        Piece piece = std::move(work.back());
        work.pop_back();
        const ThreeEcCheck check = check_3ec(piece.graph);
        if (check.ok || piece.graph.vertex_count() == 1) {
            ++next_label;
            for (std::size_t i = 1; i < piece.origin_vertex.size(); ++i) {
                labels[static_cast<std::size_t>(piece.origin_vertex[i])] = next_label;
            }
            if (piece.graph.vertex_count() >= 2) {
                found.push_back({std::move(piece.graph), std::move(piece.origin_vertex), std::move(piece.origin_edge)});
            }
            continue;
        }
        if (check.witness.size() != 2) {
            throw std::logic_error("2-edge-connected piece reported a cut of size " +
                                   std::to_string(check.witness.size()));
        }
        auto [a, b] = split_along(piece, check.witness[0], check.witness[1]);
        work.push_back(std::move(a));
        work.push_back(std::move(b));
    }

    result.classes = Partition::from_labels(labels);
    std::sort(found.begin(), found.end(),
              [](const SplitGraph& x, const SplitGraph& y) { return x.members[1] < y.members[1]; });
    result.split_graphs = std::move(found);
    return result;
}

Partition four_ecc_3ec(const Multigraph& g) {
    ThreeEcCheck check = check_3ec(g);
    if (!check.ok) {
        throw NotThreeEdgeConnectedError(std::move(check.witness));
    }
    const Vertex n = g.vertex_count();
    if (n <= 1) {
        return Partition::singletons(n);
    }
    CutOptions options;
    options.require_3ec = false;
    const std::vector<Cut3> cuts = all_3cuts(g, options);

    // Removing the tree edges of a cut splits the vertices by the parity of
    // cut edges on their root path; the back-edges of the cut cross the same
    // bipartition. Two vertices share a class iff they lie on the same side
    // of every cut, so XOR-ing a random tag per cut down the tree gives each
    // class one signature.
    const DfsFrame frame = build_dfs_frame(g);
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::uint64_t> lo(un + 1, 0);
    std::vector<std::uint64_t> hi(un + 1, 0);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const std::uint64_t tag_lo = splitmix64(2 * i);
        const std::uint64_t tag_hi = splitmix64(2 * i + 1);
        for (const EdgeId e : cuts[i].edges) {
            const Vertex w = frame.tree_child(e);
            if (w != kNoVertex) {
                lo[static_cast<std::size_t>(w)] ^= tag_lo;
                hi[static_cast<std::size_t>(w)] ^= tag_hi;
            }
        }
    }
    struct PairHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
            return static_cast<std::size_t>(p.first ^ (p.second * 0x9e3779b97f4a7c15ULL));
        }
    };
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::int64_t, PairHash> class_of_signature;
    std::vector<std::int64_t> labels(un + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        if (v > 1) {
            lo[static_cast<std::size_t>(v)] ^= lo[static_cast<std::size_t>(frame.parent[v])];
            hi[static_cast<std::size_t>(v)] ^= hi[static_cast<std::size_t>(frame.parent[v])];
        }
        const auto key = std::make_pair(lo[static_cast<std::size_t>(v)], hi[static_cast<std::size_t>(v)]);
        const auto [it, inserted] =
            class_of_signature.try_emplace(key, static_cast<std::int64_t>(class_of_signature.size()));
        labels[static_cast<std::size_t>(frame.vertex_of[v])] = it->second;
    }
    return Partition::from_labels(labels);
}

Partition four_ecc(const Multigraph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::int64_t> labels(n + 1, 0);
    for (std::size_t v = 1; v <= n; ++v) {
        labels[v] = static_cast<std::int64_t>(v);
    }
    std::int64_t next_label = static_cast<std::int64_t>(n);
    for (const SplitGraph& sg : three_ecc(g).split_graphs) {
        const Partition local = four_ecc_3ec(sg.graph);
        for (const auto& cls : local.classes) {
            ++next_label;
            for (const Vertex v : cls) {
                labels[static_cast<std::size_t>(sg.members[static_cast<std::size_t>(v)])] = next_label;
            }
        }
    }
    return Partition::from_labels(labels);
}

Partition kecc(const Multigraph& g, int k) {
    switch (k) {
        case 1: return connected_components(g);
        case 2: return two_ecc(g).classes;
        case 3: return three_ecc(g).classes;
        case 4: return four_ecc(g);
        default: throw std::invalid_argument("k must be in 1..4");
    }
}

}  // namespace ecc
