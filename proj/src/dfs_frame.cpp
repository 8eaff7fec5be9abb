#include "ecc/dfs_frame.hpp"

#include <cstdint>
#include <limits>

namespace ecc {

namespace {

constexpr Vertex kInfinity = std::numeric_limits<Vertex>::max();

// Two smallest lower ends seen so far; strict comparisons keep the first
// witness on ties.
struct LowPair {
    Vertex y1 = kInfinity, x1 = kNoVertex;
    EdgeId e1 = kNoEdge;
    Vertex y2 = kInfinity, x2 = kNoVertex;
    EdgeId e2 = kNoEdge;

    void offer(Vertex y, Vertex x, EdgeId e) {
        if (y < y1) {
            y2 = y1, x2 = x1, e2 = e1;
            y1 = y, x1 = x, e1 = e;
        } else if (y < y2) {
            y2 = y, x2 = x, e2 = e;
        }
    }
};

}  // namespace

DfsFrame build_dfs_frame(const Multigraph& g, Vertex root) {
    const Vertex n = g.vertex_count();
    if (!g.has_vertex(root)) {
        throw PreconditionError("DFS root out of range");
    }
    const auto un = static_cast<std::size_t>(n);
    const auto um = static_cast<std::size_t>(g.edge_count());

    DfsFrame f;
    f.n = n;
    f.root = root;
    f.vertex_of.assign(un + 1, kNoVertex);
    f.pre_of.assign(un + 1, kNoVertex);
    f.parent.assign(un + 1, kNoVertex);
    f.tree_edge.assign(un + 1, kNoEdge);
    f.depth.assign(un + 1, 0);

    // Iterative DFS; each frame remembers how far its incidence list was scanned.
    struct StackEntry {
        Vertex v;
        std::size_t next;
    };
    std::vector<char> is_tree(um + 1, 0);
    // Visited bits stay cache-resident where pre_of would not.
    std::vector<std::uint64_t> visited((un >> 6) + 1, 0);
    auto seen = [&](Vertex v) { return (visited[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1; };
    auto mark = [&](Vertex v) { visited[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); };
    std::vector<StackEntry> stack;
    stack.reserve(un);
    Vertex counter = 0;
    f.pre_of[root] = ++counter;
    f.vertex_of[counter] = root;
    mark(root);
    stack.push_back({root, 0});
    while (!stack.empty()) {
        StackEntry& top = stack.back();
        const auto inc = g.incidences(top.v);
        if (top.next == inc.size()) {
            stack.pop_back();
            continue;
        }
        const Incidence next = inc[top.next++];
        if (seen(next.neighbor)) {
            continue;
        }
        mark(next.neighbor);
        const Vertex child = ++counter;
        f.pre_of[next.neighbor] = child;
        f.vertex_of[child] = next.neighbor;
        f.parent[child] = f.pre_of[top.v];
        f.tree_edge[child] = next.edge;
        f.depth[child] = f.depth[f.parent[child]] + 1;
        is_tree[static_cast<std::size_t>(next.edge)] = 1;
        stack.push_back({next.neighbor, 0});
    }
    if (counter != n) {
        throw PreconditionError("graph not connected");
    }

    // Edge classification; back-edges oriented from descendant to ancestor.
    f.kind.assign(um + 1, EdgeKind::kLoop);
    f.upper.assign(um + 1, kNoVertex);
    f.lower.assign(um + 1, kNoVertex);
    std::vector<std::size_t> out_begin(un + 2, 0);
    std::vector<std::size_t> in_count(un + 2, 0);
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) {
            continue;
        }
        const Vertex pa = f.pre_of[e.a];
        const Vertex pb = f.pre_of[e.b];
        f.upper[id] = std::max(pa, pb);
        f.lower[id] = std::min(pa, pb);
        if (is_tree[static_cast<std::size_t>(id)]) {
            f.kind[id] = EdgeKind::kTree;
        } else {
            f.kind[id] = EdgeKind::kBack;
            ++out_begin[static_cast<std::size_t>(f.upper[id]) + 1];
            ++in_count[static_cast<std::size_t>(f.lower[id])];
            ++f.back_edge_count;
        }
    }
    for (std::size_t v = 1; v < out_begin.size(); ++v) {
        out_begin[v] += out_begin[v - 1];
    }
    std::vector<EdgeId> out_list(out_begin.back());
    {
        std::vector<std::size_t> fill(out_begin.begin(), out_begin.end() - 1);
        for (EdgeId id = 1; id <= g.edge_count(); ++id) {
            if (f.kind[id] == EdgeKind::kBack) {
                out_list[fill[static_cast<std::size_t>(f.upper[id])]++] = id;
            }
        }
    }

    // In(y), ascending by x: bucket the back-edges by lower end while
    // scanning upper ends in increasing order.
    f.in_begin.assign(un + 2, 0);
    for (std::size_t y = 1; y <= un; ++y) {
        f.in_begin[y + 1] = f.in_begin[y] + in_count[y];
    }
    f.in_list.resize(f.in_begin[un + 1]);
    {
        std::vector<std::size_t> fill(f.in_begin.begin(), f.in_begin.end() - 1);
        for (Vertex x = 1; x <= n; ++x) {
            for (std::size_t i = out_begin[x]; i < out_begin[x + 1]; ++i) {
                const EdgeId id = out_list[i];
                f.in_list[fill[static_cast<std::size_t>(f.lower[id])]++] = {x, id};
            }
        }
    }

    // Children in preorder.
    std::vector<std::size_t> pre_child_begin(un + 2, 0);
    for (Vertex v = 2; v <= n; ++v) {
        ++pre_child_begin[static_cast<std::size_t>(f.parent[v]) + 1];
    }
    for (std::size_t v = 1; v < pre_child_begin.size(); ++v) {
        pre_child_begin[v] += pre_child_begin[v - 1];
    }
    std::vector<Vertex> pre_children(un > 0 ? un - 1 : 0);
    {
        std::vector<std::size_t> fill(pre_child_begin.begin(), pre_child_begin.end() - 1);
        for (Vertex v = 2; v <= n; ++v) {
            pre_children[fill[static_cast<std::size_t>(f.parent[v])]++] = v;
        }
    }

    f.nd.assign(un + 1, 1);
    f.b_count.assign(un + 1, 0);
    f.l1.assign(un + 1, kNoVertex);
    f.l2.assign(un + 1, kNoVertex);
    f.l1_edge.assign(un + 1, kNoEdge);
    f.l2_edge.assign(un + 1, kNoEdge);
    f.low1.assign(un + 1, kNoVertex);
    f.low1d.assign(un + 1, kNoVertex);
    f.low2.assign(un + 1, kNoVertex);
    f.low2d.assign(un + 1, kNoVertex);
    f.low1_edge.assign(un + 1, kNoEdge);
    f.low2_edge.assign(un + 1, kNoEdge);

    for (Vertex v = n; v >= 1; --v) {
        LowPair own;
        for (std::size_t i = out_begin[v]; i < out_begin[v + 1]; ++i) {
            const EdgeId id = out_list[i];
            own.offer(f.lower[id], v, id);
        }
        f.l1[v] = own.e1 != kNoEdge ? own.y1 : v;
        f.l1_edge[v] = own.e1;
        f.l2[v] = own.e2 != kNoEdge ? own.y2 : v;
        f.l2_edge[v] = own.e2;

        LowPair low = own;  // every back-edge leaving v is in B(v)
        std::int32_t count = static_cast<std::int32_t>(out_begin[v + 1] - out_begin[v]);
        for (std::size_t i = pre_child_begin[v]; i < pre_child_begin[v + 1]; ++i) {
            const Vertex c = pre_children[i];
            f.nd[v] += f.nd[c];
            count += f.b_count[c];
            if (f.low1_edge[c] != kNoEdge && f.low1[c] < v) {
                low.offer(f.low1[c], f.low1d[c], f.low1_edge[c]);
                if (f.low2_edge[c] != kNoEdge && f.low2[c] < v) {
                    low.offer(f.low2[c], f.low2d[c], f.low2_edge[c]);
                }
            }
        }
        count -= static_cast<std::int32_t>(in_count[static_cast<std::size_t>(v)]);
        f.b_count[v] = count;
        if (low.e1 != kNoEdge) {
            f.low1[v] = low.y1, f.low1d[v] = low.x1, f.low1_edge[v] = low.e1;
        }
        if (low.e2 != kNoEdge) {
            f.low2[v] = low.y2, f.low2d[v] = low.x2, f.low2_edge[v] = low.e2;
        }
    }

    // Children sorted by low1 with a global bucket sort; scanning vertices in
    // preorder inside each bucket breaks ties by preorder.
    f.child_begin = pre_child_begin;
    f.child_list.resize(pre_children.size());
    {
        std::vector<std::size_t> bucket_begin(un + 3, 0);
        auto key = [&](Vertex v) {
            return static_cast<std::size_t>(f.low1[v] == kNoVertex ? n + 1 : f.low1[v]);
        };
        for (Vertex v = 2; v <= n; ++v) {
            ++bucket_begin[key(v) + 1];
        }
        for (std::size_t k = 1; k < bucket_begin.size(); ++k) {
            bucket_begin[k] += bucket_begin[k - 1];
        }
        std::vector<Vertex> by_low1(pre_children.size());
        for (Vertex v = 2; v <= n; ++v) {
            by_low1[bucket_begin[key(v)]++] = v;
        }
        std::vector<std::size_t> fill(f.child_begin.begin(), f.child_begin.end() - 1);
        for (const Vertex v : by_low1) {
            f.child_list[fill[static_cast<std::size_t>(f.parent[v])]++] = v;
        }
    }
    return f;
}

ConnectivityCertificate check_connectivity_necessary(const DfsFrame& frame) {
    ConnectivityCertificate cert{true, true};
    for (Vertex v = 2; v <= frame.n; ++v) {
        if (frame.b_count[v] <= 0) {
            cert.is_2ec_certificate = false;
        }
        if (frame.b_count[v] <= 1) {
            cert.passes_3ec_necessary = false;
        }
    }
    return cert;
}

}  // namespace ecc
