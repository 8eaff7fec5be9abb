#include "ecc/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ecc::oracle {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

bool connected_without(const Multigraph& g, const Triple& removed) {
    DisjointSets sets(static_cast<std::size_t>(g.vertex_count()) + 1);
    std::size_t merges = 0;
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        if (id == removed[0] || id == removed[1] || id == removed[2]) {
            continue;
        }
        const Edge& e = g.edge(id);
        if (sets.unite(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b))) {
            ++merges;
        }
    }
    return merges + 1 >= static_cast<std::size_t>(g.vertex_count());
}

constexpr Vertex kInf = std::numeric_limits<Vertex>::max();

Vertex undefined_if_inf(Vertex v) { return v == kInf ? kNoVertex : v; }

}  // namespace

std::set<Triple> brute_3cuts(const Multigraph& g) {
    if (g.edge_count() > kBruteForceEdgeLimit) {
        throw PreconditionError("brute-force 3-cut enumeration is limited to " +
                                std::to_string(kBruteForceEdgeLimit) + " edges");
    }
    std::set<Triple> cuts;
    const EdgeId m = g.edge_count();
    for (EdgeId a = 1; a <= m; ++a) {
        for (EdgeId b = a + 1; b <= m; ++b) {
            for (EdgeId c = b + 1; c <= m; ++c) {
                if (!connected_without(g, {a, b, c})) {
                    cuts.insert({a, b, c});
                }
            }
        }
    }
    return cuts;
}

std::int32_t pair_edge_connectivity(const Multigraph& g, Vertex s, Vertex t, std::int32_t cap) {
    if (s == t) {
        throw std::invalid_argument("pair_edge_connectivity needs two distinct vertices");
    }
    // Each undirected edge becomes two opposite unit arcs that are each
    // other's residual.
    struct Arc {
        Vertex to;
        std::int32_t capacity;
    };
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Arc> arcs;
    std::vector<std::vector<std::size_t>> out(n + 1);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            continue;
        }
        out[static_cast<std::size_t>(e.a)].push_back(arcs.size());
        arcs.push_back({e.b, 1});
        out[static_cast<std::size_t>(e.b)].push_back(arcs.size());
        arcs.push_back({e.a, 1});
    }

    std::int32_t flow = 0;
    std::vector<std::size_t> via(n + 1);
    std::vector<char> seen(n + 1);
    while (flow < cap) {
        std::fill(seen.begin(), seen.end(), 0);
        std::deque<Vertex> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty() && !seen[static_cast<std::size_t>(t)]) {
            const Vertex v = queue.front();
            queue.pop_front();
            for (const std::size_t a : out[static_cast<std::size_t>(v)]) {
                const Vertex w = arcs[a].to;
                if (arcs[a].capacity > 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    via[static_cast<std::size_t>(w)] = a;
                    queue.push_back(w);
                }
            }
        }
        if (!seen[static_cast<std::size_t>(t)]) {
            break;
        }
        for (Vertex w = t; w != s;) {
            const std::size_t a = via[static_cast<std::size_t>(w)];
            --arcs[a].capacity;
            ++arcs[a ^ 1].capacity;
            w = arcs[a ^ 1].to;
        }
        ++flow;
    }
    return flow;
}

Partition kecc_partition_oracle(const Multigraph& g, std::int32_t k) {
    const Vertex n = g.vertex_count();
    if (n > kPairwiseVertexLimit) {
        throw PreconditionError("pairwise connectivity oracle is limited to " +
                                std::to_string(kPairwiseVertexLimit) + " vertices");
    }
    DisjointSets sets(static_cast<std::size_t>(n) + 1);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (pair_edge_connectivity(g, u, v, k) >= k) {
                sets.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            }
        }
    }
    std::vector<std::int64_t> labels(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        labels[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(sets.find(static_cast<std::size_t>(v)));
    }
    return Partition::from_labels(labels);
}

bool ParamTable::is_ancestor(Vertex a, Vertex d) const {
    for (Vertex w = d; w != kNoVertex; w = parent[w]) {
        if (w == a) {
            return true;
        }
    }
    return false;
}

ParamTable params_from_definitions(const Multigraph& g, const DfsFrame& frame) {
    ParamTable p;
    const Vertex n = frame.n;
    const auto un = static_cast<std::size_t>(n);
    p.n = n;
    p.parent = frame.parent;
    p.tree_edge = frame.tree_edge;

    const auto um = static_cast<std::size_t>(g.edge_count());
    std::vector<char> is_tree(um + 1, 0);
    for (Vertex v = 2; v <= n; ++v) {
        is_tree[static_cast<std::size_t>(frame.tree_edge[v])] = 1;
    }
    p.back_upper.assign(um + 1, kNoVertex);
    p.back_lower.assign(um + 1, kNoVertex);
    for (EdgeId id = 1; id <= g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (e.is_loop() || is_tree[static_cast<std::size_t>(id)]) {
            continue;
        }
        const Vertex a = frame.pre_of[e.a];
        const Vertex b = frame.pre_of[e.b];
        if (p.is_ancestor(a, b)) {
            p.back_upper[id] = b, p.back_lower[id] = a;
        } else if (p.is_ancestor(b, a)) {
            p.back_upper[id] = a, p.back_lower[id] = b;
        } else {
            throw std::logic_error("non-tree edge joins unrelated vertices; not a DFS tree");
        }
    }

    auto nca = [&](Vertex a, Vertex b) {
        for (Vertex w = a; w != kNoVertex; w = p.parent[w]) {
            if (p.is_ancestor(w, b)) {
                return w;
            }
        }
        throw std::logic_error("vertices without a common ancestor");
    };
    auto nca_of = [&](const std::vector<Vertex>& xs) {
        Vertex acc = kNoVertex;
        for (const Vertex x : xs) {
            acc = acc == kNoVertex ? x : nca(acc, x);
        }
        return acc;
    };

    p.b.assign(un + 1, {});
    p.b_count.assign(un + 1, 0);
    p.l1.assign(un + 1, kNoVertex);
    p.l2.assign(un + 1, kNoVertex);
    p.low1.assign(un + 1, kNoVertex);
    p.low2.assign(un + 1, kNoVertex);
    p.high.assign(un + 1, kNoVertex);
    p.low1_edges.assign(un + 1, {});
    p.low2_edges.assign(un + 1, {});
    p.high_d.assign(un + 1, {});
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<Vertex> own;
        std::vector<Vertex> ys;
        for (EdgeId id = 1; id <= g.edge_count(); ++id) {
            const Vertex x = p.back_upper[id];
            const Vertex y = p.back_lower[id];
            if (x == kNoVertex) {
                continue;
            }
            if (x == v) {
                own.push_back(y);
            }
            if (p.is_ancestor(v, x) && p.is_ancestor(y, v) && y != v) {
                p.b[v].push_back(id);
                ys.push_back(y);
            }
        }
        std::sort(own.begin(), own.end());
        std::sort(ys.begin(), ys.end());
        p.l1[v] = own.size() >= 1 ? own[0] : v;
        p.l2[v] = own.size() >= 2 ? own[1] : v;
        p.b_count[v] = static_cast<std::int32_t>(ys.size());
        if (!ys.empty()) {
            p.low1[v] = ys.front();
            p.high[v] = ys.back();
        }
        if (ys.size() >= 2) {
            p.low2[v] = ys[1];
        }
        for (const EdgeId id : p.b[v]) {
            const Vertex y = p.back_lower[id];
            if (y == p.low1[v]) {
                p.low1_edges[v].insert(id);
            }
            if (y == p.low2[v]) {
                p.low2_edges[v].insert(id);
            }
            if (y == p.high[v]) {
                p.high_d[v].insert(p.back_upper[id]);
            }
        }
    }

    p.children.assign(un + 1, {});
    for (Vertex v = 2; v <= n; ++v) {
        p.children[p.parent[v]].push_back(v);
    }
    for (auto& kids : p.children) {
        std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
            const Vertex la = p.low1[a] == kNoVertex ? kInf : p.low1[a];
            const Vertex lb = p.low1[b] == kNoVertex ? kInf : p.low1[b];
            return la != lb ? la < lb : a < b;
        });
    }

    p.m.assign(un + 1, kNoVertex);
    p.m_tilde.assign(un + 1, kNoVertex);
    p.m_low1.assign(un + 1, kNoVertex);
    p.m_low2.assign(un + 1, kNoVertex);
    for (Vertex v = 2; v <= n; ++v) {
        std::vector<Vertex> xs;
        for (const EdgeId id : p.b[v]) {
            xs.push_back(p.back_upper[id]);
        }
        p.m[v] = nca_of(xs);
        if (p.m[v] == kNoVertex) {
            continue;
        }
        const Vertex mv = p.m[v];
        const Vertex c1 = p.child(mv, 1);
        const Vertex c2 = p.child(mv, 2);
        std::vector<Vertex> below, in_c1, in_c2;
        for (const Vertex x : xs) {
            if (x != mv) {
                below.push_back(x);
            }
            if (c1 != kNoVertex && p.is_ancestor(c1, x)) {
                in_c1.push_back(x);
            }
            if (c2 != kNoVertex && p.is_ancestor(c2, x)) {
                in_c2.push_back(x);
            }
        }
        p.m_tilde[v] = nca_of(below);
        p.m_low1[v] = nca_of(in_c1);
        p.m_low2[v] = nca_of(in_c2);
    }

    p.next_m.assign(un + 1, kNoVertex);
    p.prev_m.assign(un + 1, kNoVertex);
    for (Vertex v = 2; v <= n; ++v) {
        if (p.m[v] == kNoVertex) {
            continue;
        }
        for (Vertex w = 2; w <= n; ++w) {
            if (w == v || p.m[w] != p.m[v]) {
                continue;
            }
            if (w < v && (p.next_m[v] == kNoVertex || w > p.next_m[v])) {
                p.next_m[v] = w;
            }
            if (w > v && (p.prev_m[v] == kNoVertex || w < p.prev_m[v])) {
                p.prev_m[v] = w;
            }
        }
    }

    p.low_m.assign(un + 1, kNoVertex);
    p.low_md.assign(un + 1, {});
    p.low_md_min.assign(un + 1, kNoVertex);
    for (Vertex v = 2; v <= n; ++v) {
        const Vertex next = p.next_m[v];
        if (next == kNoVertex) {
            continue;
        }
        std::vector<EdgeId> diff;
        std::set_difference(p.b[v].begin(), p.b[v].end(), p.b[next].begin(), p.b[next].end(),
                            std::back_inserter(diff));
        Vertex low = kInf;
        for (const EdgeId id : diff) {
            low = std::min(low, p.back_lower[id]);
        }
        p.low_m[v] = undefined_if_inf(low);
        if (p.low_m[v] == kNoVertex) {
            continue;
        }
        for (const EdgeId id : diff) {
            if (p.back_lower[id] == low) {
                p.low_md[v].insert(p.back_upper[id]);
            }
        }
        Vertex lowest = kInf;
        for (EdgeId id = 1; id <= g.edge_count(); ++id) {
            if (p.back_lower[id] == low && p.is_ancestor(p.m[v], p.back_upper[id])) {
                lowest = std::min(lowest, p.back_upper[id]);
            }
        }
        p.low_md_min[v] = undefined_if_inf(lowest);
    }
    return p;
}

std::set<VSidePair> v_side_pairs_from_sets(const ParamTable& p) {
    std::set<VSidePair> pairs;
    for (Vertex v = 2; v <= p.n; ++v) {
        for (Vertex u = v + 1; u <= p.n; ++u) {
            if (!p.is_ancestor(v, u) || p.b_count[v] != p.b_count[u] + 1) {
                continue;
            }
            if (!std::includes(p.b[v].begin(), p.b[v].end(), p.b[u].begin(), p.b[u].end())) {
                continue;
            }
            std::vector<EdgeId> diff;
            std::set_difference(p.b[v].begin(), p.b[v].end(), p.b[u].begin(), p.b[u].end(),
                                std::back_inserter(diff));
            pairs.insert({u, v, diff.front()});
        }
    }
    return pairs;
}

std::set<VSidePair> v_side_pairs_by_high(const ParamTable& p) {
    std::set<VSidePair> pairs;
    for (Vertex v = 2; v <= p.n; ++v) {
        for (const Vertex m : {p.m_tilde[v], p.m_low1[v], p.m_low2[v]}) {
            if (m == kNoVertex) {
                continue;
            }
            Vertex u = kNoVertex;
            for (Vertex w = v + 1; w <= p.n; ++w) {
                if (p.m[w] == m) {
                    u = w;
                    break;
                }
            }
            if (u == kNoVertex || p.high[u] == kNoVertex) {
                continue;
            }
            if (p.high[u] < v && p.b_count[v] == p.b_count[u] + 1) {
                pairs.insert({u, v, kNoEdge});
            }
        }
    }
    return pairs;
}

}  // namespace ecc::oracle
