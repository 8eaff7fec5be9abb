#include "ecc/cut_enum.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ecc/decompose.hpp"

namespace ecc {

const char* to_string(CutSource source) {
    switch (source) {
        case CutSource::kType1: return "type1";
        case CutSource::kVSideTilde: return "v-side-tilde";
        case CutSource::kVSideLow1: return "v-side-low1";
        case CutSource::kVSideLow2: return "v-side-low2";
        case CutSource::kUSideSameM: return "u-side-same-m";
        case CutSource::kUSideTilde: return "u-side-tilde";
        case CutSource::kUSideLow1: return "u-side-low1";
    }
    return "unknown";
}

void CutEnumStats::add_time(const std::string& phase, double millis) {
    for (auto& [name, total] : phase_millis) {
        if (name == phase) {
            total += millis;
            return;
        }
    }
    phase_millis.emplace_back(phase, millis);
}

namespace {

// An undefined low point never bounds anything from above.
bool at_least(Vertex value, Vertex bound) { return value == kNoVertex || value >= bound; }

EdgeId require_edge(EdgeId e, const char* what) {
    if (e == kNoEdge) {
        throw std::logic_error(std::string("missing back-edge witness: ") + what);
    }
    return e;
}

Cut3 make_cut(EdgeId a, EdgeId b, EdgeId c, std::int32_t type, CutSource source) {
    Cut3 cut;
    cut.edges = {a, b, c};
    std::sort(cut.edges.begin(), cut.edges.end());
    cut.type = type;
    cut.source = source;
    return cut;
}

Cut3 type2_cut(const DfsFrame& f, Vertex u, Vertex v, EdgeId e, CutSource source) {
    Cut3 cut = make_cut(f.tree_edge[u], f.tree_edge[v], e, 2, source);
    cut.u = u;
    cut.v = v;
    cut.back_edge = e;
    return cut;
}

void check_walk(std::int64_t steps, Vertex n, const char* pass) {
    if (steps > n) {
        throw std::logic_error(std::string("nextM walk exceeded n steps in pass ") + pass);
    }
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<Cut3> type1_cuts(const DfsFrame& f) {
    std::vector<Cut3> cuts;
    for (Vertex v = 2; v <= f.n; ++v) {
        if (f.b_count[v] != 2) {
            continue;
        }
        Cut3 cut = make_cut(f.tree_edge[v], require_edge(f.low1_edge[v], "low1"),
                            require_edge(f.low2_edge[v], "low2"), 1, CutSource::kType1);
        cut.v = v;
        cuts.push_back(cut);
    }
    return cuts;
}

std::vector<Cut3> type2_cuts_v_side(const DfsFrame& f, const MPointTable& t, PassCounters* counters) {
    const Vertex n = f.n;
    std::vector<Cut3> cuts;
    std::vector<Vertex> current(static_cast<std::size_t>(n) + 1);

    constexpr CutSource kSources[] = {CutSource::kVSideTilde, CutSource::kVSideLow1, CutSource::kVSideLow2};
    for (int pass = 0; pass < 3; ++pass) {
        const std::vector<Vertex>& target = pass == 0 ? t.m_tilde : pass == 1 ? t.m_low1 : t.m_low2;
        std::iota(current.begin(), current.end(), 0);
        std::int64_t steps = 0;
        for (Vertex v = n; v >= 2; --v) {
            const Vertex m = target[v];
            if (m == kNoVertex) {
                continue;
            }
            const Vertex mv = t.m[v];
            if (pass > 0 && f.l1[mv] < v) {
                continue;
            }
            // least u in m^-1(m) above v
            Vertex u = current[m];
            while (t.next_m[u] != kNoVertex && t.next_m[u] > v) {
                u = t.next_m[u];
                ++steps;
            }
            current[m] = u;
            if (f.b_count[v] != f.b_count[u] + 1) {
                continue;
            }
            if (pass == 0) {
                const Vertex c2 = f.child(mv, 2);
                if (f.l2[mv] >= v && (c2 == kNoVertex || at_least(f.low1[c2], v))) {
                    cuts.push_back(type2_cut(f, u, v, require_edge(f.l1_edge[mv], "l1(M(v))"), kSources[pass]));
                }
            } else {
                // pass 1 pairs u with m_low1(v), so e leaves m_low2(v); pass 2 the reverse
                const Vertex other = pass == 1 ? t.m_low2[v] : t.m_low1[v];
                const Vertex c3 = f.child(mv, 3);
                if (other != kNoVertex && at_least(f.low2[other], v) &&
                    (c3 == kNoVertex || at_least(f.low1[c3], v))) {
                    cuts.push_back(type2_cut(f, u, v, require_edge(f.l1_edge[other], "l1(M_low)"), kSources[pass]));
                }
            }
        }
        check_walk(steps, n, to_string(kSources[pass]));
        if (counters != nullptr) {
            counters->v_side_walk[static_cast<std::size_t>(pass)] = steps;
        }
    }
    return cuts;
}

std::vector<Cut3> type2_cuts_u_side(const DfsFrame& f, const MPointTable& t, PassCounters* counters) {
    const Vertex n = f.n;
    std::vector<Cut3> cuts;

    for (Vertex u = 2; u <= n; ++u) {
        const Vertex v = t.next_m[u];
        if (v == kNoVertex) {
            continue;
        }
        if (f.b_count[u] == f.b_count[v] + 1) {
            cuts.push_back(type2_cut(f, u, v, require_edge(t.low_m_edge[u], "low_M"), CutSource::kUSideSameM));
        }
    }

    std::vector<Vertex> current(static_cast<std::size_t>(n) + 1);
    for (int pass = 0; pass < 2; ++pass) {
        const CutSource source = pass == 0 ? CutSource::kUSideTilde : CutSource::kUSideLow1;
        std::iota(current.begin(), current.end(), 0);
        std::int64_t steps = 0;
        for (Vertex u = n; u >= 2; --u) {
            const Vertex mu = t.m[u];
            Vertex m = kNoVertex;
            if (pass == 0) {
                m = t.m_tilde[u];
                if (m == kNoVertex || m == mu) {
                    continue;
                }
            } else {
                m = t.m_low1[u];
                if (m == kNoVertex || f.l1[mu] < u) {
                    continue;
                }
            }
            // greatest v in m^-1(m) below u
            Vertex v = current[m];
            while (v != kNoVertex && v >= u) {
                v = t.next_m[v];
                ++steps;
            }
            current[m] = v;
            if (v == kNoVertex || f.b_count[u] != f.b_count[v] + 1) {
                continue;
            }
            if (pass == 0) {
                cuts.push_back(type2_cut(f, u, v, require_edge(f.l1_edge[mu], "l1(M(u))"), source));
            } else {
                const Vertex low2_point = t.m_low2[u];
                if (low2_point == kNoVertex) {
                    throw std::logic_error("u-side low1 case without M_low2(u)");
                }
                cuts.push_back(type2_cut(f, u, v, require_edge(f.l1_edge[low2_point], "l1(M_low2(u))"), source));
            }
        }
        check_walk(steps, n, to_string(source));
        if (counters != nullptr) {
            counters->u_side_walk[static_cast<std::size_t>(pass)] = steps;
        }
    }
    return cuts;
}

namespace {

// A round-0 frame and its M-points computed ahead of the rounds.
struct Prepared {
    DfsFrame frame;
    MPointTable table;
};

std::vector<Cut3> run_rounds(const Multigraph& g, const CutOptions& options, CutEnumStats* stats, Prepared* prepared) {
    std::vector<Cut3> found;
    const Multigraph* current = &g;
    Multigraph contracted;
    std::vector<EdgeId> to_input(static_cast<std::size_t>(g.edge_count()) + 1);
    std::iota(to_input.begin(), to_input.end(), 0);
    const DfsFrame* first_frame = nullptr;
    DfsFrame round0;

    for (std::int32_t round = 0; current->vertex_count() > 1; ++round) {
        Stopwatch clock;
        DfsFrame frame;
        MPointTable table;
        if (round == 0 && prepared != nullptr) {
            frame = std::move(prepared->frame);
            table = std::move(prepared->table);
        } else {
            frame = build_dfs_frame(*current);
        }
        const double t_dfs = clock.lap();
        if (table.m.empty()) {
            table = compute_m_points(frame);
        }
        const double t_m = clock.lap();
        const LowMStats low_stats = compute_low_m(frame, table);
        const double t_low = clock.lap();

        RoundStats rs;
        rs.round = round;
        rs.vertices = current->vertex_count();
        rs.edges = current->edge_count();
        rs.cursor_advances = low_stats.cursor_advances;
        rs.back_edges = frame.back_edge_count;

        std::vector<Cut3> t1 = type1_cuts(frame);
        const double t_type1 = clock.lap();
        std::vector<Cut3> vs;
        std::vector<Cut3> us;
        double t_v = 0;
        double t_u = 0;
        if (options.parallel_passes) {
            auto v_task = std::async(std::launch::async, [&] { return type2_cuts_v_side(frame, table, &rs.walks); });
            us = type2_cuts_u_side(frame, table, &rs.walks);
            vs = v_task.get();
            t_v = clock.lap();
        } else {
            vs = type2_cuts_v_side(frame, table, &rs.walks);
            t_v = clock.lap();
            us = type2_cuts_u_side(frame, table, &rs.walks);
            t_u = clock.lap();
        }

        auto emit = [&](std::vector<Cut3>& cuts) {
            for (Cut3& cut : cuts) {
                for (EdgeId& e : cut.edges) {
                    e = to_input[static_cast<std::size_t>(e)];
                }
                std::sort(cut.edges.begin(), cut.edges.end());
                if (cut.back_edge != kNoEdge) {
                    cut.back_edge = to_input[static_cast<std::size_t>(cut.back_edge)];
                }
                cut.round = round;
                if (round == 0) {
                    if (cut.u != kNoVertex) cut.u = frame.vertex_of[cut.u];
                    if (cut.v != kNoVertex) cut.v = frame.vertex_of[cut.v];
                } else {
                    cut.type = 3;
                    cut.u = kNoVertex;
                    cut.v = kNoVertex;
                    cut.back_edge = kNoEdge;
                }
                found.push_back(cut);
            }
            rs.cuts += cuts.size();
        };
        emit(t1);
        emit(vs);
        emit(us);

        // Contract the back-edge components; the surviving edges are the
        // tree edges joining different components.
        std::vector<char> tree_mask(static_cast<std::size_t>(current->edge_count()) + 1, 0);
        for (Vertex v = 2; v <= frame.n; ++v) {
            tree_mask[static_cast<std::size_t>(frame.tree_edge[v])] = 1;
        }
        Contraction next = contract_classes(*current, component_labels(*current, tree_mask));
        if (next.graph.vertex_count() >= current->vertex_count()) {
            throw std::logic_error("contraction round " + std::to_string(round) + " did not shrink the graph");
        }
        std::vector<EdgeId> next_to_input(next.map.edge_map.size(), kNoEdge);
        for (std::size_t i = 1; i < next.map.edge_map.size(); ++i) {
            next_to_input[i] = to_input[static_cast<std::size_t>(next.map.edge_map[i])];
        }
        if (round == 0) {
            round0 = std::move(frame);
            first_frame = &round0;
        }
        contracted = std::move(next.graph);
        current = &contracted;
        to_input = std::move(next_to_input);
        const double t_contract = clock.lap();

        if (stats != nullptr) {
            stats->add_time("dfs", t_dfs);
            stats->add_time("m_points", t_m);
            stats->add_time("low_m", t_low);
            stats->add_time("type1", t_type1);
            stats->add_time("type2_v_side", t_v);
            stats->add_time("type2_u_side", t_u);
            stats->add_time("contract", t_contract);
            stats->rounds.push_back(rs);
        }
    }

    if (first_frame != nullptr) {
        // Types are counted against the first tree.
        for (Cut3& cut : found) {
            std::int32_t tree_edges = 0;
            for (const EdgeId e : cut.edges) {
                tree_edges += first_frame->kind[e] == EdgeKind::kTree ? 1 : 0;
            }
            if (tree_edges != cut.type) {
                throw std::logic_error("cut type disagrees with the first DFS tree");
            }
        }
    }
    return found;
}

}  // namespace

std::vector<Cut3> type3_cuts(const Multigraph& g, const CutOptions& options, CutEnumStats* stats) {
    return run_rounds(g, options, stats, nullptr);
}

std::vector<Cut3> all_3cuts(const Multigraph& g, const CutOptions& options, CutEnumStats* stats) {
    Stopwatch clock;
    std::vector<Cut3> found;
    if (options.require_3ec && g.vertex_count() > 1) {
        // The check's frame and M-points double as round 0 of the search.
        Prepared prepared;
        try {
            prepared.frame = build_dfs_frame(g);
        } catch (const PreconditionError&) {
            throw NotThreeEdgeConnectedError({});
        }
        ThreeEcCheck check = check_3ec(prepared.frame, &prepared.table);
        if (stats != nullptr) {
            stats->add_time("check_3ec", clock.lap());
        }
        if (!check.ok) {
            throw NotThreeEdgeConnectedError(std::move(check.witness));
        }
        found = run_rounds(g, options, stats, &prepared);
    } else {
        found = run_rounds(g, options, stats, nullptr);
    }
    clock.lap();

    // Stable, so the first report of a repeated triple is the one kept.
    std::vector<Cut3> cuts = std::move(found);
    std::stable_sort(cuts.begin(), cuts.end(), [](const Cut3& a, const Cut3& b) { return a.edges < b.edges; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](const Cut3& a, const Cut3& b) { return a.edges == b.edges; }),
               cuts.end());

    if (options.verify_each_cut) {
        for (const Cut3& cut : cuts) {
            if (!is_disconnected_after_removal(g, cut.edges)) {
                throw std::logic_error("emitted triple does not disconnect the graph");
            }
        }
    }
    if (stats != nullptr) {
        stats->add_time("dedup", clock.lap());
    }
    return cuts;
}

}  // namespace ecc
