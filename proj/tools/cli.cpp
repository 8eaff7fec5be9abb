#include "cli.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <set>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecc/cut_enum.hpp"
#include "ecc/decompose.hpp"
#include "ecc/generate.hpp"
#include "ecc/multigraph.hpp"
#include "ecc/oracle.hpp"

namespace ecc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string join_edges(const std::array<EdgeId, 3>& edges) {
    return std::to_string(edges[0]) + ',' + std::to_string(edges[1]) + ',' + std::to_string(edges[2]);
}

void print_partition(std::ostream& out, const Partition& p) {
    for (std::size_t i = 0; i < p.classes.size(); ++i) {
        out << "component " << i + 1 << ':';
        for (const Vertex v : p.classes[i]) {
            out << ' ' << v;
        }
        out << '\n';
    }
}

Json partition_json(const Partition& p) {
    Json j;
    j["count"] = p.size();
    j["classes"] = p.classes;
    return j;
}

Json cut_json(const Cut3& cut) {
    Json j;
    j["edges"] = cut.edges;
    j["type"] = cut.type;
    j["source"] = to_string(cut.source);
    j["round"] = cut.round;
    if (cut.round == 0) {
        Json w;
        if (cut.u != kNoVertex) w["u"] = cut.u;
        if (cut.v != kNoVertex) w["v"] = cut.v;
        if (cut.back_edge != kNoEdge) w["e"] = cut.back_edge;
        j["witness"] = w;
    }
    return j;
}

Json report_json(const std::string& path, const Multigraph& g, const std::vector<Cut3>& cuts,
                 const CutEnumStats& stats, bool with_timings) {
    Json report;
    report["schema"] = 1;
    report["input"] = {{"path", path}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    std::array<std::size_t, 3> by_type{};
    Json list = Json::array();
    for (const Cut3& cut : cuts) {
        ++by_type[static_cast<std::size_t>(cut.type - 1)];
        list.push_back(cut_json(cut));
    }
    report["cut_count"] = cuts.size();
    report["type_counts"] = {{"1", by_type[0]}, {"2", by_type[1]}, {"3", by_type[2]}};
    report["cuts"] = std::move(list);

    Json partitions;
    for (int k = 1; k <= 4; ++k) {
        partitions[std::to_string(k)] = partition_json(kecc(g, k));
    }
    report["partitions"] = std::move(partitions);

    Json rounds = Json::array();
    std::int64_t walk_total = 0;
    for (const RoundStats& r : stats.rounds) {
        Json jr;
        jr["round"] = r.round;
        jr["vertices"] = r.vertices;
        jr["edges"] = r.edges;
        jr["cuts"] = r.cuts;
        jr["v_side_walk"] = r.walks.v_side_walk;
        jr["u_side_walk"] = r.walks.u_side_walk;
        jr["cursor_advances"] = r.cursor_advances;
        jr["back_edges"] = r.back_edges;
        for (const auto w : r.walks.v_side_walk) walk_total += w;
        for (const auto w : r.walks.u_side_walk) walk_total += w;
        rounds.push_back(std::move(jr));
    }
    report["counters"] = {{"rounds", stats.rounds.size()}, {"walk_steps", walk_total}, {"round_stats", rounds}};
    if (with_timings) {
        Json t;
        for (const auto& [phase, millis] : stats.phase_millis) {
            t[phase] = millis;
        }
        report["timings_ms"] = std::move(t);
    }
    return report;
}

int cmd_cuts(const std::string& path, bool json, bool timings, int threads, std::ostream& out, std::ostream& err) {
    const Multigraph g = read_graph_file(path);
    CutOptions options;
    options.parallel_passes = threads > 1;
    CutEnumStats stats;
    std::vector<Cut3> cuts;
    try {
        cuts = all_3cuts(g, options, &stats);
    } catch (const NotThreeEdgeConnectedError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    }
    // Output order is lexicographic on (type, edges).
    std::stable_sort(cuts.begin(), cuts.end(), [](const Cut3& a, const Cut3& b) { return a.type < b.type; });
    if (json) {
        out << report_json(path, g, cuts, stats, timings).dump(2) << '\n';
        return kOk;
    }
    for (const Cut3& cut : cuts) {
        out << "cut type=" << cut.type << " edges=" << join_edges(cut.edges) << '\n';
    }
    if (timings) {
        for (const auto& [phase, millis] : stats.phase_millis) {
            err << "time " << phase << ' ' << millis << " ms\n";
        }
    }
    return kOk;
}

int cmd_components(const std::string& path, int k, std::ostream& out) {
    const Multigraph g = read_graph_file(path);
    print_partition(out, kecc(g, k));
    return kOk;
}

std::string describe_partition_mismatch(const Partition& main, const Partition& truth) {
    const auto n = static_cast<Vertex>(main.class_of.size()) - 1;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            if (main.same_class(u, v) != truth.same_class(u, v)) {
                return "vertices " + std::to_string(u) + " and " + std::to_string(v) + ": computed " +
                       (main.same_class(u, v) ? "together" : "apart") + ", oracle " +
                       (truth.same_class(u, v) ? "together" : "apart");
            }
        }
    }
    return "partitions differ";
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    const Multigraph g = read_graph_file(path);
    if (g.vertex_count() > oracle::kPairwiseVertexLimit) {
        err << "error: graph too large for the oracle (n > " << oracle::kPairwiseVertexLimit << ")\n";
        return kPrecondition;
    }
    if (is_3ec(g)) {
        if (g.edge_count() > oracle::kBruteForceEdgeLimit) {
            err << "error: graph too large for the oracle (m > " << oracle::kBruteForceEdgeLimit << ")\n";
            return kPrecondition;
        }
        CutOptions options;
        options.verify_each_cut = true;
        std::set<oracle::Triple> found;
        for (const Cut3& cut : all_3cuts(g, options)) {
            found.insert(cut.edges);
        }
        const std::set<oracle::Triple> truth = oracle::brute_3cuts(g);
        for (const auto& t : truth) {
            if (!found.contains(t)) {
                out << "MISMATCH cuts: missing " << join_edges(t) << '\n';
                return kMismatch;
            }
        }
        for (const auto& t : found) {
            if (!truth.contains(t)) {
                out << "MISMATCH cuts: spurious " << join_edges(t) << '\n';
                return kMismatch;
            }
        }
    }
    for (int k = 1; k <= 4; ++k) {
        const Partition main = kecc(g, k);
        const Partition truth = oracle::kecc_partition_oracle(g, k);
        if (!(main == truth)) {
            out << "MISMATCH k=" << k << ": " << describe_partition_mismatch(main, truth) << '\n';
            return kMismatch;
        }
    }
    out << "OK\n";
    return kOk;
}

int cmd_gen(std::int32_t n, std::int32_t m, std::uint64_t seed, bool general, std::ostream& out) {
    const Multigraph g = general ? generate_general_graph(n, m, seed) : generate_3ec_graph(n, m, seed);
    const std::string comment = std::string(general ? "general" : "3ec") + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + " seed=" + std::to_string(seed);
    out << format_graph(g, comment);
    return kOk;
}

double median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
}

int cmd_bench(const std::vector<std::int32_t>& sizes, std::uint64_t seed, int repeat, std::ostream& out) {
    out << "n,m,phase,millis\n";
    std::ostringstream rounds_log;
    for (const std::int32_t n : sizes) {
        const std::int32_t m = 2 * n;
        const Multigraph g = generate_3ec_graph(n, m, seed);
        std::map<std::string, std::vector<double>> samples;
        std::vector<std::string> order;
        CutEnumStats last;
        for (int r = 0; r < repeat; ++r) {
            CutEnumStats stats;
            const auto start = std::chrono::steady_clock::now();
            const auto cuts = all_3cuts(g, {}, &stats);
            const std::chrono::duration<double, std::milli> total = std::chrono::steady_clock::now() - start;
            for (const auto& [phase, millis] : stats.phase_millis) {
                if (!samples.contains(phase)) order.push_back(phase);
                samples[phase].push_back(millis);
            }
            if (!samples.contains("total")) order.push_back("total");
            samples["total"].push_back(total.count());
            last = std::move(stats);
        }
        for (const auto& phase : order) {
            out << n << ',' << m << ',' << phase << ',' << median(samples[phase]) << '\n';
        }
        for (const RoundStats& rs : last.rounds) {
            rounds_log << "# n=" << n << " round=" << rs.round << " vertices=" << rs.vertices << " edges=" << rs.edges
                       << " cuts=" << rs.cuts << '\n';
        }
    }
    out << rounds_log.str();
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"3-edge cuts and 4-edge-connected components of multigraphs", "ecc"};
    app.require_subcommand(1);

    std::string path;
    bool json = false;
    bool timings = false;
    int threads = 1;
    auto* cuts = app.add_subcommand("cuts", "list every 3-edge cut of a 3-edge-connected graph");
    cuts->add_option("file", path, "graph file")->required();
    cuts->add_flag("--json", json, "emit the full analysis report as JSON");
    cuts->add_flag("--timings", timings, "report per-phase times (stderr, or inside the JSON report)");
    cuts->add_option("--threads", threads, "run the independent passes concurrently when > 1")
        ->check(CLI::PositiveNumber);

    int k = 4;
    auto* components = app.add_subcommand("components", "k-edge-connected components");
    components->add_option("--k", k, "connectivity, 1 to 4")->check(CLI::Range(1, 4));
    components->add_option("file", path, "graph file")->required();

    auto* verify = app.add_subcommand("verify", "compare cuts and components with the brute-force oracle");
    verify->add_option("file", path, "graph file")->required();

    std::int32_t gen_n = 0;
    std::int32_t gen_m = 0;
    std::uint64_t seed = 1;
    bool general = false;
    auto* gen = app.add_subcommand("gen", "write a random graph");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--m", gen_m, "edge count")->required();
    gen->add_option("--seed", seed, "random seed");
    gen->add_flag("--general", general, "any multigraph instead of a 3-edge-connected one");

    std::vector<std::int32_t> sizes;
    int repeat = 1;
    auto* bench = app.add_subcommand("bench", "time the cut enumeration on generated graphs with m = 2n");
    bench->add_option("--sizes", sizes, "comma-separated vertex counts")->required()->delimiter(',');
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--repeat", repeat, "runs per size; the median is reported")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*cuts) return cmd_cuts(path, json, timings, threads, out, err);
        if (*components) return cmd_components(path, k, out);
        if (*verify) return cmd_verify(path, out, err);
        if (*gen) return cmd_gen(gen_n, gen_m, seed, general, out);
        if (*bench) return cmd_bench(sizes, seed, repeat, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::logic_error& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kMismatch;
    }
    return kUsage;
}

}  // namespace ecc::cli
