#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "ecc/multigraph.hpp"
#include "fixtures.hpp"

using namespace ecc;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = ::testing::TempDir() + "ecc_cli_" + name;
    std::ofstream(path) << text;
    return path;
}

std::string graph_file(const std::string& name, const Multigraph& g) { return write_temp(name, format_graph(g)); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(Cli, CutsOfGA) {
    const CliRun r = run({"cuts", graph_file("ga.graph", ecc::testing::g_a())});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 4u);
    EXPECT_EQ(out[0], "cut type=1 edges=1,4,6");
    EXPECT_EQ(out[1], "cut type=1 edges=3,4,5");
    EXPECT_EQ(out[2], "cut type=2 edges=1,2,5");
    EXPECT_EQ(out[3], "cut type=2 edges=2,3,6");
}

TEST(Cli, CutsJsonMatchesText) {
    const std::string path = graph_file("prism.graph", ecc::testing::prism());
    const CliRun text = run({"cuts", path});
    const CliRun json = run({"cuts", "--json", path});
    ASSERT_EQ(json.code, 0);
    const auto report = nlohmann::json::parse(json.out);
    EXPECT_EQ(report.at("schema"), 1);
    EXPECT_EQ(report.at("cut_count").get<std::size_t>(), lines(text.out).size());
    EXPECT_EQ(report.at("cuts").size(), lines(text.out).size());
    const auto& types = report.at("type_counts");
    EXPECT_EQ(types.at("1").get<int>() + types.at("2").get<int>() + types.at("3").get<int>(),
              report.at("cut_count").get<int>());
    EXPECT_EQ(report.at("partitions").at("4").at("count"), 6);
    EXPECT_EQ(report.at("partitions").at("1").at("count"), 1);
    EXPECT_FALSE(report.contains("timings_ms"));
    EXPECT_GE(report.at("counters").at("rounds").get<int>(), 1);

    const CliRun timed = run({"cuts", "--json", "--timings", path});
    const auto timed_report = nlohmann::json::parse(timed.out);
    for (const auto& [phase, millis] : timed_report.at("timings_ms").items()) {
        EXPECT_GE(millis.get<double>(), 0.0) << phase;
    }
}

TEST(Cli, CutsRejectsNon3ec) {
    const CliRun r = run({"cuts", graph_file("theta.graph", ecc::testing::theta())});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("cut edges="), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Components) {
    const CliRun r = run({"components", "--k", "4", graph_file("par4.graph", ecc::testing::parallel(4))});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "component 1: 1 2\n");
    const CliRun theta = run({"components", "--k", "3", graph_file("theta3.graph", ecc::testing::theta())});
    EXPECT_EQ(theta.out, "component 1: 1 2\ncomponent 2: 3\ncomponent 3: 4\ncomponent 4: 5\n");
    EXPECT_EQ(run({"components", "--k", "5", graph_file("par4b.graph", ecc::testing::parallel(4))}).code, 1);
}

TEST(Cli, Verify) {
    const CliRun prism = run({"verify", graph_file("prism_v.graph", ecc::testing::prism())});
    EXPECT_EQ(prism.code, 0);
    EXPECT_EQ(prism.out, "OK\n");
    const CliRun theta = run({"verify", graph_file("theta_v.graph", ecc::testing::theta())});
    EXPECT_EQ(theta.code, 0);
    EXPECT_EQ(theta.out, "OK\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"cuts"}).code, 1);
    const CliRun bad = run({"cuts", write_temp("bad.graph", "p 2 1\ne 1 3\n")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2: endpoint out of range"), std::string::npos);
    EXPECT_EQ(run({"cuts", "/nonexistent/file.graph"}).code, 2);
    EXPECT_EQ(run({"gen", "--n", "10", "--m", "14", "--seed", "1"}).code, 3);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GenIsDeterministicAndParses) {
    const CliRun a = run({"gen", "--n", "12", "--m", "25", "--seed", "9"});
    const CliRun b = run({"gen", "--n", "12", "--m", "25", "--seed", "9"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const Multigraph g = parse_graph(a.out);
    EXPECT_EQ(g.vertex_count(), 12);
    EXPECT_EQ(g.edge_count(), 25);
    const CliRun general = run({"gen", "--n", "5", "--m", "3", "--seed", "2", "--general"});
    EXPECT_EQ(parse_graph(general.out).edge_count(), 3);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
    const std::string path = write_temp("det.graph", run({"gen", "--n", "200", "--m", "400", "--seed", "4"}).out);
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"cuts", path}, {"cuts", "--json", path}, {"components", "--k", "4", path}}) {
        const CliRun first = run(args);
        ASSERT_EQ(first.code, 0);
        for (int i = 0; i < 3; ++i) {
            EXPECT_EQ(run(args).out, first.out);
        }
    }
    EXPECT_EQ(run({"cuts", "--threads", "4", path}).out, run({"cuts", path}).out);
}

TEST(Cli, BenchEmitsCsv) {
    const CliRun r = run({"bench", "--sizes", "64,128", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = lines(r.out);
    ASSERT_FALSE(out.empty());
    EXPECT_EQ(out[0], "n,m,phase,millis");
    bool saw_total = false;
    bool saw_round = false;
    for (const auto& line : out) {
        saw_total = saw_total || line.rfind("128,256,total,", 0) == 0;
        saw_round = saw_round || line.rfind("# n=64 round=0 vertices=64", 0) == 0;
    }
    EXPECT_TRUE(saw_total);
    EXPECT_TRUE(saw_round);
}
