#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "relpoly/curve.hpp"

namespace relpoly::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(RELPOLY_TEST_TMPDIR);
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Curve parse_curve(const std::string& text) {
    std::istringstream in(text);
    return read_curve_csv(in);
}

TEST(Cli, ExactCycleToFile) {
    const auto path = scratch("c6.csv");
    fs::remove(path.string() + ".json");
    const auto r = invoke({"exact", "--family", "cycle", "--n", "6", "--grid", "101", "--out", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto curve = parse_curve(slurp(path));
    ASSERT_EQ(curve.size(), 101u);
    EXPECT_EQ(curve.value.back(), 1.0);
    const auto meta = nlohmann::json::parse(slurp(path.string() + ".json"));
    EXPECT_EQ(meta["graph"], "cycle:6");
}

TEST(Cli, ExactJsonCoefficients) {
    const auto r = invoke({"exact", "--family", "path", "--n", "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["S"], (std::vector<std::string>{"0", "3", "2", "1"}));
    EXPECT_EQ(j["C"], (std::vector<std::string>{"0", "1", "0", "1"}));
}

TEST(Cli, ClosedFormMatchesExact) {
    const auto a = invoke({"closed-form", "--family", "star-pendant", "--n", "7", "--grid", "21"});
    const auto b = invoke({"exact", "--family", "star-pendant", "--n", "7", "--grid", "21"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_LT(sup_gap(parse_curve(a.out), parse_curve(b.out)), 1e-12);
}

TEST(Cli, McIsByteReproducible) {
    const auto edges = scratch("g.edges");
    ASSERT_EQ(invoke({"generate", "--gen", "er:40,0.15", "--seed", "3", "--out", edges.string()}).code, kExitOk);
    const std::vector<std::string> args{"mc", "--input", edges.string(), "--runs", "20000", "--seed", "42"};
    const auto first = invoke(args);
    const auto second = invoke(args);
    ASSERT_EQ(first.code, kExitOk) << first.err;
    EXPECT_EQ(first.out, second.out);
    EXPECT_NE(first.out, invoke({"mc", "--input", edges.string(), "--runs", "20000", "--seed", "43"}).out);
}

TEST(Cli, McLinkKind) {
    const auto r = invoke({"mc", "--family", "path", "--n", "5", "--kind", "link", "--runs", "100", "--p", "0.5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NEAR(parse_curve(r.out).value[0], 0.0625, 1e-12);
}

TEST(Cli, LaplaceSources) {
    const auto ex = invoke({"laplace", "--family", "star", "--n", "11", "--source", "exact", "--form", "s"});
    ASSERT_EQ(ex.code, kExitOk) << ex.err;
    EXPECT_EQ(parse_curve(ex.out).size(), 101u);
    const auto mc = invoke({"laplace", "--family", "star", "--n", "11", "--runs", "1000"});
    ASSERT_EQ(mc.code, kExitOk) << mc.err;
}

TEST(Cli, KgripImprovesObjective) {
    const auto edges = scratch("k.edges");
    ASSERT_EQ(invoke({"generate", "--gen", "er:30,0.1", "--out", edges.string()}).code, kExitOk);
    const auto saved = scratch("k_aug.edges");
    const auto r = invoke({"kgrip", "--input", edges.string(), "--k", "10", "--strategy", "lowest", "--p", "0.5",
                           "--save-graph", saved.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["added"].size(), 10u);
    EXPECT_GE(j["objective"][0]["after"].get<double>(), j["objective"][0]["before"].get<double>());
    EXPECT_TRUE(fs::exists(saved));
}

TEST(Cli, ApproxMethods) {
    EXPECT_EQ(invoke({"approx", "--family", "cycle", "--n", "4", "--p", "0.5"}).out, "p,value\n0.5,0.5625\n");
    const auto link = invoke({"approx", "--method", "stochastic-link", "--family", "cycle", "--n", "4", "--p", "0.5"});
    EXPECT_NEAR(parse_curve(link.out).value[0], 0.31640625, 1e-15);
    const auto am = invoke({"approx", "--method", "bounds", "--bound", "arithmetic", "--gen", "ba:50,2"});
    const auto gm = invoke({"approx", "--method", "bounds", "--bound", "geometric", "--gen", "ba:50,2"});
    const auto a = parse_curve(am.out);
    const auto g = parse_curve(gm.out);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_GE(a.value[i] + 1e-14, g.value[i]);
}

TEST(Cli, ApproxWarnsOnDisconnectedInput) {
    const auto r = invoke({"approx", "--gen", "er:50,0.0", "--p", "0.5"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, ApproxErAndRgg) {
    const auto width = invoke({"approx", "--method", "er", "--n", "100", "--pl", "0.2", "--width", "0.01,0.99"});
    ASSERT_EQ(width.code, kExitOk) << width.err;
    EXPECT_NEAR(nlohmann::json::parse(width.out)["width"].get<double>(), 0.30637, 1e-5);
    const auto hit = invoke({"approx", "--method", "er", "--n", "100", "--pl", "0.05", "--intersect", "10000,0.0012"});
    ASSERT_EQ(hit.code, kExitOk) << hit.err;
    EXPECT_NEAR(nlohmann::json::parse(hit.out)["p"].get<double>(), 0.2683, 1e-4);
    const auto rgg = invoke({"approx", "--method", "rgg", "--n", "100", "--r", "0.2"});
    ASSERT_EQ(rgg.code, kExitOk) << rgg.err;
    EXPECT_EQ(parse_curve(rgg.out).size(), 100u);
    EXPECT_NE(rgg.err.find("dropped 1"), std::string::npos);
    EXPECT_EQ(invoke({"approx", "--method", "er", "--n", "100"}).code, kExitUsage);
}

TEST(Cli, Cutsets) {
    const auto r = invoke({"cutsets", "--family", "cycle", "--n", "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["C"], (std::vector<int>{0, 0, 2, 0, 1}));
    const auto link = invoke({"cutsets", "--family", "cycle", "--n", "5", "--kind", "link"});
    EXPECT_EQ(nlohmann::json::parse(link.out)["C"], (std::vector<int>{0, 0, 10, 10, 5, 1}));
    const auto noisy = invoke({"cutsets", "--family", "cycle", "--n", "6", "--source", "mc", "--runs", "1000", "--no-round"});
    EXPECT_EQ(noisy.code, kExitOk) << noisy.err;
    EXPECT_EQ(invoke({"cutsets", "--gen", "er:31,0.5"}).code, kExitComputation);
}

TEST(Cli, CompareReportsGaps) {
    const auto a = scratch("cmp_a.csv");
    const auto b = scratch("cmp_b.csv");
    const auto c = scratch("cmp_c.csv");
    invoke({"exact", "--family", "path", "--n", "6", "--out", a.string()});
    invoke({"exact", "--family", "path", "--n", "6", "--out", b.string()});
    invoke({"exact", "--family", "path", "--n", "6", "--grid", "11", "--out", c.string()});
    const auto same = invoke({"compare", a.string(), b.string()});
    ASSERT_EQ(same.code, kExitOk) << same.err;
    EXPECT_NE(same.out.find(",0,0\n"), std::string::npos) << same.out;
    EXPECT_EQ(invoke({"compare", a.string(), c.string()}).code, kExitComputation);
    const auto powered = invoke({"compare", a.string(), b.string(), "--power", "1"});
    EXPECT_NE(powered.out.find(",0,0\n"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"exact"}).code, kExitUsage);
    EXPECT_EQ(invoke({"exact", "--family", "cycle", "--n", "4", "--gen", "er:4,0.5"}).code, kExitUsage);
    EXPECT_EQ(invoke({"mc", "--family", "cycle", "--n", "4", "--runs", "0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"exact", "--gen", "er:30,0.5"}).code, kExitComputation);
    EXPECT_EQ(invoke({"exact", "--family", "cycle", "--n", "2"}).code, kExitComputation);
    EXPECT_EQ(invoke({"exact", "--input", "/nonexistent.edges"}).code, kExitComputation);
    EXPECT_EQ(invoke({"kgrip", "--family", "complete", "--n", "4", "--k", "1"}).code, kExitComputation);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, GenerateLattice) {
    const auto r = invoke({"generate", "--gen", "lattice:2x3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "0 1\n0 2\n1 3\n2 3\n2 4\n3 5\n4 5\n");
}

}  // namespace
}  // namespace relpoly::cli
