#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tilebalance/cli.hpp"
#include "tilebalance/report.hpp"

using namespace tilebalance;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, Table1JsonAllRowsMatch) {
    const Result r = invoke({"table1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["match"].get<bool>());
    ASSERT_EQ(doc["rows"].size(), 8u);
    for (const auto& row : doc["rows"]) EXPECT_TRUE(row["match"].get<bool>());
    EXPECT_EQ(doc["rows"][3]["two_e"], "17/3");
    EXPECT_EQ(doc["rows"][3]["avg_valence"], "34/11");
}

TEST(Cli, StatsType10) {
    const Result r = invoke({"stats", "pentagon-type-10", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["t_h"]["5"], "2/3");
    EXPECT_EQ(doc["t_h"]["7"], "1/3");
    EXPECT_EQ(doc["v_j"]["3"], "5/3");
    EXPECT_EQ(doc["v_j"]["4"], "1/6");
    EXPECT_EQ(doc["two_e"], "17/3");
    EXPECT_EQ(doc["avg_valence"], "34/11");
}

TEST(Cli, PatchSquareExample) {
    const Result r = invoke({"patch", "square", "--radius", "1.2", "--center", "0.5,0.5", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["vertices"], 16);
    EXPECT_EQ(doc["edges"], 24);
    EXPECT_EQ(doc["tiles"], 9);
    EXPECT_EQ(doc["euler"], 1);
    EXPECT_NE(r.out.find("\"radius\": 1.200000000"), std::string::npos);
}

TEST(Cli, RadiusInUnitsOfU) {
    const Result a = invoke({"patch", "square", "--radius", "4U", "--format", "json"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("\"radius\": 2.828427125"), std::string::npos) << a.out;
    EXPECT_NEAR(parse_length("2.5U", 2.0), 5.0, 1e-15);
    EXPECT_NEAR(parse_length("U", 3.0), 3.0, 1e-15);
    EXPECT_EQ(parse_radii("10U:30U:10U", 1.5), (std::vector<double>{15.0, 30.0, 45.0}));
    EXPECT_EQ(parse_radii("1:2:0.5", 1.0).size(), 3u);
}

TEST(Cli, CsvQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_row({"x", "y z", "1,2"}), "x,y z,\"1,2\"\r\n");
    const Result r = invoke({"--format", "csv", "stats", "square"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("field,value\r\n", 0), 0u);
    EXPECT_NE(r.out.find("quotient,V=1 E=2 F=1\r\n"), std::string::npos);
}

TEST(Cli, Deterministic) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"converge", "pentagon-type-5", "--radii", "3U:6U:1.5U", "--format", "json"},
          std::vector<std::string>{"verify", "pentagon-type-15"}, std::vector<std::string>{"list", "--format", "csv"}}) {
        EXPECT_EQ(invoke(args).out, invoke(args).out);
    }
}

TEST(Cli, VerifyPassesOnCatalog) {
    const Result r = invoke({"verify", "hexagon-type-2", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_TRUE(doc["passed"].get<bool>());
    EXPECT_EQ(doc["counts"]["failed"], 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"stats"}).code, 2);
    EXPECT_EQ(invoke({"stats", "nonexistent"}).code, 2);
    EXPECT_EQ(invoke({"list", "--format", "yaml"}).code, 2);
    EXPECT_EQ(invoke({"patch", "square", "--radius", "abc"}).code, 2);
    EXPECT_EQ(invoke({"patch", "square", "--radius", "0.1"}).code, 2);
    EXPECT_EQ(invoke({"converge", "square", "--radii", "3:1:1"}).code, 2);
    const Result usage = invoke({"frobnicate"});
    EXPECT_NE(usage.err.find("usage: tilebalance"), std::string::npos);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, CheckFile) {
    const fs::path good = fs::temp_directory_path() / "tilebalance_cli_good.json";
    const fs::path bad = fs::temp_directory_path() / "tilebalance_cli_bad.json";
    const fs::path broken = fs::temp_directory_path() / "tilebalance_cli_broken.json";
    std::ofstream(good) << R"({"name": "sq", "type_label": "", "lattice": [[1,0],[0,1]], "vertices": [[0,0]],
 "tiles": [[[0,0,0],[0,1,0],[0,1,1],[0,0,1]]],
 "expected": {"t": {"4": "1"}, "v": {"4": "1"}, "vertices_per_tile": "1", "edges_per_tile": "2", "w": {"4": "1"}, "corners": 4, "edge_to_edge": true}})";
    std::ofstream(bad) << R"({"name": "sq", "type_label": "", "lattice": [[1,0],[0,1]], "vertices": [[0,0]],
 "tiles": [[[0,0,0],[0,1,0],[0,1,1],[0,0,1]]],
 "expected": {"t": {"4": "1"}, "v": {"4": "2"}, "vertices_per_tile": "2", "edges_per_tile": "2", "w": {"4": "1"}, "corners": 4, "edge_to_edge": true}})";
    std::ofstream(broken) << "{\n \"name\": \n}";
    EXPECT_EQ(invoke({"check", good.string()}).code, 0);
    const Result b = invoke({"check", bad.string()});
    EXPECT_EQ(b.code, 1);
    EXPECT_NE(b.out.find("FAIL    EXPECTED"), std::string::npos) << b.out;
    const Result c = invoke({"check", broken.string()});
    EXPECT_EQ(c.code, 2);
    EXPECT_NE(c.err.find(":3:"), std::string::npos) << c.err;
    EXPECT_EQ(invoke({"check", "square"}).code, 2);
    fs::remove(good);
    fs::remove(bad);
    fs::remove(broken);
}

TEST(Cli, RenderSvg) {
    const fs::path svg = fs::temp_directory_path() / "tilebalance_cli.svg";
    const Result r = invoke({"render", "square", "--radius", "2.5", "--center", "0.5,0.5", "-o", svg.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string text = slurp(svg);
    EXPECT_EQ(text.rfind("<?xml", 0), 0u);
    EXPECT_NE(text.find("version=\"1.1\""), std::string::npos);
    EXPECT_NE(text.find("class=\"f1\""), std::string::npos);
    EXPECT_NE(text.find("class=\"f2\""), std::string::npos);
    EXPECT_NE(text.find(".f3 {"), std::string::npos);
    EXPECT_NE(text.find("<circle class=\"disk\""), std::string::npos);
    const Result plain = invoke({"render", "triangle", "-o", svg.string()});
    ASSERT_EQ(plain.code, 0);
    EXPECT_NE(slurp(svg).find("class=\"tile\""), std::string::npos);
    fs::remove(svg);
}

TEST(Cli, CatalogEnvironmentOverride) {
    const fs::path dir = fs::temp_directory_path() / "tilebalance_cli_catalog";
    fs::create_directories(dir);
    std::ofstream(dir / "unit.json") << R"({"name": "unit", "type_label": "", "lattice": [[1,0],[0,1]],
 "vertices": [[0,0]], "tiles": [[[0,0,0],[0,1,0],[0,1,1],[0,0,1]]]})";
    setenv("TILEBALANCE_CATALOG", dir.c_str(), 1);
    const Result r = invoke({"list", "--format", "csv"});
    unsetenv("TILEBALANCE_CATALOG");
    fs::remove_all(dir);
    EXPECT_EQ(r.out, "name,type_label,edge_to_edge,tiles_per_domain\r\nunit,,true,1\r\n");
}
