#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "tilebalance/catalog.hpp"
#include "tilebalance/error.hpp"
#include "tilebalance/periodic_map.hpp"

using namespace tilebalance;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const TilingError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no TilingError thrown";
    return ErrorCode::InvalidArgument;
}

fs::path write_temp(const std::string& name, const std::string& text) {
    const fs::path p = fs::temp_directory_path() / ("tilebalance_test_" + name);
    std::ofstream(p) << text;
    return p;
}

const char* kSquare = R"({"name": "sq", "type_label": "", "lattice": [[1,0],[0,1]],
 "vertices": [[0,0]], "tiles": [[[0,0,0],[0,1,0],[0,1,1],[0,0,1]]]})";

}  // namespace

TEST(Catalog, ListingIsSortedAndComplete) {
    const auto entries = list_catalog();
    std::vector<std::string> names;
    for (const auto& e : entries) names.push_back(e.name);
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    const std::set<std::string> have(names.begin(), names.end());
    for (const char* required : {"square", "triangle", "regular-hexagon", "hexagon-type-1", "hexagon-type-2",
                                 "hexagon-type-3"}) {
        EXPECT_TRUE(have.count(required)) << required;
    }
    for (const char* label : {"1", "1e", "2", "2e", "3", "4", "5", "10", "11", "12", "13", "14", "15"}) {
        EXPECT_TRUE(have.count(std::string("pentagon-type-") + label)) << label;
    }
    for (const auto& e : entries) {
        if (e.name == "pentagon-type-5") EXPECT_TRUE(e.edge_to_edge);
        if (e.name == "pentagon-type-1") EXPECT_FALSE(e.edge_to_edge);
        if (e.name == "square") EXPECT_EQ(e.tiles_per_domain, 1u);
    }
}

TEST(Catalog, EveryEntryMatchesItsExpectedStats) {
    for (const std::string& name : catalog_names()) {
        SCOPED_TRACE(name);
        const TilingTemplate t = load_template(name);
        ASSERT_TRUE(t.expected.has_value());
        const PeriodicTiling tiling = build_periodic_tiling(t);
        EXPECT_EQ(limit_stats(tiling), *t.expected);
    }
}

TEST(Catalog, SquareHasOneTile) {
    const TilingTemplate t = load_template("square");
    EXPECT_EQ(t.tiles.size(), 1u);
}

TEST(Catalog, Type1eIsEdgeToEdge) {
    const PeriodicTiling t = build_periodic_tiling(load_template("pentagon-type-1e"));
    EXPECT_TRUE(is_edge_to_edge(t));
    EXPECT_EQ(limit_stats(t).vertices_per_tile, Rational(3, 2));
}

TEST(Catalog, SerializationRoundTrips) {
    for (const std::string& name : catalog_names()) {
        SCOPED_TRACE(name);
        const TilingTemplate t = load_template(name);
        EXPECT_EQ(parse_template(serialize_template(t)), t);
    }
    TilingTemplate bare = parse_template(kSquare);
    EXPECT_FALSE(bare.flat.has_value());
    EXPECT_FALSE(bare.expected.has_value());
    EXPECT_EQ(parse_template(serialize_template(bare)), bare);
}

TEST(Catalog, LoadsFromFile) {
    const fs::path p = write_temp("square.json", kSquare);
    const TilingTemplate t = load_template(p.string());
    EXPECT_EQ(t.name, "sq");
    EXPECT_EQ(t.tiles[0].size(), 4u);
    fs::remove(p);
}

TEST(Catalog, UnknownSourceIsNotFound) {
    EXPECT_EQ(code_of([] { load_template("no-such-tiling"); }), ErrorCode::NotFound);
}

TEST(Catalog, BadVertexReferenceIsSchemaError) {
    const char* text = R"({"name": "x", "type_label": "", "lattice": [[1,0],[0,1]],
 "vertices": [[0,0],[0.5,0],[0.5,0.5],[0,0.5]], "tiles": [[[0,0,0],[99,0,0],[2,0,0]]]})";
    const fs::path p = write_temp("badref.json", text);
    EXPECT_EQ(code_of([&] { load_template(p.string()); }), ErrorCode::SchemaError);
    fs::remove(p);
}

TEST(Catalog, SchemaErrors) {
    EXPECT_EQ(code_of([] { parse_template(R"({"name": "x"})"); }), ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] { parse_template("[1, 2]"); }), ErrorCode::SchemaError);
    const std::string float_rational = std::string(kSquare).substr(0, std::string(kSquare).size() - 1) +
        R"(, "expected": {"t": {"4": 1.0}, "v": {}, "vertices_per_tile": "1", "edges_per_tile": "2", "w": {}, "corners": 4, "edge_to_edge": true}})";
    EXPECT_EQ(code_of([&] { parse_template(float_rational); }), ErrorCode::SchemaError);
}

TEST(Catalog, ParseErrorReportsLineAndColumn) {
    try {
        parse_template("{\n  \"name\": \"x\",\n  oops\n}", "bad.json");
        FAIL();
    } catch (const TilingError& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("bad.json:3:"), std::string::npos) << e.what();
    }
}

TEST(Catalog, EnvironmentOverridesDirectory) {
    const fs::path dir = fs::temp_directory_path() / "tilebalance_test_catalog";
    fs::create_directories(dir);
    std::ofstream(dir / "only.json") << kSquare;
    setenv("TILEBALANCE_CATALOG", dir.c_str(), 1);
    EXPECT_EQ(catalog_names(), std::vector<std::string>{"only"});
    EXPECT_EQ(load_template("only").name, "sq");
    EXPECT_EQ(code_of([] { load_template("square"); }), ErrorCode::NotFound);
    unsetenv("TILEBALANCE_CATALOG");
    fs::remove_all(dir);
    EXPECT_GT(catalog_names().size(), 1u);
}
