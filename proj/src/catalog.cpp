#include "tilebalance/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "catalog_embedded.hpp"
#include "tilebalance/error.hpp"
#include "tilebalance/periodic_map.hpp"

namespace tilebalance {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void schema_error(std::string_view origin, const std::string& what) {
    throw TilingError(ErrorCode::SchemaError, std::string(origin) + ": " + what);
}

const json& require(const json& obj, const char* key, std::string_view origin) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(origin, std::string("missing field \"") + key + "\"");
    return *it;
}

double number(const json& j, std::string_view origin, const std::string& where) {
    if (!j.is_number()) schema_error(origin, where + " must be a number");
    return j.get<double>();
}

std::int64_t integer(const json& j, std::string_view origin, const std::string& where) {
    if (!j.is_number_integer()) schema_error(origin, where + " must be an integer");
    return j.get<std::int64_t>();
}

Vec2 point(const json& j, std::string_view origin, const std::string& where) {
    if (!j.is_array() || j.size() != 2) schema_error(origin, where + " must be a pair [x, y]");
    return {number(j[0], origin, where), number(j[1], origin, where)};
}

Rational rational(const json& j, std::string_view origin, const std::string& where) {
    if (!j.is_string()) schema_error(origin, where + " must be a rational string such as \"2/3\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        schema_error(origin, where + " is not a valid rational: \"" + j.get<std::string>() + "\"");
    }
}

std::map<int, Rational> rational_map(const json& j, std::string_view origin, const std::string& where) {
    if (!j.is_object()) schema_error(origin, where + " must be an object");
    std::map<int, Rational> out;
    for (const auto& [key, value] : j.items()) {
        int k = 0;
        try {
            std::size_t used = 0;
            k = std::stoi(key, &used);
            if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            schema_error(origin, where + " has non-integer key \"" + key + "\"");
        }
        Rational r = rational(value, origin, where + "." + key);
        if (!r.is_zero()) out.emplace(k, std::move(r));
    }
    return out;
}

LimitStats parse_stats(const json& j, std::string_view origin) {
    if (!j.is_object()) schema_error(origin, "\"expected\" must be an object");
    LimitStats s;
    s.t = rational_map(require(j, "t", origin), origin, "expected.t");
    s.v = rational_map(require(j, "v", origin), origin, "expected.v");
    s.vertices_per_tile = rational(require(j, "vertices_per_tile", origin), origin, "expected.vertices_per_tile");
    s.edges_per_tile = rational(require(j, "edges_per_tile", origin), origin, "expected.edges_per_tile");
    s.w = rational_map(require(j, "w", origin), origin, "expected.w");
    s.corners = static_cast<int>(integer(require(j, "corners", origin), origin, "expected.corners"));
    const json& e2e = require(j, "edge_to_edge", origin);
    if (!e2e.is_boolean()) schema_error(origin, "expected.edge_to_edge must be a boolean");
    s.edge_to_edge = e2e.get<bool>();
    return s;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TilingError(ErrorCode::NotFound, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json rational_object(const std::map<int, Rational>& m) {
    json out = json::object();
    for (const auto& [k, r] : m) out[std::to_string(k)] = r.str();
    return out;
}

// Directory entries, keyed by template name.
std::map<std::string, fs::path> directory_entries(const fs::path& dir) {
    std::map<std::string, fs::path> out;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw TilingError(ErrorCode::NotFound, "catalog directory " + dir.string() + " does not exist");
    }
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            out.emplace(entry.path().stem().string(), entry.path());
        }
    }
    return out;
}

}  // namespace

std::optional<fs::path> catalog_override() {
    const char* env = std::getenv("TILEBALANCE_CATALOG");
    if (env == nullptr || *env == '\0') return std::nullopt;
    return fs::path(env);
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    if (auto dir = catalog_override()) {
        for (const auto& [name, path] : directory_entries(*dir)) names.push_back(name);
    } else {
        for (const auto& e : detail::embedded_catalog()) names.emplace_back(e.name);
        std::sort(names.begin(), names.end());
    }
    return names;
}

std::vector<CatalogEntry> list_catalog() {
    std::vector<CatalogEntry> out;
    for (const std::string& name : catalog_names()) {
        const PeriodicTiling tiling = build_periodic_tiling(load_template(name));
        out.push_back({name, tiling.type_label(), is_edge_to_edge(tiling), tiling.tile_count()});
    }
    return out;
}

TilingTemplate load_template(std::string_view source) {
    const fs::path path{std::string(source)};
    std::error_code ec;
    if (fs::is_regular_file(path, ec)) return parse_template(read_file(path), path.string());

    if (auto dir = catalog_override()) {
        const auto entries = directory_entries(*dir);
        auto it = entries.find(std::string(source));
        if (it != entries.end()) return parse_template(read_file(it->second), it->second.string());
    } else {
        for (const auto& e : detail::embedded_catalog()) {
            if (e.name == source) return parse_template(e.json, std::string("catalog:") + std::string(e.name));
        }
    }
    throw TilingError(ErrorCode::NotFound, "no catalog entry or file named \"" + std::string(source) + "\"");
}

TilingTemplate parse_template(std::string_view text, std::string_view origin) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string msg = e.what();
        if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
        throw TilingError(ErrorCode::ParseError, std::string(origin) + ":" + std::to_string(line) + ":" +
                                                     std::to_string(column) + ": " + msg);
    }
    if (!doc.is_object()) schema_error(origin, "top level must be an object");

    TilingTemplate t;
    const json& name = require(doc, "name", origin);
    const json& label = require(doc, "type_label", origin);
    if (!name.is_string()) schema_error(origin, "\"name\" must be a string");
    if (!label.is_string()) schema_error(origin, "\"type_label\" must be a string");
    t.name = name.get<std::string>();
    t.type_label = label.get<std::string>();

    const json& lattice = require(doc, "lattice", origin);
    if (!lattice.is_array() || lattice.size() != 2) schema_error(origin, "\"lattice\" must hold two vectors");
    t.lattice = {point(lattice[0], origin, "lattice[0]"), point(lattice[1], origin, "lattice[1]")};

    const json& vertices = require(doc, "vertices", origin);
    if (!vertices.is_array()) schema_error(origin, "\"vertices\" must be an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        t.vertices.push_back(point(vertices[i], origin, "vertices[" + std::to_string(i) + "]"));
    }

    const json& tiles = require(doc, "tiles", origin);
    if (!tiles.is_array()) schema_error(origin, "\"tiles\" must be an array");
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const std::string where = "tiles[" + std::to_string(i) + "]";
        if (!tiles[i].is_array()) schema_error(origin, where + " must be an array");
        std::vector<VertexRef> cycle;
        for (std::size_t k = 0; k < tiles[i].size(); ++k) {
            const json& ref = tiles[i][k];
            const std::string at = where + "[" + std::to_string(k) + "]";
            if (!ref.is_array() || ref.size() != 3) schema_error(origin, at + " must be [vertex, m, n]");
            const std::int64_t vi = integer(ref[0], origin, at);
            if (vi < 0 || static_cast<std::size_t>(vi) >= t.vertices.size()) {
                schema_error(origin, at + " references vertex " + std::to_string(vi) + " of " +
                                         std::to_string(t.vertices.size()));
            }
            cycle.push_back({static_cast<std::size_t>(vi), {integer(ref[1], origin, at), integer(ref[2], origin, at)}});
        }
        t.tiles.push_back(std::move(cycle));
    }

    if (auto it = doc.find("flat"); it != doc.end()) {
        if (!it->is_array()) schema_error(origin, "\"flat\" must be an array");
        std::vector<std::pair<std::size_t, std::size_t>> marks;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& m = (*it)[i];
            const std::string at = "flat[" + std::to_string(i) + "]";
            if (!m.is_array() || m.size() != 2) schema_error(origin, at + " must be [tile, position]");
            const std::int64_t tile = integer(m[0], origin, at);
            const std::int64_t pos = integer(m[1], origin, at);
            if (tile < 0 || static_cast<std::size_t>(tile) >= t.tiles.size() || pos < 0 ||
                static_cast<std::size_t>(pos) >= t.tiles[static_cast<std::size_t>(tile)].size()) {
                schema_error(origin, at + " does not name a tile boundary position");
            }
            marks.emplace_back(static_cast<std::size_t>(tile), static_cast<std::size_t>(pos));
        }
        t.flat = std::move(marks);
    }
    if (auto it = doc.find("expected"); it != doc.end()) t.expected = parse_stats(*it, origin);
    return t;
}

std::string serialize_template(const TilingTemplate& tmpl) {
    auto vec = [](Vec2 p) { return json::array({p.x, p.y}); };
    std::ostringstream os;
    os << "{\n";
    os << "  \"name\": " << json(tmpl.name).dump() << ",\n";
    os << "  \"type_label\": " << json(tmpl.type_label).dump() << ",\n";
    os << "  \"lattice\": " << json::array({vec(tmpl.lattice.t1), vec(tmpl.lattice.t2)}).dump(-1, ' ', false) << ",\n";
    os << "  \"vertices\": [";
    for (std::size_t i = 0; i < tmpl.vertices.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << vec(tmpl.vertices[i]).dump();
    }
    os << "\n  ],\n";
    os << "  \"tiles\": [";
    for (std::size_t i = 0; i < tmpl.tiles.size(); ++i) {
        json cycle = json::array();
        for (const VertexRef& r : tmpl.tiles[i]) cycle.push_back(json::array({r.index, r.shift.m, r.shift.n}));
        os << (i ? ",\n    " : "\n    ") << cycle.dump();
    }
    os << "\n  ]";
    if (tmpl.flat) {
        json marks = json::array();
        for (const auto& [tile, pos] : *tmpl.flat) marks.push_back(json::array({tile, pos}));
        os << ",\n  \"flat\": " << marks.dump();
    }
    if (tmpl.expected) {
        const LimitStats& s = *tmpl.expected;
        nlohmann::ordered_json e;
        e["t"] = rational_object(s.t);
        e["v"] = rational_object(s.v);
        e["vertices_per_tile"] = s.vertices_per_tile.str();
        e["edges_per_tile"] = s.edges_per_tile.str();
        e["w"] = rational_object(s.w);
        e["corners"] = s.corners;
        e["edge_to_edge"] = s.edge_to_edge;
        os << ",\n  \"expected\": " << e.dump();
    }
    os << "\n}\n";
    return os.str();
}

}  // namespace tilebalance
