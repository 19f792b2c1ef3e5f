#include "tilebalance/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tilebalance/analyzer.hpp"
#include "tilebalance/catalog.hpp"
#include "tilebalance/error.hpp"
#include "tilebalance/geometry.hpp"
#include "tilebalance/render.hpp"
#include "tilebalance/report.hpp"

namespace tilebalance {

namespace {

constexpr const char* kSynopsis =
    "usage: tilebalance [--format text|json|csv] <command> ...\n"
    "  list\n"
    "  stats <name|file>\n"
    "  patch <name|file> --radius R [--center X,Y]\n"
    "  converge <name|file> --radii R1:R2:STEP [--center X,Y]\n"
    "  verify <name|file>\n"
    "  table1\n"
    "  render <name|file> [--radius R] -o FILE.svg\n"
    "  check <file>\n"
    "lengths ending in U are multiples of the tile circumradius bound U\n";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw UsageError("not a number: \"" + std::string(s) + "\"");
    }
    return v;
}

Vec2 parse_point(std::string_view s) {
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw UsageError("expected X,Y but got \"" + std::string(s) + "\"");
    return {parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
}

std::string point_text(Vec2 p) { return fixed9(p.x) + "," + fixed9(p.y); }

std::string join(const std::map<int, Rational>& m, const char* sym) {
    std::string out;
    for (const auto& [k, x] : m) out += (out.empty() ? "" : " ") + (sym + std::to_string(k)) + "=" + x.str();
    return out.empty() ? "-" : out;
}

std::string join(const std::map<int, std::int64_t>& m, const char* sym) {
    std::string out;
    for (const auto& [k, x] : m) out += (out.empty() ? "" : " ") + (sym + std::to_string(k)) + "=" + std::to_string(x);
    return out.empty() ? "-" : out;
}

JsonValue count_map(const std::map<int, std::int64_t>& m) {
    JsonValue::Object o;
    for (const auto& [k, n] : m) o.emplace_back(std::to_string(k), JsonValue::integer(n));
    return o;
}

// An ordered key/value report rendered as aligned text, a JSON object, or two-column CSV.
class Record {
public:
    void add(std::string key, std::string text, JsonValue json) {
        rows_.push_back({std::move(key), std::move(text), std::move(json)});
    }
    void add(std::string key, std::string text) {
        std::string copy = text;
        add(std::move(key), std::move(copy), JsonValue(std::move(text)));
    }
    void add_length(std::string key, double x) { add(std::move(key), fixed9(x), JsonValue::length(x)); }
    void add_int(std::string key, long long x) { add(std::move(key), std::to_string(x), JsonValue::integer(x)); }
    void add_bool(std::string key, bool b) { add(std::move(key), b ? "true" : "false", JsonValue(b)); }
    void add_rational(std::string key, const Rational& r) { add(std::move(key), r.str()); }

    void write(std::ostream& os, Format f) const {
        if (f == Format::Json) {
            JsonValue::Object o;
            for (const Row& r : rows_) o.emplace_back(r.key, r.json);
            os << JsonValue(std::move(o)).dump() << "\n";
        } else if (f == Format::Csv) {
            os << csv_row({"field", "value"});
            for (const Row& r : rows_) os << csv_row({r.key, r.text});
        } else {
            std::size_t width = 0;
            for (const Row& r : rows_) width = std::max(width, r.key.size());
            for (const Row& r : rows_) os << std::left << std::setw(static_cast<int>(width + 2)) << r.key << r.text << "\n";
        }
    }

private:
    struct Row {
        std::string key;
        std::string text;
        JsonValue json;
    };
    std::vector<Row> rows_;
};

// Rows of strings rendered as an aligned table, a JSON array of objects, or CSV.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row, std::vector<JsonValue> json) {
        rows_.push_back(std::move(row));
        json_.push_back(std::move(json));
    }

    [[nodiscard]] JsonValue to_json() const {
        JsonValue::Array a;
        for (const auto& row : json_) {
            JsonValue::Object o;
            for (std::size_t i = 0; i < header_.size(); ++i) o.emplace_back(header_[i], row[i]);
            a.emplace_back(std::move(o));
        }
        return a;
    }

    void write_text(std::ostream& os) const {
        std::vector<std::size_t> width(header_.size());
        for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        }
        auto line = [&](const std::vector<std::string>& row) {
            std::string s;
            for (std::size_t i = 0; i < row.size(); ++i) {
                s += row[i];
                if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
            }
            s.erase(s.find_last_not_of(' ') + 1);
            os << s << "\n";
        };
        line(header_);
        for (const auto& row : rows_) line(row);
    }

    void write_csv(std::ostream& os) const {
        os << csv_row(header_);
        for (const auto& row : rows_) os << csv_row(row);
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::vector<JsonValue>> json_;
};

JsonValue check_json(const CheckResult& c) {
    return JsonValue::Object{{"check_id", c.check_id}, {"applicable", c.applicable}, {"passed", c.passed},
                             {"lhs", c.lhs},           {"rhs", c.rhs},               {"note", c.note}};
}

const char* status(const CheckResult& c) {
    if (!c.applicable) return "SKIP";
    return c.passed ? "PASS" : "FAIL";
}

// Writes a check list; returns 1 when an applicable check failed.
int write_checks(std::ostream& os, Format f, const std::string& name, const std::vector<CheckResult>& checks) {
    int passed = 0, failed = 0, skipped = 0;
    for (const CheckResult& c : checks) {
        if (!c.applicable) {
            ++skipped;
        } else if (c.passed) {
            ++passed;
        } else {
            ++failed;
        }
    }
    if (f == Format::Json) {
        JsonValue::Array a;
        for (const CheckResult& c : checks) a.push_back(check_json(c));
        JsonValue doc = JsonValue::Object{{"name", name},
                                          {"passed", failed == 0},
                                          {"counts", JsonValue::Object{{"passed", JsonValue::integer(passed)},
                                                                       {"failed", JsonValue::integer(failed)},
                                                                       {"not_applicable", JsonValue::integer(skipped)}}},
                                          {"checks", std::move(a)}};
        os << doc.dump() << "\n";
    } else if (f == Format::Csv) {
        os << csv_row({"name", "check_id", "status", "lhs", "rhs", "note"});
        for (const CheckResult& c : checks) os << csv_row({name, c.check_id, status(c), c.lhs, c.rhs, c.note});
    } else {
        Table t({"status", "check", "lhs", "rhs", "note"});
        for (const CheckResult& c : checks) t.add({status(c), c.check_id, c.lhs, c.rhs, c.note}, {});
        os << name << ": " << passed << " passed, " << failed << " failed, " << skipped << " not applicable\n";
        t.write_text(os);
    }
    return failed == 0 ? 0 : 1;
}

struct Loaded {
    TilingTemplate tmpl;
    PeriodicTiling tiling;
};

Loaded load(const std::string& source) {
    TilingTemplate tmpl = load_template(source);
    PeriodicTiling tiling = build_periodic_tiling(tmpl);
    return {std::move(tmpl), std::move(tiling)};
}

int cmd_list(std::ostream& out, Format f) {
    Table t({"name", "type_label", "edge_to_edge", "tiles_per_domain"});
    for (const CatalogEntry& e : list_catalog()) {
        t.add({e.name, e.type_label, e.edge_to_edge ? "true" : "false", std::to_string(e.tiles_per_domain)},
              {e.name, e.type_label, e.edge_to_edge, JsonValue::integer(static_cast<long long>(e.tiles_per_domain))});
    }
    if (f == Format::Json) {
        out << t.to_json().dump() << "\n";
    } else if (f == Format::Csv) {
        t.write_csv(out);
    } else {
        t.write_text(out);
    }
    return 0;
}

int cmd_stats(std::ostream& out, Format f, const std::string& source) {
    const Loaded l = load(source);
    const LimitStats s = limit_stats(l.tiling);
    const QuotientCensus q = quotient_counts(l.tiling);
    const BoundsReport b = validate_geometry(l.tiling);
    Record r;
    r.add("name", l.tiling.name());
    r.add("type_label", l.tiling.type_label());
    r.add_int("corners", s.corners);
    r.add_bool("edge_to_edge", s.edge_to_edge);
    r.add_int("tiles_per_domain", static_cast<long long>(l.tiling.tile_count()));
    r.add("quotient",
          "V=" + std::to_string(q.vertices) + " E=" + std::to_string(q.edges) + " F=" + std::to_string(q.tiles),
          JsonValue::Object{{"vertices", JsonValue::integer(q.vertices)},
                            {"edges", JsonValue::integer(q.edges)},
                            {"tiles", JsonValue::integer(q.tiles)},
                            {"tiles_by_adjacents", count_map(q.tiles_by_adjacents)},
                            {"vertices_by_valence", count_map(q.vertices_by_valence)}});
    if (f == Format::Csv) {
        for (const auto& [h, x] : s.t) r.add_rational("t" + std::to_string(h), x);
        for (const auto& [j, x] : s.v) r.add_rational("v" + std::to_string(j), x);
    } else {
        r.add("t_h", join(s.t, "t"), JsonValue::rational_map(s.t));
        r.add("v_j", join(s.v, "v"), JsonValue::rational_map(s.v));
    }
    r.add_rational("v", s.vertices_per_tile);
    r.add_rational("e", s.edges_per_tile);
    r.add_rational("two_e", 2 * s.edges_per_tile);
    if (f == Format::Csv) {
        for (const auto& [j, x] : s.w) r.add_rational("w" + std::to_string(j), x);
    } else {
        r.add("w_j", join(s.w, "w"), JsonValue::rational_map(s.w));
    }
    r.add_rational("avg_valence", s.average_valence());
    r.add_rational("avg_adjacents", s.average_adjacents());
    r.add_length("inradius", b.inradius);
    r.add_length("circumradius", b.circumradius);
    r.write(out, f);
    return 0;
}

int cmd_patch(std::ostream& out, Format f, const std::string& source, const std::string& radius,
              const std::optional<std::string>& center) {
    const Loaded l = load(source);
    const double U = circumradius_bound(l.tiling);
    const Vec2 m = center ? parse_point(*center) : default_center(l.tiling);
    const Patch p = patch(l.tiling, {m, parse_length(radius, U)});
    const PatchCensus c = patch_census(p, l.tiling);
    Record r;
    r.add("name", l.tiling.name());
    r.add("center", point_text(m), JsonValue::Array{JsonValue::length(m.x), JsonValue::length(m.y)});
    r.add_length("radius", p.disk.radius);
    r.add_length("U", U);
    r.add_int("f1", static_cast<long long>(p.f1.size()));
    r.add_int("f2", static_cast<long long>(p.f2.size()));
    r.add_int("f3", static_cast<long long>(p.f3.size()));
    r.add_int("vertices", c.vertices);
    r.add_int("edges", c.edges);
    r.add_int("tiles", c.tiles);
    r.add_int("euler", c.euler());
    if (f == Format::Csv) {
        for (const auto& [h, n] : c.tiles_by_adjacents) r.add_int("t" + std::to_string(h), n);
        for (const auto& [j, n] : c.vertices_by_valence) r.add_int("v" + std::to_string(j), n);
    } else {
        r.add("tiles_by_adjacents", join(c.tiles_by_adjacents, "t"), count_map(c.tiles_by_adjacents));
        r.add("vertices_by_valence", join(c.vertices_by_valence, "v"), count_map(c.vertices_by_valence));
    }
    r.write(out, f);
    return 0;
}

int cmd_converge(std::ostream& out, Format f, const std::string& source, const std::string& radii_text,
                 const std::optional<std::string>& center) {
    const Loaded l = load(source);
    const double U = circumradius_bound(l.tiling);
    const Vec2 m = center ? parse_point(*center) : default_center(l.tiling);
    std::vector<double> radii = parse_radii(radii_text, U);
    std::sort(radii.begin(), radii.end());
    const LimitStats limit = limit_stats(l.tiling);
    const RatioSeries series = ratio_series(l.tiling, m, radii);

    Table t({"radius", "radius_over_U", "tiles", "vertices", "edges", "euler", "v_over_t", "e_over_t", "t_h_over_t",
             "v_j_over_t", "max_rel_error"});
    for (const RatioPoint& p : series.points) {
        const double err = max_relative_error(p, limit);
        t.add({fixed9(p.radius), fixed9(p.radius / U), std::to_string(p.census.tiles), std::to_string(p.census.vertices),
               std::to_string(p.census.edges), std::to_string(p.census.euler()), p.vertices_per_tile.str(),
               p.edges_per_tile.str(), join(p.t, "t"), join(p.v, "v"), fixed9(err)},
              {JsonValue::length(p.radius), JsonValue::length(p.radius / U), JsonValue::integer(p.census.tiles),
               JsonValue::integer(p.census.vertices), JsonValue::integer(p.census.edges),
               JsonValue::integer(p.census.euler()), p.vertices_per_tile.str(), p.edges_per_tile.str(),
               JsonValue::rational_map(p.t), JsonValue::rational_map(p.v), JsonValue::length(err)});
    }
    if (f == Format::Json) {
        JsonValue doc = JsonValue::Object{
            {"name", l.tiling.name()},
            {"center", JsonValue::Array{JsonValue::length(m.x), JsonValue::length(m.y)}},
            {"U", JsonValue::length(U)},
            {"limit", JsonValue::Object{{"v", limit.vertices_per_tile.str()},
                                        {"e", limit.edges_per_tile.str()},
                                        {"t", JsonValue::rational_map(limit.t)},
                                        {"v_j", JsonValue::rational_map(limit.v)}}},
            {"points", t.to_json()},
            {"envelope", JsonValue::length(series.envelope)}};
        out << doc.dump() << "\n";
    } else if (f == Format::Csv) {
        t.write_csv(out);
    } else {
        out << "name      " << l.tiling.name() << "\n"
            << "center    " << point_text(m) << "\n"
            << "U         " << fixed9(U) << "\n"
            << "limit     v=" << limit.vertices_per_tile.str() << " e=" << limit.edges_per_tile.str() << " "
            << join(limit.t, "t") << " " << join(limit.v, "v") << "\n"
            << "envelope  " << fixed9(series.envelope) << "\n";
        t.write_text(out);
    }
    return 0;
}

int cmd_verify(std::ostream& out, Format f, const std::string& source) {
    const Loaded l = load(source);
    std::vector<CheckResult> checks = check_structure(l.tiling);
    const auto stats_checks = run_all_checks(limit_stats(l.tiling));
    checks.insert(checks.end(), stats_checks.begin(), stats_checks.end());
    return write_checks(out, f, l.tiling.name(), checks);
}

int cmd_check(std::ostream& out, Format f, const std::string& file) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(file, ec)) {
        throw TilingError(ErrorCode::NotFound, "no template file \"" + file + "\"");
    }
    const TilingTemplate tmpl = load_template(file);
    std::vector<CheckResult> checks;
    std::optional<PeriodicTiling> tiling;
    try {
        tiling = build_periodic_tiling(tmpl);
        checks.push_back({"BUILD", true, true, "ok", "ok", ""});
    } catch (const TilingError& e) {
        checks.push_back({"BUILD", true, false, std::string(to_string(e.code())), "ok", e.what()});
    }
    if (tiling) {
        try {
            const BoundsReport b = validate_geometry(*tiling);
            checks.push_back({"GEOMETRY", true, true, "u=" + fixed9(b.inradius) + " U=" + fixed9(b.circumradius),
                              "0 < u <= U, no overlaps", ""});
        } catch (const TilingError& e) {
            checks.push_back({"GEOMETRY", true, false, std::string(to_string(e.code())), "ok", e.what()});
        }
        const auto structure = check_structure(*tiling);
        checks.insert(checks.end(), structure.begin(), structure.end());
        if (tmpl.expected) {
            const LimitStats s = limit_stats(*tiling);
            const bool same = s == *tmpl.expected;
            checks.push_back({"EXPECTED", true, same, join(s.t, "t") + " " + join(s.v, "v"),
                              join(tmpl.expected->t, "t") + " " + join(tmpl.expected->v, "v"),
                              same ? "" : "computed stats differ from the template's expected block"});
        } else {
            checks.push_back({"EXPECTED", false, true, "", "", "template has no expected block"});
        }
    }
    return write_checks(out, f, tmpl.name, checks);
}

int cmd_table1(std::ostream& out, Format f) {
    const auto diff = table1_compare();
    const auto& rows = table1_rows();
    bool all = true;
    auto mismatched = [](const CheckResult& c) {
        std::vector<std::string> fields;
        std::istringstream is(c.note);
        std::string w;
        is >> w;  // "mismatched:"
        while (is >> w) fields.push_back(w);
        return fields;
    };
    JsonValue::Array json_rows;
    Table text({"row", "labels", "t_h", "v_j", "2e", "w_j", "sum_jw", "catalog"});
    std::string csv = csv_row({"row", "label", "t_h", "v_j", "two_e", "w_j", "avg_valence", "match", "mismatched"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Table1Row& row = rows[i];
        std::string labels;
        JsonValue::Array label_json;
        for (const std::string& lbl : row.labels) {
            labels += (labels.empty() ? "" : ",") + lbl;
            label_json.emplace_back(lbl);
        }
        bool row_ok = true;
        std::string catalog;
        JsonValue::Array entries;
        for (const auto& [label, c] : diff) {
            if (std::find(row.labels.begin(), row.labels.end(), label) == row.labels.end()) continue;
            row_ok = row_ok && c.passed;
            const auto bad = mismatched(c);
            std::string bad_text;
            JsonValue::Array bad_json;
            for (const std::string& b : bad) {
                bad_text += (bad_text.empty() ? "" : " ") + b;
                bad_json.emplace_back(b);
            }
            catalog += (catalog.empty() ? "" : " ") + label + (c.passed ? ":match" : ":MISMATCH(" + bad_text + ")");
            entries.emplace_back(JsonValue::Object{{"label", label}, {"match", c.passed}, {"mismatched", std::move(bad_json)},
                                                   {"computed", c.lhs}});
            csv += csv_row({std::to_string(i + 1), label, join(row.t, "t"), join(row.v, "v"), row.two_e.str(),
                            join(row.w, "w"), row.avg_valence.str(), c.passed ? "true" : "false", bad_text});
        }
        all = all && row_ok;
        text.add({std::to_string(i + 1), labels, join(row.t, "t"), join(row.v, "v"), row.two_e.str(), join(row.w, "w"),
                  row.avg_valence.str(), catalog},
                 {});
        json_rows.emplace_back(JsonValue::Object{{"row", JsonValue::integer(static_cast<long long>(i + 1))},
                                                 {"labels", std::move(label_json)},
                                                 {"t", JsonValue::rational_map(row.t)},
                                                 {"v", JsonValue::rational_map(row.v)},
                                                 {"two_e", row.two_e.str()},
                                                 {"w", JsonValue::rational_map(row.w)},
                                                 {"avg_valence", row.avg_valence.str()},
                                                 {"match", row_ok},
                                                 {"entries", std::move(entries)}});
    }
    if (f == Format::Json) {
        out << JsonValue(JsonValue::Object{{"match", all}, {"rows", std::move(json_rows)}}).dump() << "\n";
    } else if (f == Format::Csv) {
        out << csv;
    } else {
        text.write_text(out);
        out << (all ? "all rows match\n" : "MISMATCH\n");
    }
    return all ? 0 : 1;
}

int cmd_render(std::ostream& out, Format f, const std::string& source, const std::optional<std::string>& radius,
               const std::optional<std::string>& center, const std::string& output) {
    const Loaded l = load(source);
    const double U = circumradius_bound(l.tiling);
    const Vec2 m = center ? parse_point(*center) : default_center(l.tiling);
    std::string svg;
    std::size_t tiles = 0;
    if (radius) {
        const Patch p = patch(l.tiling, {m, parse_length(*radius, U)});
        tiles = p.size();
        svg = render_patch_svg(l.tiling, p);
    } else {
        const Disk region{m, 5.0 * U};
        tiles = embed(l.tiling, region).size();
        svg = render_region_svg(l.tiling, region);
    }
    std::ofstream file(output, std::ios::binary);
    if (!file) throw UsageError("cannot write " + output);
    file << svg;
    if (!file) throw UsageError("failed writing " + output);
    Record r;
    r.add("output", output);
    r.add_int("tiles", static_cast<long long>(tiles));
    r.write(out, f);
    return 0;
}

}  // namespace

double parse_length(std::string_view text, double unit) {
    if (!text.empty() && (text.back() == 'U' || text.back() == 'u')) {
        text.remove_suffix(1);
        return (text.empty() ? 1.0 : parse_double(text)) * unit;
    }
    return parse_double(text);
}

std::vector<double> parse_radii(std::string_view text, double unit) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ':') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 3) throw UsageError("--radii expects R1:R2:STEP");
    const double r1 = parse_length(parts[0], unit);
    const double r2 = parse_length(parts[1], unit);
    const double step = parse_length(parts[2], unit);
    if (!(step > 0.0)) throw UsageError("--radii step must be positive");
    if (r2 < r1) throw UsageError("--radii end is below its start");
    const auto count = static_cast<std::size_t>(std::floor((r2 - r1) / step + 1e-9)) + 1;
    if (count > 10000) throw UsageError("--radii describes more than 10000 radii");
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(r1 + static_cast<double>(i) * step);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact census statistics for doubly periodic tilings", "tilebalance"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json or csv");

    std::string source, radius, radii, output;
    std::optional<std::string> center, opt_radius;

    auto* list = app.add_subcommand("list", "List catalog templates");
    auto* stats = app.add_subcommand("stats", "Exact per-tile statistics");
    stats->add_option("source", source, "Catalog name or template file")->required();
    auto* patch_cmd = app.add_subcommand("patch", "Census of the patch generated by a disk");
    patch_cmd->add_option("source", source, "Catalog name or template file")->required();
    patch_cmd->add_option("--radius", radius, "Disk radius (suffix U for multiples of U)")->required();
    patch_cmd->add_option("--center", center, "Disk center X,Y");
    auto* converge = app.add_subcommand("converge", "Empirical ratios over a range of radii");
    converge->add_option("source", source, "Catalog name or template file")->required();
    converge->add_option("--radii", radii, "R1:R2:STEP")->required();
    converge->add_option("--center", center, "Disk center X,Y");
    auto* verify = app.add_subcommand("verify", "Run every identity and proposition check");
    verify->add_option("source", source, "Catalog name or template file")->required();
    auto* table1 = app.add_subcommand("table1", "Compare the pentagon catalog with the reference table");
    auto* render = app.add_subcommand("render", "Draw a patch as SVG");
    render->add_option("source", source, "Catalog name or template file")->required();
    render->add_option("--radius", opt_radius, "Patch radius (suffix U for multiples of U)");
    render->add_option("--center", center, "Disk center X,Y");
    render->add_option("-o,--output", output, "Output SVG file")->required();
    auto* check = app.add_subcommand("check", "Validate a template file");
    check->add_option("file", source, "Template file")->required();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << kSynopsis;
        return 2;
    }

    try {
        const Format f = parse_format(format);
        if (*list) return cmd_list(out, f);
        if (*stats) return cmd_stats(out, f, source);
        if (*patch_cmd) return cmd_patch(out, f, source, radius, center);
        if (*converge) return cmd_converge(out, f, source, radii, center);
        if (*verify) return cmd_verify(out, f, source);
        if (*table1) return cmd_table1(out, f);
        if (*render) return cmd_render(out, f, source, opt_radius, center, output);
        if (*check) return cmd_check(out, f, source);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << kSynopsis;
        return 2;
    } catch (const TilingError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << kSynopsis;
    return 2;
}

}  // namespace tilebalance
