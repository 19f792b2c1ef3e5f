#include "tilebalance/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "tilebalance/catalog.hpp"
#include "tilebalance/error.hpp"
#include "tilebalance/periodic_map.hpp"
#include "tilebalance/report.hpp"

namespace tilebalance {

namespace {

using Weight = std::function<Rational(int)>;

Rational weighted(const std::map<int, Rational>& m, const Weight& f, int from = 0) {
    Rational total;
    for (const auto& [k, x] : m) {
        if (k >= from) total += f(k) * x;
    }
    return total;
}

Rational total(const std::map<int, Rational>& m, int from = 0) {
    return weighted(m, [](int) { return Rational(1); }, from);
}

Rational at(const std::map<int, Rational>& m, int k) {
    auto it = m.find(k);
    return it == m.end() ? Rational() : it->second;
}

Rational avg_valence(const LimitStats& s) { return weighted(s.w, [](int j) { return Rational(j); }); }
Rational avg_adjacents(const LimitStats& s) { return weighted(s.t, [](int h) { return Rational(h); }); }

CheckResult equal(std::string id, const Rational& lhs, const Rational& rhs) {
    return {std::move(id), true, lhs == rhs, lhs.str(), rhs.str(), ""};
}

// lo <= x <= hi
CheckResult between(std::string id, const Rational& lo, const Rational& x, const Rational& hi) {
    return {std::move(id), true, lo <= x && x <= hi, x.str(), "[" + lo.str() + ", " + hi.str() + "]", ""};
}

CheckResult at_least(std::string id, const Rational& x, const Rational& lo) {
    return {std::move(id), true, x >= lo, x.str(), ">= " + lo.str(), ""};
}

CheckResult at_most(std::string id, const Rational& x, const Rational& hi) {
    return {std::move(id), true, x <= hi, x.str(), "<= " + hi.str(), ""};
}

CheckResult skipped(std::string id, std::string why) {
    return {std::move(id), false, true, "", "", std::move(why)};
}

std::string corners_note(int n) {
    return n == 0 ? "tiles have differing corner counts" : "tiles are " + std::to_string(n) + "-gons";
}

std::string join_map(const std::map<int, Rational>& m, const char* sym) {
    std::string out;
    for (const auto& [k, x] : m) {
        if (!out.empty()) out += " ";
        out += sym + std::to_string(k) + "=" + x.str();
    }
    return out;
}

}  // namespace

std::vector<CheckResult> check_core_identities(const LimitStats& s) {
    const Rational& v = s.vertices_per_tile;
    const Rational& e = s.edges_per_tile;
    const Rational j_w = avg_valence(s);
    const Rational h_t = avg_adjacents(s);
    std::vector<CheckResult> out;
    out.push_back(equal("EQ1", v, e - 1));
    out.push_back(equal("EQ2a", total(s.t), 1));
    out.push_back(equal("EQ2b", v, total(s.v)));
    out.push_back(equal("EQ3a", 2 * e, weighted(s.v, [](int j) { return Rational(j); })));
    out.push_back(equal("EQ3b", 2 * e, h_t));
    if (j_w.is_zero() || h_t.is_zero()) {
        out.push_back({"EQ4", true, false, "undefined", "1/2", "average valence or adjacency is zero"});
    } else {
        out.push_back(equal("EQ4", j_w.reciprocal() + h_t.reciprocal(), Rational(1, 2)));
    }
    out.push_back(at_least("EQ5", j_w, 3));
    return out;
}

std::vector<CheckResult> check_vertex_tile_identities(const LimitStats& s) {
    auto vj = [&](int c, int scale) { return weighted(s.v, [=](int j) { return Rational(scale * (j - c)); }); };
    auto th = [&](int c, int scale) { return weighted(s.t, [=](int h) { return Rational(scale * (h - c)); }); };
    std::vector<CheckResult> out;
    out.push_back(equal("VT1", vj(3, 2) + th(6, 1), 0));
    out.push_back(equal("VT2", vj(4, 1) + th(4, 1), 0));
    out.push_back(equal("VT3", vj(6, 1) + th(3, 2), 0));
    return out;
}

std::vector<CheckResult> check_ngon_propositions(const LimitStats& s) {
    const int n = s.corners;
    const Rational j_w = avg_valence(s);
    std::vector<CheckResult> out;
    out.push_back(at_most("PROP1", avg_adjacents(s), 6));
    if (n < 3) {
        out.push_back(skipped("PROP2", corners_note(n)));
        out.push_back(skipped("PROP3", corners_note(n)));
        return out;
    }
    const Rational bound(2 * n, n - 2);
    out.push_back(between("PROP2", 3, j_w, bound));
    if (s.edge_to_edge) {
        out.push_back(equal("PROP3", j_w, bound));
    } else {
        out.push_back(skipped("PROP3", "tiling is not edge-to-edge"));
    }
    return out;
}

std::vector<CheckResult> check_hexagon(const LimitStats& s) {
    std::vector<CheckResult> out;
    if (s.corners != 6) {
        for (const char* id : {"PROP4", "PROP4-T6", "PROP4-H7", "COR1"}) out.push_back(skipped(id, corners_note(s.corners)));
        return out;
    }
    out.push_back(equal("PROP4", avg_valence(s), 3));
    out.push_back(equal("PROP4-T6", at(s.t, 6), 1));
    out.push_back(equal("PROP4-H7", total(s.t, 7), 0));
    const bool only3 = std::all_of(s.v.begin(), s.v.end(), [](const auto& kv) { return kv.first == 3; });
    const bool ok = s.edge_to_edge && only3;
    out.push_back({"COR1", true, ok, std::string("edge_to_edge=") + (s.edge_to_edge ? "true" : "false") + " " + join_map(s.v, "v"),
                   "edge_to_edge=true v3 only", ""});
    return out;
}

std::vector<CheckResult> check_pentagon(const LimitStats& s) {
    std::vector<CheckResult> out;
    static const char* const ids[] = {"PROP5", "PROP6", "PROP7", "PROP8", "PROP9", "THM1", "THM2", "PROP10",
                                      "PROP11", "PROP12", "PROP13", "PROP14", "PROP15", "PROP16", "EQUIV"};
    if (s.corners != 5) {
        for (const char* id : ids) out.push_back(skipped(id, corners_note(s.corners)));
        return out;
    }
    const Rational& v = s.vertices_per_tile;
    const Rational& e = s.edges_per_tile;
    const Rational j_w = avg_valence(s);
    const Rational t5 = at(s.t, 5);
    const Rational t6 = at(s.t, 6);
    const Rational v3 = at(s.v, 3);
    const Rational half(1, 2);

    out.push_back(between("PROP5", 5, avg_adjacents(s), 6));
    out.push_back(between("PROP6", Rational(5, 2), e, 3));
    out.push_back(between("PROP7", Rational(3, 2), v, 2));
    out.push_back(between("PROP8", 3, j_w, Rational(10, 3)));

    const Rational excess = weighted(s.t, [](int h) { return Rational(h - 6); }, 7);
    out.push_back({"PROP9", true, Rational() <= excess && excess <= t5 && t5 <= 1,
                   "sum(h-6)t_h=" + excess.str() + " t5=" + t5.str(), "0 <= sum(h-6)t_h <= t5 <= 1", ""});

    out.push_back({"THM1", true, t5 + t6 > 0, (t5 + t6).str(), "> 0", "t5 + t6"});
    const Rational heavy = total(s.t, 7);
    out.push_back({"THM2", true, heavy.is_zero() || t5 > 0, "sum t_h(h>=7)=" + heavy.str() + " t5=" + t5.str(),
                   "sum t_h(h>=7) > 0 implies t5 > 0", ""});

    if (s.edge_to_edge) {
        const bool ok = t5 == 1 && v == Rational(3, 2) && e == Rational(5, 2) && j_w == Rational(10, 3);
        out.push_back({"PROP10", true, ok, "t5=" + t5.str() + " v=" + v.str() + " e=" + e.str() + " sum jw_j=" + j_w.str(),
                       "t5=1 v=3/2 e=5/2 sum jw_j=10/3", ""});
    } else {
        out.push_back(skipped("PROP10", "tiling is not edge-to-edge"));
    }

    out.push_back(equal("PROP11", v3, 2 + weighted(s.v, [](int j) { return Rational(2 - j); }, 4)));
    if (s.edge_to_edge) {
        out.push_back(equal("PROP12", v3, weighted(s.v, [](int j) { return Rational(3 * j - 10); }, 4)));
    } else {
        out.push_back(skipped("PROP12", "tiling is not edge-to-edge"));
    }
    out.push_back(equal("PROP13", v, half * weighted(s.t, [](int h) { return Rational(h - 2); }, 5)));
    out.push_back(equal("PROP14", v, half + half * weighted(s.t, [](int h) { return Rational(h - 3); })));
    out.push_back(equal("PROP15", v, 2 + half * weighted(s.t, [](int h) { return Rational(h - 6); })));
    out.push_back(equal("PROP16", v, 2 - weighted(s.v, [](int j) { return Rational(j - 3); }, 4)));

    const bool three_halves = v == Rational(3, 2);
    out.push_back({"EQUIV", true, three_halves == s.edge_to_edge,
                   std::string("v=") + v.str() + " edge_to_edge=" + (s.edge_to_edge ? "true" : "false"),
                   "v = 3/2 iff edge_to_edge", ""});
    return out;
}

std::vector<CheckResult> check_structure(const PeriodicTiling& tiling) {
    const QuotientCensus c = quotient_counts(tiling);
    std::vector<CheckResult> out;
    out.push_back(equal("QEULER", Rational(c.vertices - c.edges + c.tiles), 0));
    std::int64_t valence_sum = 0;
    for (const auto& [j, n] : c.vertices_by_valence) valence_sum += j * n;
    out.push_back(equal("QVALENCE", Rational(valence_sum), Rational(2 * c.edges)));
    double area = 0.0;
    for (std::size_t i = 0; i < tiling.tile_count(); ++i) area += signed_area(tiling.polygon(i));
    const double det = std::abs(tiling.lattice().det());
    out.push_back({"AREA", true, std::abs(area - det) <= kAreaRelativeTolerance * det, fixed9(area), fixed9(det),
                   "relative tolerance 1e-9"});
    return out;
}

std::vector<CheckResult> run_all_checks(const LimitStats& s) {
    std::vector<CheckResult> out;
    for (auto* fn : {check_core_identities, check_vertex_tile_identities, check_ngon_propositions, check_hexagon,
                     check_pentagon}) {
        auto part = fn(s);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows = [] {
        auto r = [](const char* text) { return Rational::parse(text); };
        std::vector<Table1Row> out = {
            {{"1e", "2e", "4", "6", "7", "8", "9"}, {{5, r("1")}}, {{3, r("1")}, {4, r("1/2")}}, r("5"), {}, {}},
            {{"5"}, {{5, r("1")}}, {{3, r("4/3")}, {6, r("1/6")}}, r("5"), {}, {}},
            {{"1", "2", "3", "12"}, {{6, r("1")}}, {{3, r("2")}}, r("6"), {}, {}},
            {{"10"}, {{5, r("2/3")}, {7, r("1/3")}}, {{3, r("5/3")}, {4, r("1/6")}}, r("17/3"), {}, {}},
            {{"11"}, {{5, r("1/2")}, {7, r("1/2")}}, {{3, r("2")}}, r("6"), {}, {}},
            {{"13"}, {{5, r("1/2")}, {6, r("1/2")}}, {{3, r("3/2")}, {4, r("1/4")}}, r("11/2"), {}, {}},
            {{"14"}, {{5, r("1/3")}, {6, r("1/3")}, {7, r("1/3")}}, {{3, r("2")}}, r("6"), {}, {}},
            {{"15"}, {{5, r("2/3")}, {6, r("1/3")}}, {{3, r("4/3")}, {4, r("1/3")}}, r("16/3"), {}, {}},
        };
        // w_j and the average valence follow from v_j.
        for (Table1Row& row : out) {
            const Rational v = total(row.v);
            for (const auto& [j, x] : row.v) row.w[j] = x / v;
            row.avg_valence = weighted(row.w, [](int j) { return Rational(j); });
        }
        return out;
    }();
    return rows;
}

const std::vector<std::string>& table1_required_labels() {
    static const std::vector<std::string> labels = {"1", "1e", "2", "2e", "3", "4", "5",
                                                    "10", "11", "12", "13", "14", "15"};
    return labels;
}

std::vector<std::pair<std::string, CheckResult>> table1_compare(
    const std::vector<std::pair<std::string, LimitStats>>& entries) {
    std::set<std::string> present;
    for (const auto& [label, stats] : entries) present.insert(label);
    std::vector<std::string> missing;
    for (const std::string& label : table1_required_labels()) {
        if (!present.count(label)) missing.push_back(label);
    }
    if (!missing.empty()) {
        std::string list;
        for (const std::string& m : missing) list += (list.empty() ? "" : ", ") + m;
        throw TilingError(ErrorCode::MissingCatalogEntry, "no catalog template for type label(s) " + list);
    }

    std::vector<std::pair<std::string, CheckResult>> out;
    for (const auto& [label, s] : entries) {
        const Table1Row* row = nullptr;
        for (const Table1Row& candidate : table1_rows()) {
            if (std::find(candidate.labels.begin(), candidate.labels.end(), label) != candidate.labels.end()) {
                row = &candidate;
            }
        }
        if (row == nullptr) continue;
        std::vector<std::string> bad;
        if (s.t != row->t) bad.emplace_back("t_h");
        if (s.v != row->v) bad.emplace_back("v_j");
        if (2 * s.edges_per_tile != row->two_e) bad.emplace_back("2e");
        if (s.w != row->w) bad.emplace_back("w_j");
        if (avg_valence(s) != row->avg_valence) bad.emplace_back("avg_valence");
        CheckResult c;
        c.check_id = "TABLE1";
        c.passed = bad.empty();
        c.lhs = join_map(s.t, "t") + " " + join_map(s.v, "v") + " 2e=" + (2 * s.edges_per_tile).str() + " " +
                join_map(s.w, "w") + " sum jw_j=" + avg_valence(s).str();
        c.rhs = join_map(row->t, "t") + " " + join_map(row->v, "v") + " 2e=" + row->two_e.str() + " " +
                join_map(row->w, "w") + " sum jw_j=" + row->avg_valence.str();
        if (!bad.empty()) {
            c.note = "mismatched:";
            for (const std::string& f : bad) c.note += " " + f;
        }
        out.emplace_back(label, std::move(c));
    }
    return out;
}

std::vector<std::pair<std::string, CheckResult>> table1_compare() {
    std::vector<std::pair<std::string, LimitStats>> entries;
    for (const std::string& name : catalog_names()) {
        const TilingTemplate tmpl = load_template(name);
        const PeriodicTiling tiling = build_periodic_tiling(tmpl);
        if (tiling.corner_count(0) != 5) continue;
        entries.emplace_back(tiling.type_label(), limit_stats(tiling));
    }
    return table1_compare(entries);
}

}  // namespace tilebalance
