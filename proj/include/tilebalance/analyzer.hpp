#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tilebalance/periodic_map.hpp"
#include "tilebalance/rational.hpp"
#include "tilebalance/stats.hpp"

namespace tilebalance {

/// Outcome of one exact check. Inapplicable checks report passed = true.
struct CheckResult {
    std::string check_id;
    bool applicable = true;
    bool passed = true;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct Table1Row {
    std::vector<std::string> labels;
    std::map<int, Rational> t;
    std::map<int, Rational> v;
    Rational two_e;
    std::map<int, Rational> w;
    Rational avg_valence;
};

/// EQ1 .. EQ5: v = e - 1, sums of t_h and v_j, 2e in both forms, the reciprocal identity, average valence >= 3.
std::vector<CheckResult> check_core_identities(const LimitStats& s);
/// VT1 .. VT3: the three weighted vertex/tile identities.
std::vector<CheckResult> check_vertex_tile_identities(const LimitStats& s);
/// PROP1 .. PROP3 for tilings by convex n-gons (n = s.corners).
std::vector<CheckResult> check_ngon_propositions(const LimitStats& s);
/// PROP4 and COR1; inapplicable unless n = 6.
std::vector<CheckResult> check_hexagon(const LimitStats& s);
/// PROP5 .. PROP16, THM1, THM2, EQUIV; inapplicable unless n = 5.
std::vector<CheckResult> check_pentagon(const LimitStats& s);
/// QEULER (V - E + F = 0), QVALENCE (sum j V_j = 2E) and AREA (tile areas sum to |det| within 1e-9 relative).
std::vector<CheckResult> check_structure(const PeriodicTiling& tiling);
/// Every stats check above, in a fixed order.
std::vector<CheckResult> run_all_checks(const LimitStats& s);

/// The eight rows of the pentagon reference table.
const std::vector<Table1Row>& table1_rows();
/// Labels that must be present in the catalog for a full comparison.
const std::vector<std::string>& table1_required_labels();

/// Compares (type_label, stats) pairs against the reference table, one result per pair.
/// Pairs whose label is not in any row are skipped. Throws MissingCatalogEntry when a
/// required label is absent.
std::vector<std::pair<std::string, CheckResult>> table1_compare(
    const std::vector<std::pair<std::string, LimitStats>>& entries);
/// Same, over every pentagon template in the catalog.
std::vector<std::pair<std::string, CheckResult>> table1_compare();

}  // namespace tilebalance
