#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tilebalance/tiling_template.hpp"

namespace tilebalance {

struct CatalogEntry {
    std::string name;
    std::string type_label;
    bool edge_to_edge = false;
    std::size_t tiles_per_domain = 0;
};

/// Directory named by TILEBALANCE_CATALOG, or nullopt when the built-in catalog is in use.
std::optional<std::filesystem::path> catalog_override();

/// Names of all catalog templates, sorted.
std::vector<std::string> catalog_names();

/// Every catalog template, built and summarized, sorted by name.
std::vector<CatalogEntry> list_catalog();

/// Loads a catalog entry by name, or a template file when `source` names an existing path.
///
/// Throws NotFound, ParseError (with line and column) or SchemaError.
TilingTemplate load_template(std::string_view source);

/// Parses template JSON; `origin` prefixes error messages.
TilingTemplate parse_template(std::string_view text, std::string_view origin = "<input>");

/// JSON text that parse_template reads back to an identical template.
std::string serialize_template(const TilingTemplate& tmpl);

}  // namespace tilebalance
