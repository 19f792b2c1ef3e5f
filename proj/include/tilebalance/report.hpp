#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tilebalance/rational.hpp"

namespace tilebalance {

enum class Format { Text, Json, Csv };

/// Parses "text", "json" or "csv"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

/// Lengths always print with nine fractional digits.
std::string fixed9(double x);

/// One RFC-4180 field, quoted only when it has to be.
std::string csv_field(std::string_view s);
/// Comma-joined fields terminated by CRLF.
std::string csv_row(const std::vector<std::string>& fields);

/// Minimal ordered JSON tree whose numbers keep the exact text they were given.
class JsonValue {
public:
    struct Number {
        std::string text;
    };
    using Array = std::vector<JsonValue>;
    using Object = std::vector<std::pair<std::string, JsonValue>>;

    JsonValue() = default;
    JsonValue(bool b) : value_(b) {}                          // NOLINT
    JsonValue(const char* s) : value_(std::string(s)) {}      // NOLINT
    JsonValue(std::string s) : value_(std::move(s)) {}        // NOLINT
    JsonValue(Number n) : value_(std::move(n)) {}             // NOLINT
    JsonValue(Array a) : value_(std::move(a)) {}              // NOLINT
    JsonValue(Object o) : value_(std::move(o)) {}             // NOLINT

    static JsonValue integer(long long v) { return Number{std::to_string(v)}; }
    static JsonValue length(double v) { return Number{fixed9(v)}; }
    static JsonValue rational(const Rational& r) { return r.str(); }
    static JsonValue rational_map(const std::map<int, Rational>& m);

    /// Appends a member; the value must be an object.
    JsonValue& add(std::string key, JsonValue v);
    /// Appends an element; the value must be an array.
    JsonValue& push(JsonValue v);

    [[nodiscard]] std::string dump(int indent = 2) const;

private:
    void write(std::string& out, int indent, int depth) const;

    std::variant<std::nullptr_t, bool, std::string, Number, Array, Object> value_{nullptr};
};

}  // namespace tilebalance
