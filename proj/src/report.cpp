#include "tilebalance/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "tilebalance/error.hpp"

namespace tilebalance {

Format parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw TilingError(ErrorCode::InvalidArgument, "unknown format \"" + std::string(name) + "\" (text, json, csv)");
}

std::string fixed9(double x) {
    if (!std::isfinite(x)) return x != x ? "nan" : (x > 0 ? "inf" : "-inf");
    if (std::abs(x) < 5e-10) x = 0.0;  // no "-0.000000000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    return buf;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

JsonValue JsonValue::rational_map(const std::map<int, Rational>& m) {
    Object o;
    for (const auto& [k, r] : m) o.emplace_back(std::to_string(k), r.str());
    return o;
}

JsonValue& JsonValue::add(std::string key, JsonValue v) {
    std::get<Object>(value_).emplace_back(std::move(key), std::move(v));
    return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
    std::get<Array>(value_).push_back(std::move(v));
    return *this;
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

void JsonValue::write(std::string& out, int indent, int depth) const {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&value_)) {
        out += *b ? "true" : "false";
    } else if (const std::string* s = std::get_if<std::string>(&value_)) {
        out += quote(*s);
    } else if (const Number* n = std::get_if<Number>(&value_)) {
        out += n->text;
    } else if (const Array* a = std::get_if<Array>(&value_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (std::size_t i = 0; i < a->size(); ++i) {
            if (i) out += ',';
            newline(depth + 1);
            (*a)[i].write(out, indent, depth + 1);
        }
        newline(depth);
        out += ']';
    } else {
        const Object& o = std::get<Object>(value_);
        if (o.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        for (std::size_t i = 0; i < o.size(); ++i) {
            if (i) out += ',';
            newline(depth + 1);
            out += quote(o[i].first);
            out += indent < 0 ? ":" : ": ";
            o[i].second.write(out, indent, depth + 1);
        }
        newline(depth);
        out += '}';
    }
}

}  // namespace tilebalance
