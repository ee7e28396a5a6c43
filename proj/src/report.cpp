// Copyright 2026 The isinglab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isinglab/report.hpp"

#include <cmath>
#include <cstdio>

namespace isinglab {

std::string format_real(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) v = 0.0;  // collapse -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_json(const nlohmann::json& value, std::string& out) {
    using nlohmann::json;
    switch (value.type()) {
        case json::value_t::null:
            out += "null";
            break;
        case json::value_t::boolean:
            out += value.get<bool>() ? "true" : "false";
            break;
        case json::value_t::number_integer:
            out += std::to_string(value.get<long long>());
            break;
        case json::value_t::number_unsigned:
            out += std::to_string(value.get<unsigned long long>());
            break;
        case json::value_t::number_float:
            out += format_real(value.get<double>());
            break;
        case json::value_t::string:
            // Reuse the library's escaping by dumping the lone string.
            out += json(value.get<std::string>()).dump();
            break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : value) {
                if (!first) out += ',';
                first = false;
                append_json(item, out);
            }
            out += ']';
            break;
        }
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                append_json(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            out += "null";
            break;
    }
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void append_row(const std::vector<std::string>& row, std::string& out) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(row[i]);
    }
    out += '\n';
}

}  // namespace

std::string canonical_json(const nlohmann::json& value) {
    std::string out;
    append_json(value, out);
    return out;
}

std::string render_csv(const CsvTable& table) {
    std::string out;
    append_row(table.header, out);
    for (const auto& row : table.rows) append_row(row, out);
    return out;
}

}  // namespace isinglab
