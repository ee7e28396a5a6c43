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

#ifndef ISINGLAB_REPORT_HPP
#define ISINGLAB_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace isinglab {

/** 17-significant-digit decimal rendering (round-trip exact for doubles),
 *  with negative zero normalized to "0". */
std::string format_real(double v);

/** Canonical compact JSON: object keys in lexicographic order, floats
 *  rendered by format_real, no whitespace. Byte-identical output for
 *  equal values, so reports can be diffed across runs. Non-finite floats
 *  render as null. */
std::string canonical_json(const nlohmann::json& value);

/** A rectangular table destined for CSV output. Cells are preformatted
 *  strings; numeric cells should go through format_real. */
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/** RFC-style CSV: comma-separated rows, LF line ends, fields quoted when
 *  they contain commas, quotes or line breaks. */
std::string render_csv(const CsvTable& table);

}  // namespace isinglab

#endif  // ISINGLAB_REPORT_HPP
