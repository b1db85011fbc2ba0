/*
   Copyright 2026 The irsout Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace irsout::cli {

using Cell = std::variant<double, std::string>;

/// Column-ordered result table with a key/value metadata block.
struct Table {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Shortest text that reads back to the same double; "nan", "inf", "-inf".
std::string format_double(double x);

/// `# key: value` lines, a header row, then one line per row.
void write_csv(const Table& table, std::ostream& out);

/// {"metadata": {...}, "columns": [...], "rows": [{column: value}, ...]}.
/// Non-finite numbers become null.
void write_json(const Table& table, std::ostream& out);

}  // namespace irsout::cli
