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

#include "table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace irsout::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("table row width does not match its columns");
    rows.push_back(std::move(row));
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, result.ptr);
}

namespace {

std::string csv_text(const Cell& cell) {
    if (const double* x = std::get_if<double>(&cell)) return format_double(*x);
    return std::get<std::string>(cell);
}

nlohmann::ordered_json json_value(const Cell& cell) {
    if (const double* x = std::get_if<double>(&cell)) {
        if (!std::isfinite(*x)) return nullptr;
        return *x;
    }
    return std::get<std::string>(cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (const auto& [key, value] : table.metadata) out << "# " << key << ": " << value << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_text(row[c]);
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json record = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) record[table.columns[c]] = json_value(row[c]);
        doc["rows"].push_back(std::move(record));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace irsout::cli
