#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace efimov::cli {

const char* const kVersion = "1.0.0";
const char* const kUnits = "hbar=1, dimensionless";

void Table::add_parameter(std::string key, std::string value) {
  parameters.emplace_back(std::move(key), std::move(value));
}

void Table::add_parameter(std::string key, double value) {
  parameters.emplace_back(std::move(key), format_number(value));
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("row width does not match the column count");
  }
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    // JSON has no NaN or infinity; keep them as the same strings as the CSV.
    if (!std::isfinite(*d)) return format_number(*d);
    return *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

Cell json_cell(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return HUGE_VAL;
  if (s == "-inf") return -HUGE_VAL;
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  os << "# efimov " << kVersion << "\n";
  os << "# command: " << t.command << "\n";
  os << "# units: " << kUnits << "\n";
  for (const auto& [k, v] : t.parameters) os << "# " << k << " = " << v << "\n";
  for (const auto& n : t.notes) os << "# note: " << n << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << csv_quote(t.columns[i]);
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_quote(cell_text(row[i]));
    os << "\n";
  }
}

nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["command"] = t.command;
  j["units"] = kUnits;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.parameters) params[k] = v;
  j["notes"] = t.notes;
  j["columns"] = t.columns;
  auto& rows = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  return j;
}

void write_json(std::ostream& os, const Table& t) { os << to_json(t).dump(2) << "\n"; }

void write(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Json) {
    write_json(os, t);
  } else {
    write_csv(os, t);
  }
}

Table from_json(const nlohmann::ordered_json& j) {
  Table t;
  t.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) t.add_parameter(k, v.get<std::string>());
  t.notes = j.at("notes").get<std::vector<std::string>>();
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& row : j.at("rows")) {
    std::vector<Cell> cells;
    for (const auto& c : row) cells.push_back(json_cell(c));
    t.add_row(std::move(cells));
  }
  return t;
}

}  // namespace efimov::cli
