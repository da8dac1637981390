#pragma once

// Output tables shared by every subcommand. A table carries its full run
// configuration as metadata so a CSV or JSON file can be traced back to the
// command line that produced it.

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace efimov::cli {

using Cell = std::variant<double, long long, std::string>;

enum class Format { Csv, Json };

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;  // in insertion order
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void add_parameter(std::string key, std::string value);
  void add_parameter(std::string key, double value);
  void add_row(std::vector<Cell> row);
};

extern const char* const kVersion;
extern const char* const kUnits;

// %.17g; NaN and infinities are written as "nan", "inf", "-inf".
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& t);
nlohmann::ordered_json to_json(const Table& t);
void write_json(std::ostream& os, const Table& t);
void write(std::ostream& os, const Table& t, Format f);

// Reads back what write_json produced (used by the round-trip tests).
Table from_json(const nlohmann::ordered_json& j);

}  // namespace efimov::cli
