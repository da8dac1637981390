#pragma once

#include "table.hpp"

#include "efimov/two_center.hpp"

#include "../acceptance/acceptance.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace efimov::cli {

// Bad flag values; main() maps it to exit code 2.
class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::optional<double> t_theta;
  std::optional<double> alpha;
  double mass_ratio = 20.0;
  int l = 0;
  two_center::Sector sector = two_center::Sector::Bosonic;
  int levels = 5;
  std::optional<double> r_min;
  std::optional<double> r_max;
  int points = 400;
  std::optional<Format> format;
  std::string out;
  std::vector<std::string> only;
  bool allow_empty = false;
};

// -lambda_theta, -lambda_local and the two off-unitarity profiles on a linear r grid.
Table cmd_potential(const RunConfig& c);
// Numeric levels of the full potential next to the matching and analytic
// ladders of the universal auxiliary core.
Table cmd_spectrum(const RunConfig& c);
Table cmd_scattering(const RunConfig& c);
Table cmd_size(const RunConfig& c);
Table cmd_bargmann(const RunConfig& c);
Table cmd_critical_mass(const RunConfig& c);

struct Report {
  Table table;
  std::vector<acceptance::CriterionResult> results;
  bool all_passed = false;
};

Report cmd_report(const RunConfig& c);

}  // namespace efimov::cli
