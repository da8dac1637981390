#include "commands.hpp"

#include "efimov/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

using namespace efimov::cli;

namespace {

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::Csv}, {"json", Format::Json}}));
  sub->add_option("--out", c.out, "Write to this file instead of stdout");
}

void add_grid(CLI::App* sub, RunConfig& c) {
  sub->add_option("--rmin", c.r_min, "Smallest separation r");
  sub->add_option("--rmax", c.r_max, "Largest separation r");
  sub->add_option("--points", c.points, "Number of grid points")->capture_default_str();
}

int emit(const Table& t, const RunConfig& c) {
  const Format f = c.format.value_or(Format::Csv);
  if (c.out.empty()) {
    write(std::cout, t, f);
    return 0;
  }
  std::ofstream os(c.out);
  if (!os) {
    std::cerr << "error: cannot open " << c.out << " for writing\n";
    return 1;
  }
  write(os, t, f);
  return os ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Born-Oppenheimer Efimov spectra for two heavy bosons and a light particle"};
  app.require_subcommand(1);
  RunConfig c;

  auto* potential = app.add_subcommand("potential", "Effective potentials on an r grid");
  potential->add_option("--t-theta", c.t_theta, "Interaction parameter, <= 1");
  potential->add_option("--alpha", c.alpha, "Local-model coupling (default: from t_theta)");
  add_grid(potential, c);
  add_common(potential, c);

  auto* spectrum = app.add_subcommand("spectrum", "Numeric, matching and analytic levels");
  spectrum->add_option("--mass-ratio", c.mass_ratio, "Heavy/light mass ratio M/m")
      ->capture_default_str();
  spectrum->add_option("--l", c.l, "Angular momentum")->capture_default_str();
  spectrum->add_option("--levels", c.levels, "Number of levels")->capture_default_str();
  spectrum->add_flag("--allow-empty", c.allow_empty,
                     "Return an empty table below the critical mass instead of failing");
  add_common(spectrum, c);

  auto* scattering = app.add_subcommand("scattering", "Two-center scattering length");
  scattering->add_option("--t-theta", c.t_theta, "Interaction parameter, <= 1");
  scattering->add_option("--sector", c.sector, "bosonic or fermionic")
      ->transform(CLI::CheckedTransformer(std::map<std::string, efimov::two_center::Sector>{
          {"bosonic", efimov::two_center::Sector::Bosonic},
          {"fermionic", efimov::two_center::Sector::Fermionic}}));
  add_grid(scattering, c);
  add_common(scattering, c);

  auto* size = app.add_subcommand("size", "Spatial size S of the off-unitarity potential");
  size->add_option("--t-theta", c.t_theta, "Interaction parameter, < 1 (default: 0.5, 0.9, 0.99)");
  add_common(size, c);

  auto* bargmann = app.add_subcommand("bargmann", "Bargmann integral split at a0 and S");
  bargmann->add_option("--t-theta", c.t_theta, "Interaction parameter, < 1 (default 0.9)");
  bargmann->add_option("--l", c.l, "Angular momentum")->capture_default_str();
  add_common(bargmann, c);

  auto* critical = app.add_subcommand("critical-mass", "Critical mass ratios for l = 0..L");
  critical->add_option("--l", c.l, "Largest angular momentum")->capture_default_str();
  add_common(critical, c);

  auto* report = app.add_subcommand("report", "Run the acceptance criteria");
  report->add_option("--only", c.only, "Criterion keys or ids")->delimiter(',');
  add_common(report, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) {
      const Report r = cmd_report(c);
      if (c.format) {
        const int rc = emit(r.table, c);
        if (rc != 0) return rc;
      } else {
        for (const auto& res : r.results) std::cout << efimov::acceptance::format_line(res) << "\n";
        std::cout << (r.all_passed ? "all criteria passed" : "some criteria FAILED") << "\n";
      }
      return r.all_passed ? 0 : 1;
    }
    Table t;
    if (potential->parsed()) t = cmd_potential(c);
    else if (spectrum->parsed()) t = cmd_spectrum(c);
    else if (scattering->parsed()) t = cmd_scattering(c);
    else if (size->parsed()) t = cmd_size(c);
    else if (bargmann->parsed()) t = cmd_bargmann(c);
    else t = cmd_critical_mass(c);
    return emit(t, c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const efimov::BelowCriticalMass& e) {
    std::cerr << "error: " << e.what() << " (use --allow-empty for an empty table)\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
