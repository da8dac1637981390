#include "commands.hpp"
#include "table.hpp"

#include "efimov/errors.hpp"
#include "efimov/spectrum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

namespace cli = efimov::cli;

namespace {

std::string csv(const cli::Table& t) {
  std::ostringstream os;
  cli::write_csv(os, t);
  return os.str();
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST(Table, FormatsNumbersAt17Digits) {
  EXPECT_EQ(cli::format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(cli::format_number(NAN), "nan");
  EXPECT_EQ(cli::format_number(-HUGE_VAL), "-inf");
  EXPECT_EQ(std::stod(cli::format_number(M_PI)), M_PI);
}

TEST(Table, RowWidthIsChecked) {
  cli::Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add_row({1.0}), std::logic_error);
}

TEST(Table, CsvCellsRoundTripThroughJson) {
  cli::RunConfig c;
  c.t_theta = 0.7;
  c.points = 37;
  c.r_min = 0.013;
  c.r_max = 31.0;
  const auto t = cli::cmd_potential(c);
  const auto back = cli::from_json(nlohmann::ordered_json::parse(cli::to_json(t).dump()));
  EXPECT_EQ(csv(t), csv(back));
  ASSERT_EQ(back.rows.size(), t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      const double a = std::get<double>(t.rows[i][j]);
      const double b = std::get<double>(back.rows[i][j]);
      if (std::isnan(a)) {
        EXPECT_TRUE(std::isnan(b));
      } else {
        EXPECT_EQ(a, b);
      }
    }
  }
}

TEST(Table, HeaderCarriesConfiguration) {
  cli::RunConfig c;
  c.points = 3;
  const auto text = csv(cli::cmd_potential(c));
  EXPECT_NE(text.find("# units: hbar=1, dimensionless"), std::string::npos);
  EXPECT_NE(text.find("# t_theta = 1"), std::string::npos);
  EXPECT_NE(text.find("# points = 3"), std::string::npos);
  EXPECT_NE(text.find("# efimov "), std::string::npos);
}

TEST(Commands, Deterministic) {
  cli::RunConfig c;
  c.levels = 3;
  EXPECT_EQ(csv(cli::cmd_spectrum(c)), csv(cli::cmd_spectrum(c)));
  EXPECT_EQ(csv(cli::cmd_bargmann(c)), csv(cli::cmd_bargmann(c)));
}

TEST(Commands, PotentialCrossingsAtTruncationRadii) {
  cli::RunConfig c;
  c.r_max = 20.0;
  const auto t = cli::cmd_potential(c);
  int crossings = 0;
  double prev = 0.0;
  for (const auto& row : t.rows) {
    const double d = std::get<double>(row[1]) - std::get<double>(row[2]);
    if (prev != 0.0 && (d > 0) != (prev > 0)) ++crossings;
    prev = d;
  }
  // r_0 .. r_3 lie below 20.
  EXPECT_EQ(crossings, 4);
  EXPECT_EQ(t.notes.size(), 5u);
}

TEST(Commands, PotentialUsageErrors) {
  cli::RunConfig c;
  c.points = 0;
  EXPECT_THROW(cli::cmd_potential(c), cli::UsageError);
  c.points = 10;
  c.t_theta = 1.5;
  EXPECT_THROW(cli::cmd_potential(c), cli::UsageError);
  c.t_theta = 0.5;
  c.r_min = 5.0;
  c.r_max = 1.0;
  EXPECT_THROW(cli::cmd_potential(c), cli::UsageError);
}

TEST(Commands, SpectrumRatiosApproachTheLaw) {
  cli::RunConfig c;
  c.mass_ratio = 20.0;
  c.levels = 5;
  const auto t = cli::cmd_spectrum(c);
  ASSERT_EQ(t.rows.size(), 5u);
  const double law = std::exp(2 * M_PI / efimov::spectrum::efimov_exponent(
                                              efimov::spectrum::MassConfig::from_ratio(20.0), 0)
                                              .beta);
  EXPECT_NEAR(std::get<double>(t.rows[3][2]) / law, 1.0, 1e-5);
  EXPECT_NEAR(std::get<double>(t.rows[3][6]) / law, 1.0, 1e-5);
}

TEST(Commands, SpectrumBelowCritical) {
  cli::RunConfig c;
  c.mass_ratio = 13.0;
  c.l = 1;
  try {
    cli::cmd_spectrum(c);
    FAIL();
  } catch (const efimov::BelowCriticalMass& e) {
    EXPECT_NE(std::string(e.what()).find("13.4902"), std::string::npos);
  }
  c.allow_empty = true;
  EXPECT_TRUE(cli::cmd_spectrum(c).rows.empty());
}

TEST(Commands, ZeroLevelsGivesHeaderOnly) {
  cli::RunConfig c;
  c.levels = 0;
  const auto t = cli::cmd_spectrum(c);
  EXPECT_TRUE(t.rows.empty());
  EXPECT_EQ(data_lines(csv(t)).size(), 1u);
}

TEST(Commands, SizeAndBargmann) {
  cli::RunConfig c;
  const auto s = cli::cmd_size(c);
  ASSERT_EQ(s.rows.size(), 3u);
  for (const auto& row : s.rows) EXPECT_NEAR(std::get<double>(row[3]), 2.80, 0.01);
  c.t_theta = 0.9;
  const auto b = cli::cmd_bargmann(c);
  EXPECT_NEAR(std::get<double>(b.rows[1][4]), 0.5308, 1e-4);
  c.t_theta = 1.0;
  EXPECT_THROW(cli::cmd_bargmann(c), cli::UsageError);
}

TEST(Commands, ScatteringAndCriticalMass) {
  cli::RunConfig c;
  c.t_theta = 0.5;
  c.sector = efimov::two_center::Sector::Fermionic;
  c.points = 4;
  const auto s = cli::cmd_scattering(c);
  EXPECT_EQ(s.rows.size(), 4u);
  c.l = 2;
  const auto m = cli::cmd_critical_mass(c);
  ASSERT_EQ(m.rows.size(), 3u);
  EXPECT_NEAR(std::get<double>(m.rows[1][1]), 13.4902, 1e-3);
}

TEST(Commands, ReportSubset) {
  cli::RunConfig c;
  c.only = {"bargmann"};
  const auto r = cli::cmd_report(c);
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_EQ(r.results[0].key, std::string("bargmann"));
  EXPECT_TRUE(r.all_passed);
  const auto j = cli::to_json(r.table);
  EXPECT_EQ(j["rows"][0][2], "pass");
  c.only = {"nope"};
  EXPECT_THROW(cli::cmd_report(c), cli::UsageError);
}
