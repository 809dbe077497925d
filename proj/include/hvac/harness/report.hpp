#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace hvac::harness {

inline const std::array<const char*, 12> kMonthColumns{"jan", "feb", "mar", "apr", "may", "jun",
                                                       "jul", "aug", "sep", "oct", "nov", "dec"};

// Mean monthly HVAC energy of one controller. Values are Wh; MWh only at
// presentation.
struct MonthlyEnergyReport {
  std::string controller;
  std::array<double, 12> month_wh{};
  std::vector<double> zone_wh;  // yearly per zone

  double yearly_wh() const;  // exact sum of month_wh
};

// Half-to-even rounding at `decimals` places.
double round_half_even(double value, int decimals);
std::string format_mwh(double wh);

// 100 * (yearly_a - yearly_ref) / yearly_ref. Throws ContractViolation when the
// reference total is zero.
double yearly_delta(const MonthlyEnergyReport& a, const MonthlyEnergyReport& ref);

// Header `controller,jan,...,dec,yearly_mwh`, MWh with 2 decimals.
std::string monthly_csv(const std::vector<MonthlyEnergyReport>& reports);
// Header `controller,delta_vs_hvac_dpt_pct`; the reference row is excluded.
std::string delta_csv(const std::vector<MonthlyEnergyReport>& reports, const std::string& reference = "hvac-dpt");

// Reads a monthly CSV (values in MWh) back into reports.
std::vector<MonthlyEnergyReport> read_monthly_csv(const std::filesystem::path& path);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace hvac::harness
