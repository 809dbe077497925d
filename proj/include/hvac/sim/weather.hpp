#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace hvac::sim {

inline constexpr std::size_t kStepsPerHour = 4;
inline constexpr std::size_t kStepsPerDay = 96;

struct WeatherStep {
  double outdoor_temp = 0.0;  // °C
  double solar = 0.0;         // W/m² global horizontal
};

struct WeatherSeries {
  std::vector<double> outdoor_temp;
  std::vector<double> solar_radiation;

  std::size_t size() const { return outdoor_temp.size(); }
  WeatherStep at(std::size_t t) const { return {outdoor_temp[t], solar_radiation[t]}; }
  bool operator==(const WeatherSeries&) const = default;
};

// Synthetic Denver-like weather at 15-minute resolution starting at local
// midnight on day one of `start_month`: monthly normal, diurnal sinusoid,
// bounded day-to-day and intra-day noise, clear-sky solar scaled by a daily
// cloud factor. Months roll over every 31 days.
WeatherSeries generate_weather(std::uint64_t seed, int start_month, std::size_t n_steps);

// Reads `step,outdoor_c,solar_w`. Rows must be consecutive from step 0.
// Throws ParseError naming the column or row on any schema or value problem.
WeatherSeries load_weather_csv(const std::filesystem::path& path, std::size_t min_steps = 1);
void save_weather_csv(const WeatherSeries& series, const std::filesystem::path& path);

// Hour of day (0..23) of step t when the series starts at midnight.
inline int hour_of_step(std::size_t t) {
  return static_cast<int>((t / kStepsPerHour) % 24);
}

}  // namespace hvac::sim
