#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

namespace hvac::env {

// The six sensor readings an agent sees, in canonical vector order:
// [zone temp °C, zone humidity %, occupancy {0,1}, outdoor temp °C, solar W/m², hour 0..23]
struct ZoneObservation {
  static constexpr std::size_t kSize = 6;

  double zone_mean_temp = 0.0;
  double zone_mean_humidity = 0.0;
  int zone_occupancy = 0;
  double outdoor_temp = 0.0;
  double solar_radiation = 0.0;
  int hour_of_day = 0;

  std::array<double, kSize> to_array() const;
  // Rounds the occupancy and hour slots; throws ContractViolation if they are out of range.
  static ZoneObservation from_array(std::span<const double> values);

  bool operator==(const ZoneObservation&) const = default;
};

// Mean/std of the four continuous components (temp, humidity, outdoor, solar).
// Occupancy and hour use fixed affine maps onto [-1, 1].
struct NormStats {
  std::array<double, 4> mean{21.0, 40.0, 10.0, 200.0};
  std::array<double, 4> std{3.0, 15.0, 10.0, 280.0};

  static NormStats defaults() { return {}; }
  static NormStats fit(std::span<const ZoneObservation> observations);
  // Throws ContractViolation on non-finite entries or std <= 0.
  void validate() const;

  bool operator==(const NormStats&) const = default;
};

nlohmann::json to_json(const NormStats& stats);
NormStats norm_stats_from_json(const nlohmann::json& j);

std::array<double, ZoneObservation::kSize> normalize_observation(const ZoneObservation& obs,
                                                                 const NormStats& stats);
// Exact affine inverse of normalize_observation (occupancy and hour come back as reals).
std::array<double, ZoneObservation::kSize> denormalize_observation(std::span<const double> values,
                                                                   const NormStats& stats);

}  // namespace hvac::env
