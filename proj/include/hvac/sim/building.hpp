#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace hvac::sim {

inline constexpr int kBuildingSpecVersion = 1;

struct ComfortBand {
  double lower = 20.0;  // °C
  double upper = 24.0;  // °C

  bool operator==(const ComfortBand&) const = default;
};

struct InterZoneLink {
  std::size_t zone = 0;
  double resistance = 0.0;  // K/W

  bool operator==(const InterZoneLink&) const = default;
};

// Lumped first-order thermal model of one zone.
struct ZoneThermalParams {
  std::string name;
  double floor_area = 0.0;                  // m²
  double capacitance = 0.0;                 // J/K
  double envelope_resistance = 0.0;         // K/W, zone air to outdoor
  std::vector<InterZoneLink> neighbors;     // symmetric across each pair
  double solar_aperture = 0.0;              // m², effective gain area
  double occupants = 0.0;                   // people present when occupied
  double internal_gain_per_occupant = 0.0;  // W, people + lights + plugs
  double moisture_gain_per_occupant = 0.0;  // kg/s
  double air_mass = 0.0;                    // kg, for the moisture balance
  double max_airflow = 0.0;                 // kg/s VAV box size; 0 uses the loop default

  bool operator==(const ZoneThermalParams&) const = default;
};

// One AHU serving a disjoint set of zones, each through its own VAV box.
struct AirLoopSpec {
  std::string name;
  std::vector<std::size_t> zones;
  double supply_temp_heating = 35.0;     // °C, reheat coil discharge
  double supply_temp_cooling = 13.0;     // °C, AHU cold deck
  double max_zone_airflow = 0.5;         // kg/s per zone
  double fan_power_coefficient = 1200.0; // W per kg/s
  double reheat_cop = 0.9;
  double cooling_cop = 3.0;
  ComfortBand comfort_band;

  bool operator==(const AirLoopSpec&) const = default;
};

struct PhysicsConstants {
  double air_cp = 1005.0;               // J/(kg K)
  double supply_humidity = 45.0;        // % RH of conditioned supply air
  double infiltration_per_hour = 0.3;   // air changes per hour (moisture only)
  double outdoor_humidity = 40.0;       // % RH of infiltration air

  bool operator==(const PhysicsConstants&) const = default;
};

struct BuildingSpec {
  std::string name;
  double floor_area = 0.0;  // m²
  double timestep = 900.0;  // s
  std::vector<ZoneThermalParams> zones;
  std::vector<AirLoopSpec> air_loops;
  PhysicsConstants physics;

  std::size_t zone_count() const { return zones.size(); }
  // Index into air_loops of the loop serving `zone`.
  std::size_t loop_index(std::size_t zone) const;
  const AirLoopSpec& loop_of(std::size_t zone) const { return air_loops[loop_index(zone)]; }
  // VAV box capacity of `zone` in kg/s.
  double max_airflow(std::size_t zone) const;

  bool operator==(const BuildingSpec&) const = default;
};

// Throws ConfigError describing the first violated invariant. Includes the
// explicit-Euler stability requirement R_total * C > 2 * timestep per zone.
void validate(const BuildingSpec& spec);

nlohmann::json to_json(const BuildingSpec& spec);
BuildingSpec building_from_json(const nlohmann::json& j);
BuildingSpec load_building(const std::filesystem::path& path);
void save_building(const BuildingSpec& spec, const std::filesystem::path& path);

namespace presets {
// Five-zone small office (one packaged AHU per zone), 511.16 m².
BuildingSpec b_train();
// Fifteen-zone medium office, three floors of five zones, one AHU per floor.
BuildingSpec b_denver();
// Resolves "b_train" / "b_denver"; anything else is treated as a file path.
BuildingSpec by_name(const std::string& name_or_path);
}  // namespace presets

}  // namespace hvac::sim
