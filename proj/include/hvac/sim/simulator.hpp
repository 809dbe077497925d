#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hvac/sim/building.hpp"
#include "hvac/sim/weather.hpp"

namespace hvac::sim {

struct HvacEnergyBreakdown {
  double fan = 0.0;      // Wh
  double reheat = 0.0;   // Wh
  double cooling = 0.0;  // Wh

  double total() const { return fan + reheat + cooling; }
  HvacEnergyBreakdown& operator+=(const HvacEnergyBreakdown& o) {
    fan += o.fan;
    reheat += o.reheat;
    cooling += o.cooling;
    return *this;
  }
  bool operator==(const HvacEnergyBreakdown&) const = default;
};

struct ZoneState {
  double temp = 21.0;      // °C
  double humidity = 40.0;  // % RH
};

enum class SupplyMode { kHeating, kCooling, kInBand };

struct ZoneStepOptions {
  // Proportional comfort loop; disable to force zero demand.
  bool comfort_loop = true;
  // Inside the band the AHU delivers mixed outdoor/return air at
  // clamp(T_out, T_supply_cooling, T_zone) with no coil energy.
  bool economizer = true;
};

struct ZoneStepResult {
  ZoneState state;
  HvacEnergyBreakdown energy;
  SupplyMode mode = SupplyMode::kInBand;
  double demanded_damper = 0.0;
  double damper = 0.0;     // effective fraction
  double airflow = 0.0;    // kg/s
  double supply_temp = 0.0;
};

// Full band violation (in °C) that demands a fully open damper.
inline constexpr double kComfortLoopGain = 1.0;

// One explicit-Euler step of a single zone. `inter_zone_heat` is the net heat
// flow (W) into the zone from its neighbours, computed by the caller.
// Throws ContractViolation unless min_damper is in [0, 1].
ZoneStepResult step_zone_hvac(const ZoneThermalParams& zone, const AirLoopSpec& loop,
                              const PhysicsConstants& physics, double max_airflow, double timestep,
                              const ZoneState& state, double min_damper, const WeatherStep& weather,
                              bool occupied, double inter_zone_heat,
                              const ZoneStepOptions& options = {});

struct SimState {
  std::vector<double> zone_temps;
  std::vector<double> zone_humidities;
  std::size_t timestep_index = 0;
  std::vector<HvacEnergyBreakdown> energy;  // accumulated per zone

  bool operator==(const SimState&) const = default;
};

SimState initial_state(const BuildingSpec& spec, double temp, double humidity = 40.0);

struct BuildingStepResult {
  SimState state;
  std::vector<HvacEnergyBreakdown> energy;  // this step, per zone
  std::vector<double> airflow;              // kg/s per zone
};

// Advances every zone one timestep. Inter-zone conduction is evaluated from
// the pre-step temperatures (Jacobi), so zone order does not matter.
BuildingStepResult step_building(const BuildingSpec& spec, const SimState& state,
                                 std::span<const double> actions, const WeatherStep& weather,
                                 std::span<const std::uint8_t> occupancy,
                                 const ZoneStepOptions& options = {});

// Saturation humidity ratio (kg/kg) at `temp` °C and sea-level pressure.
double saturation_humidity_ratio(double temp);

}  // namespace hvac::sim
