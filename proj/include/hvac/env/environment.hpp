#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hvac/env/observation.hpp"
#include "hvac/sim/building.hpp"
#include "hvac/sim/occupancy.hpp"
#include "hvac/sim/simulator.hpp"
#include "hvac/sim/weather.hpp"

namespace hvac::env {

// 31 days of 15-minute steps.
inline constexpr std::size_t kDefaultHorizon = 2976;

struct AgentAction {
  double min_damper_position = 0.0;
};

struct TransitionTuple {
  ZoneObservation s;
  AgentAction a;
  ZoneObservation s_next;
  double r = 0.0;  // negated Wh, always <= 0
};

struct EpisodeConfig {
  std::size_t horizon = kDefaultHorizon;
  int start_month = 1;
  std::uint64_t weather_seed = 0;
  std::uint64_t occupancy_seed = 0;
  double initial_temp = 21.0;
  double initial_humidity = 40.0;
  // Replaces the synthetic generator when set (e.g. a CSV series).
  std::shared_ptr<const sim::WeatherSeries> weather;
};

struct StepOutcome {
  std::vector<ZoneObservation> observations;
  std::vector<double> rewards;
  std::vector<sim::HvacEnergyBreakdown> energy;
  bool done = false;
};

// Episodic multi-agent wrapper: one agent per zone, reward is the negated VAV
// energy of that zone over the transition.
class BuildingEnv {
 public:
  BuildingEnv() = default;

  std::vector<ZoneObservation> reset(const sim::BuildingSpec& building, const EpisodeConfig& cfg);
  StepOutcome step(std::span<const double> actions);

  const sim::BuildingSpec& building() const { return building_; }
  const EpisodeConfig& config() const { return cfg_; }
  const sim::SimState& state() const { return state_; }
  const sim::WeatherSeries& weather() const { return *weather_; }
  const sim::OccupancySchedule& occupancy() const { return occupancy_; }
  std::size_t zone_count() const { return building_.zone_count(); }
  std::size_t timestep() const { return state_.timestep_index; }
  bool done() const { return started_ && state_.timestep_index >= cfg_.horizon; }

  ZoneObservation observe(std::size_t zone) const;
  std::vector<ZoneObservation> observe_all() const;

 private:
  sim::BuildingSpec building_;
  EpisodeConfig cfg_;
  std::shared_ptr<const sim::WeatherSeries> weather_;
  sim::OccupancySchedule occupancy_;
  sim::SimState state_;
  bool started_ = false;
};

}  // namespace hvac::env

namespace hvac::env {

// Episode `index` of a simulated year run: month (index % 12) + 1 with
// weather/occupancy streams derived from `seed`. Shared by every controller
// so comparisons are paired.
EpisodeConfig year_episode(std::uint64_t seed, std::size_t index, std::size_t horizon = kDefaultHorizon);

}  // namespace hvac::env
