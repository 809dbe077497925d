#pragma once

#include <vector>

#include <json.hpp>

#include "hvac/control/controller.hpp"

namespace hvac::control {

// Rule-based stand-in for an engineer-designed schedule:
//   floor = occupied ? occupied_floor : unoccupied_floor
//   + boost_gain * (degrees outside the comfort band)
//   + free_cooling_gain * (temp - free_cooling_setpoint) when the zone is above
//     the setpoint, inside the band and outdoor air is cooler than the zone
// clamped to [0, 1].
struct ExpertConfig {
  double occupied_floor = 0.3;
  double unoccupied_floor = 0.05;
  double boost_gain = 0.2;  // per °C outside the band
  double free_cooling_gain = 0.0;
  double free_cooling_setpoint = 22.0;

  void validate() const;
};

nlohmann::json to_json(const ExpertConfig& cfg);
ExpertConfig expert_config_from_json(const nlohmann::json& j);

double expert_action(const env::ZoneObservation& obs, const sim::ComfortBand& band, const ExpertConfig& cfg);

class ExpertController : public Controller {
 public:
  ExpertController(const sim::BuildingSpec& building, const ExpertConfig& cfg);
  std::string name() const override { return "expert"; }
  std::vector<double> act(std::span<const env::ZoneObservation> observations) override;

 private:
  std::vector<sim::ComfortBand> bands_;
  ExpertConfig cfg_;
};

struct ExpertGrid {
  std::vector<double> occupied_floor{0.0, 0.05, 0.1, 0.2, 0.3};
  std::vector<double> unoccupied_floor{0.0, 0.05};
  std::vector<double> boost_gain{0.0, 0.2};
  std::vector<double> free_cooling_gain{0.0, 0.1, 0.3};
  std::vector<double> free_cooling_setpoint{22.0, 23.0};
};

nlohmann::json to_json(const ExpertGrid& grid);
ExpertGrid expert_grid_from_json(const nlohmann::json& j);

// Commissioning: the grid point with the lowest mean energy over `episodes`
// commissioning episodes (seeded independently of benchmark seeds). Ties keep
// the earlier grid point.
ExpertConfig commission_expert(const sim::BuildingSpec& building, const ExpertGrid& grid, std::size_t episodes,
                               std::size_t horizon, std::uint64_t seed);

}  // namespace hvac::control
