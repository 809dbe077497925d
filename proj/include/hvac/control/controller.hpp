#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hvac/common/error.hpp"
#include "hvac/env/environment.hpp"

namespace hvac::control {

// Common interface for every compared controller. act() returns one minimum
// damper position per zone; learners may adapt only in on_episode_end().
class Controller {
 public:
  virtual ~Controller() = default;

  virtual std::string name() const = 0;
  virtual bool learns_online() const { return false; }

  virtual void begin_episode(std::size_t /*episode*/) {}
  virtual std::vector<double> act(std::span<const env::ZoneObservation> observations) = 0;
  // transitions[z] holds zone z's episode in order.
  virtual void on_episode_end(const std::vector<std::vector<env::TransitionTuple>>& /*transitions*/) {}
};

struct EpisodeResult {
  int month = 1;
  std::vector<sim::HvacEnergyBreakdown> zone_energy;
  double total_wh = 0.0;
  double reward_sum = 0.0;  // sum over zones and steps, equals -total_wh
  std::vector<std::vector<env::TransitionTuple>> transitions;
};

// The shared episode loop: every controller's energy is accounted here.
EpisodeResult run_episode(env::BuildingEnv& env, const sim::BuildingSpec& building, Controller& controller,
                          const env::EpisodeConfig& episode, std::size_t episode_index);

class BaselineController : public Controller {
 public:
  explicit BaselineController(double position = 0.5) : position_(position) {}
  std::string name() const override { return "baseline"; }
  std::vector<double> act(std::span<const env::ZoneObservation> observations) override;

 private:
  double position_;
};

}  // namespace hvac::control
