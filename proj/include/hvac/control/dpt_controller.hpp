#pragma once

#include "hvac/control/controller.hpp"
#include "hvac/dpt/deploy.hpp"

namespace hvac::control {

// Frozen pretrained transformer with one growing context per zone.
class DptController : public Controller {
 public:
  DptController(const dpt::TrainedDpt& model, const sim::BuildingSpec& building, const dpt::DeployConfig& cfg);
  std::string name() const override { return "hvac-dpt"; }
  void begin_episode(std::size_t episode) override;
  std::vector<double> act(std::span<const env::ZoneObservation> observations) override;
  void on_episode_end(const std::vector<std::vector<env::TransitionTuple>>& transitions) override;

  const dpt::DptAgent& agent() const { return agent_; }

 private:
  dpt::DptAgent agent_;
};

}  // namespace hvac::control
