#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "hvac/control/controller.hpp"
#include "hvac/ppo/trainer.hpp"

namespace hvac::control {

// Online PPO learner base: samples actions during the episode and runs one
// PPO update per agent at each episode boundary.
class OnlinePpoController : public Controller {
 public:
  bool learns_online() const override { return true; }
  std::size_t updates() const { return updates_; }

 protected:
  OnlinePpoController(const ppo::PpoConfig& cfg, std::size_t horizon, std::uint64_t seed);
  ppo::PpoConfig cfg_;
  std::mt19937_64 rng_;
  ppo::RunningStat reward_stat_;
  std::size_t updates_ = 0;
};

// One policy over the concatenated observations of every zone.
class SarlController : public OnlinePpoController {
 public:
  SarlController(const sim::BuildingSpec& building, const ppo::PpoConfig& cfg, std::size_t horizon,
                 std::uint64_t seed);
  std::string name() const override { return "sarl"; }
  void begin_episode(std::size_t episode) override;
  std::vector<double> act(std::span<const env::ZoneObservation> observations) override;
  void on_episode_end(const std::vector<std::vector<env::TransitionTuple>>& transitions) override;

  const ppo::PpoPolicy& policy() const { return learner_->policy; }

 private:
  std::unique_ptr<ppo::PpoLearner> learner_;
  ppo::Trajectory traj_;
};

// One independent policy per zone acting on its own observation.
class MarlController : public OnlinePpoController {
 public:
  MarlController(const sim::BuildingSpec& building, const ppo::PpoConfig& cfg, std::size_t horizon,
                 std::uint64_t seed);
  std::string name() const override { return "marl"; }
  void begin_episode(std::size_t episode) override;
  std::vector<double> act(std::span<const env::ZoneObservation> observations) override;
  void on_episode_end(const std::vector<std::vector<env::TransitionTuple>>& transitions) override;

  const ppo::PpoPolicy& policy(std::size_t zone) const { return learners_.at(zone)->policy; }

 private:
  std::vector<std::unique_ptr<ppo::PpoLearner>> learners_;
  std::vector<ppo::Trajectory> trajs_;
  std::vector<std::mt19937_64> zone_rngs_;
};

}  // namespace hvac::control
