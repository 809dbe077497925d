#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hvac/env/environment.hpp"
#include "hvac/ppo/policy.hpp"

namespace hvac::ppo {

// One agent's view of an episode, with everything the PPO update needs.
struct Trajectory {
  std::size_t obs_dim = 0;
  std::size_t act_dim = 0;
  std::vector<env::TransitionTuple> transitions;  // zone-level; empty for multi-zone agents
  std::vector<Real> features;                     // steps * obs_dim, normalized
  std::vector<double> raw_actions;                // steps * act_dim
  std::vector<double> log_probs;
  std::vector<double> values;
  std::vector<double> rewards;  // raw, negated Wh
  double bootstrap_value = 0.0;  // V(s_H); the horizon is a time limit, not a terminal

  std::size_t steps() const { return rewards.size(); }
  double episode_return() const;
};

// Runs one episode with one policy per zone acting on its own observation.
// Zone z draws actions from the stream mix_seed(action_seed, z).
std::vector<Trajectory> collect_rollout(env::BuildingEnv& env, const sim::BuildingSpec& building,
                                        std::span<const PpoPolicy* const> policies,
                                        const env::EpisodeConfig& episode, std::uint64_t action_seed,
                                        bool deterministic = false);

}  // namespace hvac::ppo
