#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <json.hpp>

#include "hvac/nn/adamw.hpp"
#include "hvac/ppo/loss.hpp"
#include "hvac/ppo/policy.hpp"
#include "hvac/ppo/rollout.hpp"

namespace hvac::ppo {

struct PpoConfig {
  double clip_epsilon = 0.2;
  double lr = 3e-4;
  std::size_t batch_size = 2976;
  std::size_t minibatch_size = 372;
  std::size_t epochs_per_update = 10;
  double gamma = 0.99;
  double gae_lambda = 0.95;
  double entropy_coef = 0.01;
  double value_coef = 0.5;
  double max_grad_norm = 0.5;
  bool normalize_advantages = true;
  std::size_t episodes = 50;
  std::size_t hidden = 64;

  void validate() const;
  PpoLossConfig loss() const { return {clip_epsilon, entropy_coef, value_coef}; }
};

nlohmann::json to_json(const PpoConfig& cfg);
PpoConfig ppo_config_from_json(const nlohmann::json& j);

// Flattened training batch.
struct UpdateBatch {
  std::size_t obs_dim = 0;
  std::size_t act_dim = 0;
  std::vector<Real> features;
  std::vector<double> raw_actions;
  std::vector<double> log_probs;
  std::vector<double> advantages;
  std::vector<double> returns;

  std::size_t size() const { return log_probs.size(); }
};

// Generalized advantage estimates; `dones[t]` cuts bootstrapping after step t.
// When dones is empty only the final step bootstraps from `bootstrap_value`.
void compute_gae(std::span<const double> rewards, std::span<const double> values,
                 std::span<const std::uint8_t> dones, double bootstrap_value, double gamma, double lambda,
                 std::vector<double>& advantages, std::vector<double>& returns);

// Builds a batch from a trajectory, dividing rewards by reward_scale first.
UpdateBatch make_batch(const Trajectory& traj, double reward_scale, const PpoConfig& cfg);

struct PpoUpdateStats {
  PpoLossTerms last;     // terms of the final minibatch
  double mean_total = 0.0;
  double mean_kl = 0.0;
  double mean_clip_fraction = 0.0;
  double grad_norm = 0.0;  // pre-clip norm of the final minibatch
  std::size_t minibatches = 0;
};

// cfg.epochs_per_update passes over the batch in shuffled minibatches.
// On a non-finite loss or gradient the parameters are restored to their
// pre-update values and NonFiniteError carries the loss diagnostics.
PpoUpdateStats ppo_update(PpoPolicy& policy, nn::AdamW& optimizer, const UpdateBatch& batch,
                          const PpoConfig& cfg, std::mt19937_64& rng);

// Welford mean/variance of raw rewards, used for per-building reward scaling.
class RunningStat {
 public:
  void push(double x);
  void push(std::span<const double> xs) {
    for (double x : xs) push(x);
  }
  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double stddev() const;
  // Divisor applied to rewards: stddev, or 1 before any data.
  double scale() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

// A policy plus its optimizer, convenient for online learners.
// Not movable: the optimizer holds pointers into the policy.
struct PpoLearner {
  PpoLearner(PpoPolicy p, const PpoConfig& cfg);
  PpoLearner(const PpoLearner&) = delete;
  PpoLearner& operator=(const PpoLearner&) = delete;

  PpoPolicy policy;
  nn::AdamW optimizer;
};

}  // namespace hvac::ppo
