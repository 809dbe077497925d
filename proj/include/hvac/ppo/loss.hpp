#pragma once

#include <cstddef>
#include <span>

#include "hvac/nn/tensor.hpp"

namespace hvac::ppo {

struct PpoLossConfig {
  double clip_epsilon = 0.2;
  double entropy_coef = 0.01;
  double value_coef = 0.5;
};

struct PpoLossTerms {
  double policy_loss = 0.0;  // -mean clipped surrogate
  double value_loss = 0.0;   // mean (V - R)^2
  double entropy = 0.0;      // mean Gaussian entropy (clamped log-std)
  double approx_kl = 0.0;    // mean (old_logp - logp)
  double clip_fraction = 0.0;
  double total = 0.0;        // policy + value_coef*value - entropy_coef*entropy
};

// Minibatch of N samples for a k-dimensional action.
struct PpoBatchView {
  std::span<const double> raw_actions;  // N*k, row-major
  std::span<const double> old_log_probs;
  std::span<const double> advantages;
  std::span<const double> returns;
};

// Evaluates the PPO objective given actor outputs [N x 2k] and critic outputs
// [N x 1]. When the gradient pointers are non-null they receive d(total)/d(out)
// of the same shapes (overwritten, not accumulated).
PpoLossTerms ppo_loss(const nn::Tensor& actor_out, const nn::Tensor& values, const PpoBatchView& batch,
                      const PpoLossConfig& cfg, nn::Tensor* d_actor, nn::Tensor* d_values);

}  // namespace hvac::ppo
