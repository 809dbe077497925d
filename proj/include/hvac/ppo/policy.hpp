#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <vector>

#include "hvac/env/observation.hpp"
#include "hvac/nn/mlp.hpp"

namespace hvac::ppo {

using nn::Real;
using nn::Tensor;

inline constexpr double kLogStdMin = -5.0;
inline constexpr double kLogStdMax = 1.0;

double clamp_log_std(double raw);
// log N(u; mu, exp(log_std)) with log_std already clamped.
double gaussian_log_prob(double u, double mu, double log_std);

struct ActionSample {
  std::vector<double> raw;     // unclipped Gaussian draw
  std::vector<double> action;  // clipped into [0, 1]
  double log_prob = 0.0;       // of `raw`, summed over action dims
};

// Gaussian actor-critic over damper fractions. The actor emits
// [mean_1..mean_k, log_std_1..log_std_k]; the critic a scalar value.
// Observations are one or more concatenated zone observations.
class PpoPolicy {
 public:
  PpoPolicy() = default;
  PpoPolicy(std::size_t zones_in, std::size_t act_dim, std::uint64_t seed, std::size_t hidden = 64);

  std::size_t obs_dim() const { return actor_.in_features(); }
  std::size_t act_dim() const { return act_dim_; }

  nn::Mlp& actor() { return actor_; }
  const nn::Mlp& actor() const { return actor_; }
  nn::Mlp& critic() { return critic_; }
  const nn::Mlp& critic() const { return critic_; }
  env::NormStats& norm() { return norm_; }
  const env::NormStats& norm() const { return norm_; }

  // Normalized feature row for the given observations (concatenated).
  std::vector<Real> encode(std::span<const env::ZoneObservation> obs) const;

  // Batched forward passes on encoded features [rows x obs_dim].
  Tensor actor_forward(const Tensor& features) const;
  Tensor value_forward(const Tensor& features) const;

  // Deterministic action: clamp(mean, 0, 1).
  std::vector<double> mean_action(std::span<const Real> features) const;
  ActionSample sample(std::span<const Real> features, std::mt19937_64& rng) const;
  double value(std::span<const Real> features) const;

  std::vector<nn::Parameter*> parameters();
  std::vector<const nn::Parameter*> parameters() const;

  void save(const std::filesystem::path& path) const;
  static PpoPolicy load(const std::filesystem::path& path);

 private:
  std::size_t act_dim_ = 0;
  nn::Mlp actor_;
  nn::Mlp critic_;
  env::NormStats norm_ = env::NormStats::defaults();
};

}  // namespace hvac::ppo
