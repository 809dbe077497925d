#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include <json.hpp>

#include "hvac/dpt/dataset.hpp"
#include "hvac/dpt/model.hpp"
#include "hvac/dpt/tokenizer.hpp"

namespace hvac::dpt {

struct DptTrainConfig {
  double lr = 1e-3;
  double weight_decay = 1e-4;
  std::size_t epochs = 118;
  std::size_t batch_size = 64;
  double test_split = 0.2;
  double max_grad_norm = 1.0;
  // Stop after this many optimizer steps (0 = no limit).
  std::size_t max_steps = 0;
  DptModelConfig model;

  void validate() const;
};

nlohmann::json to_json(const DptTrainConfig& cfg);
DptTrainConfig train_config_from_json(const nlohmann::json& j);

struct EpochStats {
  std::size_t epoch = 0;
  double train_mse = 0.0;  // mean prefix-MSE over the epoch's minibatches
  double test_mse = 0.0;   // prefix-MSE on the held-out split after the epoch
};

struct PretrainReport {
  std::vector<EpochStats> epochs;
  std::size_t train_samples = 0;
  std::size_t test_samples = 0;
  std::size_t steps = 0;
  double test_label_variance = 0.0;
};

nlohmann::json to_json(const PretrainReport& r);

// A pretrained model with everything needed to tokenize at deployment.
struct TrainedDpt {
  DptModel model;
  TokenNormalizer normalizer;
  std::size_t context_length = 0;  // n used during pretraining

  // <stem>.ntc + <stem>.json sidecar (model dims, context length, normalizer).
  void save(const std::filesystem::path& ntc_path) const;
  static TrainedDpt load(const std::filesystem::path& ntc_path);
};

// Batched tensors for a set of samples sharing one context length.
struct SampleBatch {
  Tensor context;  // [batch*n x 20]
  Tensor queries;  // [batch x 20]
  Tensor targets;  // [batch*(n+1) x 1], a_star repeated per prefix
  std::size_t batch = 0;
  std::size_t n = 0;
};

SampleBatch make_sample_batch(std::span<const PretrainingSample* const> samples, const TokenNormalizer& norm);

// Mean over samples and prefixes j = 0..n of (prediction_j - a_star)^2.
double prefix_mse(DptModel& model, const std::vector<const PretrainingSample*>& samples,
                  const TokenNormalizer& norm, std::size_t batch_size = 64);

// Deterministic split: shuffled with `seed`, the first ceil(test_split*N) go to test.
void split_dataset(const std::vector<PretrainingSample>& samples, double test_split, std::uint64_t seed,
                   std::vector<const PretrainingSample*>& train, std::vector<const PretrainingSample*>& test);

using EpochCallback = std::function<void(const EpochStats&)>;

// Minimizes the prefix-summed MSE with AdamW. Throws NonFiniteError on a
// non-finite loss.
TrainedDpt pretrain(const std::vector<PretrainingSample>& samples, const DptTrainConfig& cfg, std::uint64_t seed,
                    PretrainReport* report = nullptr, const EpochCallback& on_epoch = {});

}  // namespace hvac::dpt
