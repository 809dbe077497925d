#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "hvac/nn/mlp.hpp"
#include "hvac/nn/ops.hpp"

namespace hvac::dpt {

using nn::Real;
using nn::Tensor;

inline constexpr std::size_t kTokenDim = 20;

struct DptModelConfig {
  std::size_t token_dim = kTokenDim;
  std::size_t width = 128;
  std::size_t layers = 3;
  std::size_t heads = 8;
  std::size_t mlp_ratio = 4;
  std::size_t max_context = 256;
  double dropout = 0.0;

  void validate() const;
};

nlohmann::json to_json(const DptModelConfig& cfg);
DptModelConfig model_config_from_json(const nlohmann::json& j);

// Per-layer keys/values of an encoded context, reusable across queries.
struct ContextCache {
  std::size_t length = 0;
  std::vector<Tensor> keys;    // per layer [length x width]
  std::vector<Tensor> values;  // per layer [length x width]
};

// Pre-LN causal transformer over [context_1..context_n, readout_0..readout_n].
// Context tokens attend causally among themselves and never see the query, so
// their keys/values can be cached; readout j carries the query token and
// attends to context 1..j plus itself. The head maps the readout state to
// (0, 1) with a sigmoid.
class DptModel {
 public:
  DptModel() = default;
  DptModel(const DptModelConfig& cfg, std::uint64_t seed);

  const DptModelConfig& config() const { return cfg_; }

  // context: [batch*n x token_dim], queries: [batch x token_dim]. Returns
  // [batch*(n+1) x 1]; row b*(n+1)+j is the prediction from prefix j.
  nn::Var forward_prefixes(nn::Tape& tape, const Tensor& context, const Tensor& queries, std::size_t batch,
                           std::size_t n, std::mt19937_64* dropout_rng = nullptr, bool training = false);

  ContextCache encode_context(const Tensor& context) const;
  // Predictions for each query row using the first `prefix` cached context elements.
  std::vector<double> predict(const ContextCache& cache, const Tensor& queries, std::size_t prefix) const;
  // Same as predict() with the full cache.
  std::vector<double> predict(const ContextCache& cache, const Tensor& queries) const {
    return predict(cache, queries, cache.length);
  }

  std::vector<nn::Parameter*> parameters();
  std::vector<const nn::Parameter*> parameters() const;
  std::uint64_t checksum() const;

 private:
  struct Block {
    nn::Parameter ln1_gamma, ln1_beta;
    nn::Linear qkv, proj;
    nn::Parameter ln2_gamma, ln2_beta;
    nn::Linear fc1, fc2;
  };

  // Tape-free forward of rows through one block's attention input stage.
  void block_qkv(const Block& b, const Tensor& x, Tensor& qkv) const;
  void block_tail(const Block& b, Tensor& x, const Tensor& attn) const;
  Tensor embed(const Tensor& tokens, std::size_t first_position, bool query) const;

  DptModelConfig cfg_;
  nn::Linear token_embed_;
  nn::Parameter pos_embed_;
  std::vector<Block> blocks_;
  nn::Parameter lnf_gamma_, lnf_beta_;
  nn::Linear head_;
};

}  // namespace hvac::dpt
