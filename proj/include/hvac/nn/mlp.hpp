#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hvac/nn/tape.hpp"

namespace hvac::nn {

// y = x W + b with W stored [in x out].
struct Linear {
  Linear() = default;
  Linear(const std::string& name, std::size_t in, std::size_t out);

  // Glorot-uniform weights scaled by gain, zero bias.
  void init_uniform(std::mt19937_64& rng, double gain);
  // N(0, std) weights, zero bias.
  void init_normal(std::mt19937_64& rng, double std);

  Var forward(Tape& tape, Var x);
  // Tape-free forward, y is [rows x out].
  void infer(std::size_t rows, const Real* x, Real* y) const;

  std::size_t in_features() const { return weight.value.rows(); }
  std::size_t out_features() const { return weight.value.cols(); }

  Parameter weight;
  Parameter bias;
};

// Fully connected stack with tanh between layers and a linear output.
class Mlp {
 public:
  Mlp() = default;
  // sizes = {in, hidden..., out}
  Mlp(const std::string& name, const std::vector<std::size_t>& sizes);

  void init(std::mt19937_64& rng, double hidden_gain, double output_gain);

  Var forward(Tape& tape, Var x);
  Tensor infer(const Tensor& x) const;

  std::vector<Parameter*> parameters();
  std::vector<const Parameter*> parameters() const;
  std::size_t in_features() const { return layers_.front().in_features(); }
  std::size_t out_features() const { return layers_.back().out_features(); }
  std::vector<Linear>& layers() { return layers_; }
  const std::vector<Linear>& layers() const { return layers_; }

 private:
  std::vector<Linear> layers_;
};

}  // namespace hvac::nn
