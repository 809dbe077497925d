#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hvac/nn/tensor.hpp"

namespace hvac::nn {

struct AdamWConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.0;
};

// AdamW with decoupled weight decay: p -= lr*wd*p, then the bias-corrected
// Adam step. Reads gradients from Parameter::grad.
class AdamW {
 public:
  AdamW(std::vector<Parameter*> params, AdamWConfig cfg);

  // Throws NonFiniteError naming the first parameter with a NaN/Inf gradient;
  // nothing is modified in that case.
  void step();
  void zero_grad();

  // Scales all gradients so their global L2 norm is at most max_norm.
  // Returns the norm before clipping.
  double clip_grad_norm(double max_norm);

  const AdamWConfig& config() const { return cfg_; }
  void set_lr(double lr) { cfg_.lr = lr; }
  std::uint64_t step_count() const { return t_; }
  const std::vector<Parameter*>& params() const { return params_; }
  const Tensor& first_moment(std::size_t i) const { return m_.at(i); }
  const Tensor& second_moment(std::size_t i) const { return v_.at(i); }

 private:
  std::vector<Parameter*> params_;
  AdamWConfig cfg_;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
  std::uint64_t t_ = 0;
};

}  // namespace hvac::nn
