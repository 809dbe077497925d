#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hvac/nn/tape.hpp"

namespace hvac::nn {

// Allowed keys per query row of one sequence. Rows list keys in ascending order.
struct AttentionMask {
  std::size_t seq_len = 0;
  std::vector<std::vector<std::uint32_t>> keys;

  // Row t attends to 0..t.
  static AttentionMask causal(std::size_t seq_len);
  // Layout [c_1..c_n, q_0..q_n]: context row k attends to context 0..k; the
  // readout row for prefix j attends to context 0..j-1 and itself.
  static AttentionMask prefix_readout(std::size_t n_context);

  bool allows(std::size_t query, std::size_t key) const;
  std::size_t total_keys() const;
};

// [n x k] * [k x m]
Var matmul(Var a, Var b);
// [n x m] + bias[m]
Var add_bias(Var x, Var bias);
Var add(Var a, Var b);
Var scale(Var x, Real factor);
Var tanh(Var x);
Var gelu(Var x);
Var sigmoid(Var x);
Var softmax_rows(Var x);
Var layer_norm(Var x, Var gamma, Var beta, Real eps = Real(1e-5));
// out[i, :] = table[indices[i], :]
Var embedding_lookup(Var table, const std::vector<std::size_t>& indices);
Var gather_rows(Var x, const std::vector<std::size_t>& rows);
Var columns(Var x, std::size_t begin, std::size_t count);
// qkv: [batch*seq_len x 3*width] packed as [Q | K | V]; returns [batch*seq_len x width].
Var causal_self_attention(Var qkv, std::size_t n_heads, const AttentionMask& mask);
// Identity (same Var) when p == 0 or not training.
Var dropout(Var x, Real p, std::mt19937_64& rng, bool training);
// mean((pred - target)^2) as a [1] tensor.
Var mse_loss(Var pred, Var target);

}  // namespace hvac::nn
