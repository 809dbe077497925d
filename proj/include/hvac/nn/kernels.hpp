#pragma once

#include <cstddef>

#include "hvac/nn/real.hpp"

// Row-major dense kernels shared by the tape ops and the tape-free inference
// paths. Leading dimension of every operand equals its column count.
namespace hvac::nn::kernels {

// C[m x n] (+)= A[m x k] * B[k x n]
void gemm_nn(std::size_t m, std::size_t n, std::size_t k, const Real* a, const Real* b, Real* c,
             bool accumulate);
// C[m x n] (+)= A[m x k] * B[n x k]^T
void gemm_nt(std::size_t m, std::size_t n, std::size_t k, const Real* a, const Real* b, Real* c,
             bool accumulate);
// C[m x n] (+)= A[k x m]^T * B[k x n]
void gemm_tn(std::size_t m, std::size_t n, std::size_t k, const Real* a, const Real* b, Real* c,
             bool accumulate);

// y[r, :] += bias for every row
void add_bias(std::size_t rows, std::size_t cols, const Real* bias, Real* y);

// Row-wise layer norm. mean/rstd may be null when not needed.
void layer_norm(std::size_t rows, std::size_t cols, const Real* x, const Real* gamma,
                const Real* beta, Real eps, Real* y, Real* mean, Real* rstd);

Real gelu(Real x);
Real gelu_grad(Real x);

}  // namespace hvac::nn::kernels
