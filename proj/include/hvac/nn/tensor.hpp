#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hvac/common/error.hpp"
#include "hvac/nn/real.hpp"

namespace hvac::nn {

using Shape = std::vector<std::size_t>;

class ShapeError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

std::string shape_string(const Shape& shape);

// Dense row-major tensor. Every op in this library views it as a matrix:
// rows() = product of the leading dims, cols() = last dim.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, Real fill = Real(0));
  Tensor(Shape shape, std::vector<Real> data);

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  std::size_t rows() const;
  std::size_t cols() const { return shape_.empty() ? 1 : shape_.back(); }

  Real* data() { return data_.data(); }
  const Real* data() const { return data_.data(); }
  std::span<Real> values() { return data_; }
  std::span<const Real> values() const { return data_; }

  Real& operator[](std::size_t i) { return data_[i]; }
  Real operator[](std::size_t i) const { return data_[i]; }
  Real& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  Real at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

  void fill(Real value);
  void zero() { fill(Real(0)); }
  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  bool operator==(const Tensor&) const = default;

 private:
  Shape shape_;
  std::vector<Real> data_;
};

void require_same_shape(const Tensor& a, const Tensor& b, const char* op);

// Trainable tensor with its gradient accumulator.
struct Parameter {
  Parameter() = default;
  Parameter(std::string name_, Tensor value_)
      : name(std::move(name_)), value(std::move(value_)), grad(value.shape()) {}

  std::string name;
  Tensor value;
  Tensor grad;
};

}  // namespace hvac::nn
