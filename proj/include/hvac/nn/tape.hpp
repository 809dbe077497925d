#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hvac/nn/tensor.hpp"

namespace hvac::nn {

class Tape;

// Handle to a value recorded on a tape.
class Var {
 public:
  Var() = default;

  const Tensor& value() const;
  Tensor& grad() const;
  bool requires_grad() const;
  Tape& tape() const { return *tape_; }
  std::size_t id() const { return id_; }
  bool valid() const { return tape_ != nullptr; }

 private:
  friend class Tape;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

// Reverse-mode gradient tape. Nodes are appended in evaluation order and
// replayed backwards; parameter leaves flush their gradient into the owning
// Parameter::grad at the end of backward().
class Tape {
 public:
  using BackwardFn = std::function<void(Tape& tape, std::size_t self)>;

  Var constant(Tensor value);
  Var parameter(Parameter& param);
  // `inputs` decide whether the new node needs a gradient.
  Var record(Tensor value, std::initializer_list<Var> inputs, BackwardFn backward);

  const Tensor& value(std::size_t id) const { return nodes_[id].value; }
  bool requires_grad(std::size_t id) const { return nodes_[id].requires_grad; }
  // Zero-initialised on first access.
  Tensor& grad(std::size_t id);

  // Seeds d(root)/d(root) = 1; root must hold a single element.
  void backward(Var root);
  void backward(Var root, const Tensor& seed);

  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    BackwardFn backward;
    Parameter* param = nullptr;
    bool requires_grad = false;
  };
  std::vector<Node> nodes_;
};

}  // namespace hvac::nn
