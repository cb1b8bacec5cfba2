#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "nestgraph/nn/tensor.hpp"

namespace nestgraph::nn {

/// Deterministic uniform draws from a SplitMix-seeded xoshiro-free core;
/// std distributions are implementation-defined, this is not.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
  /// Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }
  bool bernoulli(double p) { return next_double() < p; }

private:
  std::uint64_t state_;
};

/// Owns all Parameters of a model in a stable order; the order defines the
/// checkpoint manifest.
class ParameterStore {
public:
  Parameter& create(const std::string& name, Tensor shape_like);
  Parameter& create_matrix(const std::string& name, std::size_t rows, std::size_t cols, Rng& rng);
  Parameter& create_vector(const std::string& name, std::size_t n);  // zero-initialized

  Parameter* find(const std::string& name);
  const Parameter* find(const std::string& name) const;

  std::size_t size() const { return params_.size(); }
  Parameter& at(std::size_t i) { return *params_[i]; }
  const Parameter& at(std::size_t i) const { return *params_[i]; }

  void zero_grads();

  std::vector<Tensor> snapshot_values() const;
  void restore_values(const std::vector<Tensor>& values);

private:
  std::vector<std::unique_ptr<Parameter>> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

/// Reverse-mode tape. Values are computed eagerly at node creation;
/// backward() accumulates into Parameter::grad for parameter leaves.
class Graph {
public:
  enum class Op : std::uint8_t {
    constant,
    param,
    affine,       // W x + b
    linear_rows,  // X W^T + 1 b^T, row-wise
    add,
    mul,
    concat,
    slice,
    sigmoid,
    tanh_fn,
    relu,
    softmax,
    row,
    stack_rows,
    sum_n,
    scale,
    focal_sum,
    cross_entropy,
  };

  Var constant(Tensor value);
  Var param(Parameter& p);

  Var affine(Var w, Var x, Var b);
  Var linear_rows(Var x, Var w, Var b);
  Var add(Var a, Var b);
  Var mul(Var a, Var b);
  Var concat(const std::vector<Var>& parts);
  Var slice(Var a, std::size_t offset, std::size_t len);
  Var sigmoid(Var a);
  Var tanh_fn(Var a);
  Var relu(Var a);
  Var softmax(Var a);
  Var row(Var matrix, std::size_t i);
  Var stack_rows(const std::vector<Var>& rows);
  Var sum(const std::vector<Var>& scalars);
  Var scale(Var a, double factor);

  /// Focal loss summed over tokens: labels[i] in {0,1}, probabilities
  /// clamped to [1e-7, 1-1e-7]. Gamma = 0 reduces to binary cross-entropy.
  Var focal_sum(Var probs, std::vector<int> labels, double gamma);

  /// -log p[target] with the same clamp; p must sum to 1 within 1e-6.
  Var cross_entropy(Var probs, std::size_t target);

  const Tensor& value(Var v) const { return nodes_[v.id].value; }
  double scalar(Var v) const;

  void backward(Var root);

  std::size_t size() const { return nodes_.size(); }
  void clear();

  static constexpr double kProbEps = 1e-7;

private:
  struct Node {
    Op op;
    std::array<int, 2> in{-1, -1};
    std::vector<int> list;  // n-ary inputs
    Tensor value;
    Tensor grad;
    Parameter* parameter = nullptr;
    std::size_t a0 = 0, a1 = 0;  // slice offset/len, row index, CE target
    double x0 = 0.0;             // scale factor or gamma
    std::vector<int> labels;
  };

  Node& node(Var v) { return nodes_[v.id]; }
  const Tensor& in_value(const Node& n, int slot) const { return nodes_[n.in[slot]].value; }
  Tensor& ensure_grad(int id);
  Var push(Node n);
  void backward_node(int id);

  std::vector<Node> nodes_;
};

}  // namespace nestgraph::nn
