#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nestgraph/nn/tensor.hpp"

namespace nestgraph::nn {

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

/// AdamW with decoupled weight decay and bias-corrected moments.
class AdamW {
public:
  explicit AdamW(AdamWConfig cfg = {}) : cfg_(cfg) {}

  /// One optimizer step over (parameter, learning rate) pairs. Gradients
  /// are read from Parameter::grad and left untouched.
  void step(const std::vector<std::pair<Parameter*, double>>& params);

  std::size_t step_count() const { return step_; }
  const AdamWConfig& config() const { return cfg_; }

private:
  struct Moments {
    Tensor m;
    Tensor v;
  };

  AdamWConfig cfg_;
  std::size_t step_ = 0;
  std::unordered_map<std::string, Moments> moments_;
};

/// Linear warmup-decay schedule over three parameter groups.
struct LrSchedule {
  double base_context = 1e-5;     // contextual-embedding group
  double base_pretrained = 1e-6;  // pretrained-vector group
  double base_other = 2e-4;
  std::size_t warmup = 0;  // W
  std::size_t total = 1;   // T, must exceed W
};

struct GroupRates {
  double context = 0.0;
  double pretrained = 0.0;
  double other = 0.0;
};

/// rate = base * step/W below W, base * (T-step)/(T-W) from W to T.
GroupRates lr_at(std::size_t step, const LrSchedule& schedule);

}  // namespace nestgraph::nn
