#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "nestgraph/nn/graph.hpp"

namespace nestgraph::nn {

struct GradCheckOptions {
  double h = 1e-5;  // central-difference step
  // 0 checks every coordinate; otherwise a seeded random subset per parameter.
  std::size_t max_coords_per_param = 0;
  std::uint64_t seed = 0;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::string worst_coordinate;  // "param[i]" of the largest error
};

/// Central finite differences against the tape gradient. `build` must
/// construct the scalar loss from the store's current parameter values.
/// Relative error is |a - n| / max(|a|, |n|, 1e-8).
GradCheckResult grad_check(const std::function<Var(Graph&)>& build, ParameterStore& store,
                           const GradCheckOptions& opts = {});

}  // namespace nestgraph::nn
