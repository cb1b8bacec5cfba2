#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "nestgraph/corpus.hpp"

namespace nestgraph {

/// Strict micro precision/recall/F1: a prediction counts only on an exact
/// (start, end, type) match, with set semantics per sentence.
struct EvalReport {
  struct ClassStat {
    std::size_t tp = 0;
    std::size_t predicted = 0;
    std::size_t gold = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
  };

  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t predicted = 0;
  std::size_t gold = 0;
  std::map<std::string, ClassStat> per_class;
};

EvalReport evaluate(const std::vector<std::set<Entity>>& predictions,
                    const std::vector<std::set<Entity>>& golds);

}  // namespace nestgraph
