#pragma once

#include <optional>
#include <set>
#include <vector>

#include "nestgraph/corpus.hpp"
#include "nestgraph/hypergraph.hpp"
#include "nestgraph/nn/graph.hpp"
#include "nestgraph/nn/layers.hpp"

namespace nestgraph {

enum class EstimatorSide { start, end };

struct TokenScores {
  EstimatorSide side = EstimatorSide::start;
  std::vector<double> p;  // one probability per token
};

struct SamplingPolicy {
  double lambda = 1.5;
  bool include_gold = false;  // training mode unions gold starts in
  // The score threshold defining n is fixed at 0.5.
};

/// Start/End Token Estimator head: two-layer FFN + sigmoid per token.
struct Estimator {
  nn::Ffn ffn;  // token_dim -> hidden -> 1

  static Estimator create(nn::ParameterStore& store, const std::string& prefix,
                          std::size_t token_dim, std::size_t hidden, nn::Rng& rng);
};

/// Per-token probabilities as a tape node, [n, 1] after sigmoid.
nn::Var score_tokens_var(nn::Graph& g, nn::Var reprs, const Estimator& est);

TokenScores score_tokens(nn::Graph& g, nn::Var reprs, const Estimator& est, EstimatorSide side);

/// Binary labels: start label 1 iff some gold entity starts there,
/// end label 1 iff some gold entity ends there.
std::vector<int> estimator_labels(const Sentence& sentence, EstimatorSide side);

/// Sum over tokens of the focal loss at the given gamma.
nn::Var estimator_loss(nn::Graph& g, nn::Var probs, const std::vector<int>& labels, double gamma);

/// Top-k candidate tokens where n = |{i : p_i > 0.5}| and k = min(ceil(lambda*n),
/// sentence length); ties break toward the lower index. Training mode returns
/// the union with gold starts. Result is sorted ascending.
std::vector<std::size_t> sample_candidates(const TokenScores& scores, const SamplingPolicy& policy,
                                           const std::set<std::size_t>* gold_starts = nullptr);

/// Keeps an entity iff the end estimator scores its end token at or above
/// the threshold; no threshold means no filtering.
std::set<TypedSpan> end_filter(const std::set<TypedSpan>& entities, const TokenScores& end_scores,
                               std::optional<double> threshold);

}  // namespace nestgraph
