#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nestgraph/corpus.hpp"
#include "nestgraph/detectors.hpp"
#include "nestgraph/encoder.hpp"
#include "nestgraph/evaluate.hpp"
#include "nestgraph/generator.hpp"
#include "nestgraph/hypergraph.hpp"
#include "nestgraph/nn/optim.hpp"

namespace nestgraph {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class CheckpointError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Query-representation ablation settings: full model, zero-initialized
/// generator state, or a content-shared query encoder.
enum class QueryMode { query, zero, shared };

struct TrainConfig {
  std::size_t epochs = 80;
  std::size_t batch_size = 8;
  double lr_context = 1e-5;
  double lr_pretrained = 1e-6;
  double lr_other = 2e-4;
  double warmup_fraction = 0.1;
  double lambda_train = 3.0;
  double lambda_eval = 1.5;
  double gamma = 0.9;
  std::optional<double> end_threshold = 0.2;
  std::uint64_t seed = 1;
  std::array<double, 3> loss_weights{1.0, 1.0, 1.0};  // start, end, hypergraph
  std::size_t min_word_freq = 1;
  QueryMode query_mode = QueryMode::query;
  EncoderDims dims;
  std::size_t est_hidden = 64;
  std::size_t gen_hidden = 64;

  void validate() const;  // throws ConfigError
};

struct Model {
  TrainConfig cfg;
  VocabSet vocabs;
  nn::ParameterStore store;
  EncoderBank bank;
  Estimator start_est;
  Estimator end_est;
  GeneratorParams gen;

  Model() = default;
  Model(Model&&) = default;
  Model& operator=(Model&&) = default;

  std::size_t n_classes() const { return vocabs.cls.size(); }
};

/// Fresh model with seeded initialization; rejects an empty class vocab.
Model make_model(VocabSet vocabs, const TrainConfig& cfg);

/// Learning-rate group of a parameter by name: the context-embedding
/// tables form the contextual group, everything else is "other". (File
/// provided pretrained vectors are frozen constants, not parameters.)
enum class LrGroup { context, pretrained, other };
LrGroup lr_group(const std::string& param_name);

/// Joint loss over a batch: w_s * L_start + w_e * L_end + w_hg * L_hypergraph.
/// Estimator losses sum over every token of every batch sentence; the
/// generator loss is the mean over all sampled-plus-gold candidates.
nn::Var joint_loss(nn::Graph& g, Model& model, const std::vector<const Sentence*>& batch);

struct EpochMetrics {
  std::size_t epoch = 0;  // 1-based
  double train_loss = 0.0;
  EvalReport dev;
};

struct TrainResult {
  Model model;  // best-dev parameters restored
  std::vector<EpochMetrics> log;
  std::size_t best_epoch = 0;  // 1-based; 0 when no dev evaluation ran
};

/// Deterministic training loop: AdamW, linear warmup-decay over three
/// parameter groups, per-epoch strict dev F1, best-dev selection.
TrainResult train(const std::vector<Sentence>& train_set, const std::vector<Sentence>& dev_set,
                  const TrainConfig& cfg);

struct ScoredEntity {
  Entity entity;
  double end_score = 0.0;

  auto operator<=>(const ScoredEntity&) const = default;
};

std::set<Entity> predict(const Model& model, const Sentence& sentence, double lambda_eval,
                         std::optional<double> threshold);

/// Predictions with the end-estimator score attached, sorted by
/// (start, end, type).
std::vector<ScoredEntity> predict_scored(const Model& model, const Sentence& sentence,
                                         double lambda_eval, std::optional<double> threshold);

/// The prediction pipeline with its models factored out: candidate sampling
/// from start scores, per-candidate tag decoding, hypergraph extraction,
/// then end filtering. predict() wires the trained estimators and greedy
/// decoder into this; tests wire gold stubs.
using DecodeFn = std::function<std::vector<Tag>(std::size_t start)>;
std::set<TypedSpan> predict_spans(std::size_t sentence_len, const TokenScores& start_scores,
                                  const TokenScores& end_scores, const DecodeFn& decode,
                                  double lambda_eval, std::optional<double> threshold);

/// Gold span set of a sentence under a class vocabulary. Entities whose
/// class is absent from the vocab are dropped (they are unreachable for
/// the model and handled by evaluation at the string level).
std::set<TypedSpan> gold_spans(const Sentence& sentence, const Vocab& classes);
std::set<Entity> spans_to_entities(const std::set<TypedSpan>& spans, const Vocab& classes);

struct SweepRow {
  std::optional<double> threshold;
  EvalReport report;
  std::size_t predicted_entities = 0;
};

/// One evaluation per confirming threshold; the grid must contain the
/// no-filter configuration.
std::vector<SweepRow> threshold_sweep(const Model& model, const std::vector<Sentence>& sentences,
                                      const std::vector<std::optional<double>>& thresholds);

/// Checkpoint format: magic "NHG1", little-endian u32 version, u64 JSON
/// header length, JSON header (config, vocabs, parameter manifest), then
/// raw little-endian f64 parameter blocks in manifest order.
void save_checkpoint(const Model& model, const std::string& path);
Model load_checkpoint(const std::string& path);

}  // namespace nestgraph
