#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nestgraph/evaluate.hpp"
#include "nestgraph/pipeline.hpp"

namespace nestgraph {

/// JSON encodings shared by the CLI and the training loop so that files
/// produced either way are byte-identical.

std::string eval_report_json(const EvalReport& report);

std::string prediction_record_json(std::size_t index, const std::vector<ScoredEntity>& entities);

std::string metrics_json(const std::vector<EpochMetrics>& log, std::size_t best_epoch,
                         const EvalReport& best_dev, const std::optional<EvalReport>& test);

std::string sweep_json(const std::vector<SweepRow>& rows);

std::string corpus_stats_json(const CorpusStats& stats);

/// TrainConfig <-> JSON. Parsing rejects unknown keys.
std::string train_config_json(const TrainConfig& cfg);
TrainConfig parse_train_config(const std::string& json_text);

}  // namespace nestgraph
