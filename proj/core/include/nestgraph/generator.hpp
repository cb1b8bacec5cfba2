#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nestgraph/hypergraph.hpp"
#include "nestgraph/nn/graph.hpp"
#include "nestgraph/nn/layers.hpp"

namespace nestgraph {

/// Local Hypergraph Generator: a one-layer LSTM whose state is initialized
/// from the query representation, plus a two-layer FFN over the hidden
/// state producing tag logits. The hidden size is tied to the encoder
/// output size because the query is assigned into the state directly.
struct GeneratorParams {
  nn::LstmCell cell;  // input d_t, hidden d_t
  nn::Ffn out;        // d_t -> hidden -> alphabet
  std::size_t n_classes = 0;

  static GeneratorParams create(nn::ParameterStore& store, const std::string& prefix,
                                std::size_t token_dim, std::size_t ffn_hidden,
                                std::size_t n_classes, nn::Rng& rng);
};

/// C_0 = h_0 = query.
nn::LstmState init_state(nn::Graph& g, nn::Var query);

enum class StopReason { o_emitted, sequence_exhausted };

struct DecodeTrace {
  std::vector<Tag> tags;
  std::vector<std::vector<double>> probs;  // per-step tag distribution
  StopReason stop = StopReason::sequence_exhausted;
};

/// Greedy decoding from a start token: step j consumes content row
/// start+j-1, emits the argmax tag, and stops on O or at the end of the
/// sentence. The trace parses into a LocalHypergraph via build_hypergraph.
DecodeTrace decode_greedy(nn::Graph& g, std::size_t start, nn::Var content_rows, nn::Var query,
                          const GeneratorParams& params);

/// Teacher-forced cross-entropy over exactly |gold_tags| steps, feeding the
/// true content rows (never the previously emitted tag).
nn::Var teacher_forced_loss(nn::Graph& g, std::size_t start, nn::Var content_rows, nn::Var query,
                            const std::vector<Tag>& gold_tags, const GeneratorParams& params);

/// Arithmetic mean of per-candidate losses.
nn::Var batch_loss(nn::Graph& g, const std::vector<nn::Var>& candidate_losses);

}  // namespace nestgraph
