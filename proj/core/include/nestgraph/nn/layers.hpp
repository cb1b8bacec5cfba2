#pragma once

#include <string>
#include <vector>

#include "nestgraph/nn/graph.hpp"

namespace nestgraph::nn {

/// Two-layer feedforward network y = W2 relu(W1 x + b1) + b2.
struct Ffn {
  Parameter* w1 = nullptr;
  Parameter* b1 = nullptr;
  Parameter* w2 = nullptr;
  Parameter* b2 = nullptr;

  Var apply(Graph& g, Var x) const;
  Var apply_rows(Graph& g, Var rows) const;

  static Ffn create(ParameterStore& store, const std::string& prefix, std::size_t in,
                    std::size_t hidden, std::size_t out, Rng& rng);
};

struct LstmState {
  Var c;
  Var h;
};

/// Single LSTM cell with one concatenated weight matrix [4H, H+in] holding
/// the input, forget, output and candidate blocks in that order.
struct LstmCell {
  Parameter* w = nullptr;
  Parameter* b = nullptr;
  std::size_t hidden = 0;
  std::size_t input = 0;

  LstmState zero_state(Graph& g) const;
  LstmState step(Graph& g, const LstmState& state, Var x) const;

  static LstmCell create(ParameterStore& store, const std::string& prefix, std::size_t input,
                         std::size_t hidden, Rng& rng);
};

/// Forward and backward cells over a sequence; output i is the forward
/// hidden at i concatenated with the backward hidden at i.
struct BiLstm {
  LstmCell fwd;
  LstmCell bwd;

  std::vector<Var> run(Graph& g, const std::vector<Var>& xs) const;
  /// Final forward hidden concatenated with final backward hidden
  /// (the character-path readout).
  Var last_hidden(Graph& g, const std::vector<Var>& xs) const;

  static BiLstm create(ParameterStore& store, const std::string& prefix, std::size_t input,
                       std::size_t hidden, Rng& rng);
};

}  // namespace nestgraph::nn
