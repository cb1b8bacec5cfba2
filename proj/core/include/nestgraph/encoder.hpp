#pragma once

#include <string>

#include "nestgraph/corpus.hpp"
#include "nestgraph/nn/graph.hpp"
#include "nestgraph/nn/layers.hpp"

namespace nestgraph {

struct EncoderDims {
  std::size_t lm = 32;        // context-embedding block standing in for t^lm
  std::size_t word = 32;
  std::size_t pos = 8;
  std::size_t char_out = 16;  // char BiLSTM output (2 * char hidden)
  std::size_t char_emb = 16;
  std::size_t hidden = 64;    // sentence BiLSTM hidden per direction

  std::size_t concat_dim() const { return lm + word + pos + char_out; }
  std::size_t token_dim() const { return 2 * hidden; }  // d_t
};

/// One token encoder: four embedding blocks concatenated, then a sentence
/// BiLSTM. The bank instantiates it four times with disjoint parameters.
struct EncoderParams {
  nn::Parameter* word_emb = nullptr;
  nn::Parameter* ctx_emb = nullptr;  // trainable stand-in for the language model
  nn::Parameter* pos_emb = nullptr;
  nn::Parameter* char_emb = nullptr;
  nn::BiLstm char_rnn;
  nn::BiLstm sent_rnn;

  static EncoderParams create(nn::ParameterStore& store, const std::string& prefix,
                              const EncoderDims& dims, const VocabSet& vocabs, nn::Rng& rng);
};

enum class EncoderView { start, end, query, content };

struct EncoderBank {
  EncoderDims dims;
  EncoderParams s;
  EncoderParams e;
  EncoderParams q;
  EncoderParams c;

  const EncoderParams& view(EncoderView v) const;

  static EncoderBank create(nn::ParameterStore& store, const EncoderDims& dims,
                            const VocabSet& vocabs, nn::Rng& rng);
};

/// Character BiLSTM readout for one token: final forward hidden
/// concatenated with final backward hidden.
nn::Var char_encode(nn::Graph& g, const std::string& token, const EncoderParams& params,
                    const VocabSet& vocabs);

/// Token representations for one sentence under one encoder view:
/// an n x d_t matrix, row i = t_i. When the sentence carries attached
/// context vectors they replace the trainable context-embedding rows.
nn::Var encode(nn::Graph& g, const Sentence& sentence, const EncoderParams& params,
               const VocabSet& vocabs, const EncoderDims& dims);

}  // namespace nestgraph
