#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nestgraph {

class CorpusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A typed entity span over tokens. Both indices are inclusive.
struct Entity {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string type;

  auto operator<=>(const Entity&) const = default;
};

struct Sentence {
  std::vector<std::string> tokens;
  std::vector<std::string> pos;  // parallel to tokens; "X" when the input had none
  std::set<Entity> entities;     // may nest and overlap arbitrarily

  // Optional per-token vectors standing in for a pretrained contextual
  // encoder; attached by load_precomputed_vectors, never serialized.
  std::optional<std::vector<std::vector<double>>> lm_vectors;

  std::size_t size() const { return tokens.size(); }
};

enum class VocabKind { word, chr, pos, cls };

/// Symbol table with dense indices. Non-class kinds reserve index 0 for
/// padding and index 1 for unknown symbols; the class vocabulary holds
/// exactly the classes seen, in lexicographic order.
class Vocab {
public:
  static constexpr std::size_t kPad = 0;
  static constexpr std::size_t kUnk = 1;

  Vocab() = default;
  Vocab(VocabKind kind, std::vector<std::string> symbols);

  VocabKind kind() const { return kind_; }
  bool has_specials() const { return kind_ != VocabKind::cls; }
  std::size_t size() const { return symbols_.size(); }

  /// Index of a symbol; unknown maps to kUnk for word/char/pos kinds and
  /// throws for the class kind.
  std::size_t index(const std::string& symbol) const;
  std::optional<std::size_t> find(const std::string& symbol) const;
  const std::string& symbol(std::size_t index) const;

  /// Full symbol table in index order (including specials), as serialized.
  const std::vector<std::string>& symbols() const { return symbols_; }

private:
  VocabKind kind_ = VocabKind::word;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct VocabSet {
  Vocab word;
  Vocab chr;
  Vocab pos;
  Vocab cls;
};

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t with_nested = 0;
  double avg_sentence_length = 0.0;
  std::size_t total_entities = 0;
  std::size_t nested_entities = 0;
  double nested_percentage = 0.0;  // 100 * nested / total, 0 when total = 0
};

/// Reads a JSONL corpus: one object per line with keys "tokens",
/// "pos" (optional) and "entities" ({"start","end","type"}, inclusive end).
/// Malformed lines report their 1-based line number.
std::vector<Sentence> load_jsonl(const std::string& path);

void write_jsonl(const std::vector<Sentence>& sentences, const std::string& path);
std::string to_jsonl_line(const Sentence& sentence);

/// Builds the four vocabularies. Words below min_word_freq map to unknown;
/// class ids are assigned lexicographically over the classes present.
VocabSet build_vocabs(const std::vector<Sentence>& sentences, std::size_t min_word_freq = 1);

struct SyntheticParams {
  std::size_t n_classes = 3;
  std::size_t max_depth = 2;
  double nesting_rate = 0.4;  // target fraction of entities involved in nesting
  std::size_t max_len = 20;
};

/// Deterministic synthetic nested-entity corpus. Every entity of class c is
/// realized as an opening cue token, interior tokens (filler or a recursively
/// nested entity), and a class-specific closing cue token, so boundaries and
/// classes are learnable from surface forms.
std::vector<Sentence> generate_synthetic(std::uint64_t seed, std::size_t n_sentences,
                                         const SyntheticParams& params = {});

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

/// Deterministic shuffled partition; each part size differs from the exact
/// ratio by at most one sentence.
std::array<std::vector<Sentence>, 3> split(const std::vector<Sentence>& sentences,
                                           const SplitRatios& ratios, std::uint64_t seed);

CorpusStats corpus_stats(const std::vector<Sentence>& sentences);

/// Attaches per-token context vectors from a text file (header "n dim",
/// then whitespace-separated reals, row-major per token in corpus order).
/// Returns the vector dimension. Count mismatches raise CorpusError.
std::size_t load_precomputed_vectors(const std::string& path, std::vector<Sentence>& sentences);

}  // namespace nestgraph
