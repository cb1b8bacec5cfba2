#include "nestgraph/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nestgraph/nn/graph.hpp"  // Rng

namespace nestgraph {

using json = nlohmann::json;

Vocab::Vocab(VocabKind kind, std::vector<std::string> symbols) : kind_(kind) {
  if (has_specials()) {
    symbols_.push_back("<pad>");
    symbols_.push_back("<unk>");
  }
  for (auto& s : symbols) symbols_.push_back(std::move(s));
  for (std::size_t i = 0; i < symbols_.size(); ++i) index_[symbols_[i]] = i;
}

std::size_t Vocab::index(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it != index_.end()) return it->second;
  if (has_specials()) return kUnk;
  throw CorpusError("unknown class symbol: " + symbol);
}

std::optional<std::size_t> Vocab::find(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocab::symbol(std::size_t index) const {
  if (index >= symbols_.size()) throw CorpusError("vocab index out of range");
  return symbols_[index];
}

namespace {

Sentence parse_sentence(const json& j, std::size_t line_no) {
  auto fail = [line_no](const std::string& what) -> CorpusError {
    return CorpusError("line " + std::to_string(line_no) + ": " + what);
  };
  if (!j.is_object()) throw fail("expected a JSON object");
  if (!j.contains("tokens") || !j["tokens"].is_array()) throw fail("missing \"tokens\" array");

  Sentence s;
  for (const auto& t : j["tokens"]) {
    if (!t.is_string()) throw fail("tokens must be strings");
    s.tokens.push_back(t.get<std::string>());
  }
  if (s.tokens.empty()) throw fail("sentence has no tokens");

  if (j.contains("pos")) {
    if (!j["pos"].is_array()) throw fail("\"pos\" must be an array");
    for (const auto& p : j["pos"]) s.pos.push_back(p.get<std::string>());
    if (s.pos.size() != s.tokens.size())
      throw fail("tokens/pos length mismatch (" + std::to_string(s.tokens.size()) + " vs " +
                 std::to_string(s.pos.size()) + ")");
  } else {
    s.pos.assign(s.tokens.size(), "X");
  }

  if (j.contains("entities")) {
    if (!j["entities"].is_array()) throw fail("\"entities\" must be an array");
    for (const auto& e : j["entities"]) {
      if (!e.is_object() || !e.contains("start") || !e.contains("end") || !e.contains("type"))
        throw fail("entity needs \"start\", \"end\" and \"type\"");
      const auto start = e["start"].get<long long>();
      const auto end = e["end"].get<long long>();
      if (start < 0 || end < 0) throw fail("negative entity index");
      if (start > end)
        throw fail("entity start " + std::to_string(start) + " > end " + std::to_string(end));
      if (static_cast<std::size_t>(end) >= s.tokens.size())
        throw fail("entity index out of range (end " + std::to_string(end) + ", length " +
                   std::to_string(s.tokens.size()) + ")");
      s.entities.insert(Entity{static_cast<std::size_t>(start), static_cast<std::size_t>(end),
                               e["type"].get<std::string>()});
    }
  }
  return s;
}

}  // namespace

std::vector<Sentence> load_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file: " + path);

  std::vector<Sentence> sentences;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded())
      throw CorpusError("line " + std::to_string(line_no) + ": malformed JSON");
    sentences.push_back(parse_sentence(j, line_no));
  }
  return sentences;
}

std::string to_jsonl_line(const Sentence& s) {
  json j;
  j["tokens"] = s.tokens;
  j["pos"] = s.pos;
  json ents = json::array();
  for (const auto& e : s.entities)
    ents.push_back({{"start", e.start}, {"end", e.end}, {"type", e.type}});
  j["entities"] = std::move(ents);
  return j.dump();
}

void write_jsonl(const std::vector<Sentence>& sentences, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw CorpusError("cannot write corpus file: " + path);
  for (const auto& s : sentences) out << to_jsonl_line(s) << '\n';
}

VocabSet build_vocabs(const std::vector<Sentence>& sentences, std::size_t min_word_freq) {
  if (sentences.empty()) throw CorpusError("cannot build vocabularies from an empty corpus");

  std::map<std::string, std::size_t> word_freq;
  std::set<std::string> chars, pos_tags, classes;
  for (const auto& s : sentences) {
    for (const auto& t : s.tokens) {
      ++word_freq[t];
      for (char c : t) chars.insert(std::string(1, c));
    }
    for (const auto& p : s.pos) pos_tags.insert(p);
    for (const auto& e : s.entities) classes.insert(e.type);
  }

  std::vector<std::string> words;
  for (const auto& [w, n] : word_freq)
    if (n >= min_word_freq) words.push_back(w);

  VocabSet v;
  v.word = Vocab(VocabKind::word, std::move(words));
  v.chr = Vocab(VocabKind::chr, {chars.begin(), chars.end()});
  v.pos = Vocab(VocabKind::pos, {pos_tags.begin(), pos_tags.end()});
  v.cls = Vocab(VocabKind::cls, {classes.begin(), classes.end()});
  return v;
}

namespace {

constexpr std::size_t kFillerWords = 40;
// Probability that an entity interior hosts a nested child of the same
// class as its parent (the depth-matching case).
constexpr double kSameClassChild = 0.5;

std::string filler_word(std::size_t i) {
  std::string n = std::to_string(i);
  return "w" + std::string(2 - std::min<std::size_t>(2, n.size()), '0') + n;
}

const char* filler_pos(std::size_t i) {
  static const char* kPos[] = {"N", "V", "J", "D"};
  return kPos[i % 4];
}

struct SynthWriter {
  Sentence sent;

  void push(std::string token, std::string pos) {
    sent.tokens.push_back(std::move(token));
    sent.pos.push_back(std::move(pos));
  }
  std::size_t len() const { return sent.tokens.size(); }
};

// Emits one entity occupying exactly `span` tokens (span >= 3) and returns
// its boundaries.
void emit_entity(SynthWriter& w, nn::Rng& rng, const SyntheticParams& p, double q_child,
                 std::size_t depth, std::size_t span, int forced_class) {
  const int cls = forced_class >= 0
                      ? forced_class
                      : static_cast<int>(rng.next_below(static_cast<std::uint64_t>(p.n_classes)));
  const std::size_t open_at = w.len();
  w.push("op" + std::to_string(cls), "OP");

  std::size_t interior = span - 2;
  const bool can_nest = depth < p.max_depth && interior >= 3;
  if (can_nest && rng.bernoulli(q_child)) {
    const std::size_t child_span = 3 + rng.next_below(interior - 3 + 1);
    const std::size_t pre = rng.next_below(interior - child_span + 1);
    for (std::size_t i = 0; i < pre; ++i) {
      const std::size_t wi = rng.next_below(kFillerWords);
      w.push(filler_word(wi), filler_pos(wi));
    }
    const int child_cls = rng.bernoulli(kSameClassChild) ? cls : -1;
    emit_entity(w, rng, p, q_child, depth + 1, child_span, child_cls);
    for (std::size_t i = pre + child_span; i < interior; ++i) {
      const std::size_t wi = rng.next_below(kFillerWords);
      w.push(filler_word(wi), filler_pos(wi));
    }
  } else {
    for (std::size_t i = 0; i < interior; ++i) {
      const std::size_t wi = rng.next_below(kFillerWords);
      w.push(filler_word(wi), filler_pos(wi));
    }
  }

  w.push("cl" + std::to_string(cls), "CL");
  w.sent.entities.insert(Entity{open_at, w.len() - 1, "C" + std::to_string(cls)});
}

}  // namespace

std::vector<Sentence> generate_synthetic(std::uint64_t seed, std::size_t n_sentences,
                                         const SyntheticParams& params) {
  if (params.n_classes < 1) throw CorpusError("generate_synthetic: n_classes must be >= 1");
  if (params.max_depth < 1) throw CorpusError("generate_synthetic: max_depth must be >= 1");
  if (params.nesting_rate < 0.0 || params.nesting_rate > 1.0)
    throw CorpusError("generate_synthetic: nesting_rate must lie in [0, 1]");
  if (params.max_len < 2 * params.max_depth + 1)
    throw CorpusError("generate_synthetic: max_len " + std::to_string(params.max_len) +
                      " too small for max_depth " + std::to_string(params.max_depth));

  // Child probability q with 2q/(1+q) = nesting_rate: each child event turns
  // both its parent and itself into nested entities.
  const double q_child = params.nesting_rate / (2.0 - params.nesting_rate);

  nn::Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  std::vector<Sentence> out;
  out.reserve(n_sentences);
  const std::size_t lo = std::min<std::size_t>(params.max_len, 8);
  for (std::size_t si = 0; si < n_sentences; ++si) {
    SynthWriter w;
    const std::size_t target = lo + rng.next_below(params.max_len - lo + 1);
    while (w.len() < target) {
      const std::size_t room = target - w.len();
      if (room >= 3 && rng.bernoulli(0.45)) {
        const std::size_t cap = std::min<std::size_t>(room, 11);
        const std::size_t span = 3 + rng.next_below(cap - 3 + 1);
        emit_entity(w, rng, params, q_child, 1, span, -1);
      } else {
        const std::size_t wi = rng.next_below(kFillerWords);
        w.push(filler_word(wi), filler_pos(wi));
      }
    }
    out.push_back(std::move(w.sent));
  }
  return out;
}

std::array<std::vector<Sentence>, 3> split(const std::vector<Sentence>& sentences,
                                           const SplitRatios& ratios, std::uint64_t seed) {
  if (sentences.empty()) throw CorpusError("split: empty corpus");
  const double sum = ratios.train + ratios.dev + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9) throw CorpusError("split: ratios must sum to 1");

  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  nn::Rng rng(seed);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_below(i)]);

  const std::size_t n = sentences.size();
  const double exact[3] = {ratios.train * n, ratios.dev * n, ratios.test * n};
  std::size_t sizes[3];
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    sizes[i] = static_cast<std::size_t>(std::floor(exact[i]));
    assigned += sizes[i];
  }
  // Distribute the remainder by largest fractional part, ties by part order.
  std::vector<int> parts{0, 1, 2};
  std::stable_sort(parts.begin(), parts.end(), [&](int a, int b) {
    return exact[a] - std::floor(exact[a]) > exact[b] - std::floor(exact[b]);
  });
  for (std::size_t r = 0; assigned < n; ++r, ++assigned) sizes[parts[r % 3]] += 1;

  std::array<std::vector<Sentence>, 3> out;
  std::size_t cursor = 0;
  for (int part = 0; part < 3; ++part) {
    out[part].reserve(sizes[part]);
    for (std::size_t i = 0; i < sizes[part]; ++i) out[part].push_back(sentences[order[cursor++]]);
  }
  return out;
}

CorpusStats corpus_stats(const std::vector<Sentence>& sentences) {
  CorpusStats st;
  st.sentences = sentences.size();
  std::size_t token_total = 0;
  for (const auto& s : sentences) {
    token_total += s.size();
    std::size_t nested_here = 0;
    for (const auto& e : s.entities) {
      const bool nested = std::any_of(s.entities.begin(), s.entities.end(), [&](const Entity& o) {
        if (o == e) return false;
        const bool contains = o.start <= e.start && e.end <= o.end;
        const bool contained = e.start <= o.start && o.end <= e.end;
        return contains || contained;
      });
      if (nested) ++nested_here;
    }
    st.total_entities += s.entities.size();
    st.nested_entities += nested_here;
    if (nested_here > 0) ++st.with_nested;
  }
  if (st.sentences > 0) st.avg_sentence_length = double(token_total) / double(st.sentences);
  if (st.total_entities > 0)
    st.nested_percentage = 100.0 * double(st.nested_entities) / double(st.total_entities);
  return st;
}

std::size_t load_precomputed_vectors(const std::string& path, std::vector<Sentence>& sentences) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open vector file: " + path);

  std::size_t n_vectors = 0, dim = 0;
  if (!(in >> n_vectors >> dim) || dim == 0)
    throw CorpusError("vector file " + path + ": bad header");

  std::size_t token_total = 0;
  for (const auto& s : sentences) token_total += s.size();
  if (n_vectors != token_total)
    throw CorpusError("vector file " + path + ": " + std::to_string(n_vectors) +
                      " vectors for " + std::to_string(token_total) + " tokens");

  for (auto& s : sentences) {
    std::vector<std::vector<double>> rows(s.size(), std::vector<double>(dim));
    for (auto& row : rows)
      for (auto& x : row)
        if (!(in >> x)) throw CorpusError("vector file " + path + ": truncated data");
    s.lm_vectors = std::move(rows);
  }
  return dim;
}

}  // namespace nestgraph
