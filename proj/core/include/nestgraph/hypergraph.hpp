#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nestgraph/corpus.hpp"

namespace nestgraph {

class HypergraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// One emitted tag of the generator alphabet {I, O, E-[cls]}.
/// B is the virtual anchor of every hypergraph, never an emitted tag.
struct Tag {
  enum class Kind { inside, outside, end };

  Kind kind = Kind::outside;
  int class_id = -1;  // set for Kind::end only

  static Tag I() { return {Kind::inside, -1}; }
  static Tag O() { return {Kind::outside, -1}; }
  static Tag E(int class_id) { return {Kind::end, class_id}; }

  bool operator==(const Tag&) const = default;
};

/// Alphabet indexing used by the generator softmax: I=0, O=1, E(c)=2+c.
inline std::size_t tag_alphabet_size(std::size_t n_classes) { return n_classes + 2; }
std::size_t tag_index(const Tag& tag, std::size_t n_classes);
Tag tag_from_index(std::size_t index, std::size_t n_classes);
std::string tag_label(const Tag& tag, const Vocab* classes = nullptr);

/// Entity span with a resolved class id (the model-side twin of Entity,
/// whose class is a string at the corpus boundary).
struct TypedSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  int class_id = 0;

  auto operator<=>(const TypedSpan&) const = default;
};

struct HgNode {
  enum class Type { B, I, O, E };
  static constexpr int kVirtual = -1;  // the B-node is bound to no token

  Type type = Type::B;
  int position = kVirtual;
  int class_id = -1;  // Type::E only
};

/// Per-start hypergraph: nodes in creation order, full edge set to the
/// previous time step, and the step partition (steps[0] is the B-node).
struct LocalHypergraph {
  std::size_t start = 0;
  std::vector<HgNode> nodes;
  std::vector<std::pair<int, int>> edges;  // (from, to) indices into nodes
  std::vector<std::vector<int>> steps;
};

/// Parses a tag sequence into a hypergraph. Step j puts its nodes at token
/// start+j-1; an E tag adds both an I-node and an E-node; O terminates.
/// Throws on an empty sequence or an O before the final position.
LocalHypergraph build_hypergraph(std::size_t start, const std::vector<Tag>& tags);

/// Entities of a structurally valid hypergraph: one (start, p, c) per
/// E(c)-node at position p. Equivalent to enumerating B -> ... -> E(c)
/// paths whose interior nodes are all I.
std::set<TypedSpan> extract_entities(const LocalHypergraph& hg);

struct GoldTags {
  struct Conflict {
    std::size_t position = 0;
    std::vector<int> classes;  // distinct classes ending here, sorted
    int chosen = -1;           // smallest class id wins
  };

  std::vector<Tag> tags;
  std::vector<Conflict> conflicts;
};

/// Inverse of build_hypergraph for a start token's gold entities. Empty
/// entity set yields [O]; otherwise tags run to the furthest entity end,
/// with a trailing O only when a token remains after it.
GoldTags gold_tag_sequence(const std::set<TypedSpan>& entities, std::size_t start,
                           std::size_t sentence_len);

/// Structural validation against the construction rules; returns an empty
/// list iff the graph could have been produced by build_hypergraph.
std::vector<std::string> validate(const LocalHypergraph& hg);

/// Textual dump for the `inspect` command: one line per emitted time step,
/// `pos<TAB>nodes<TAB>edges-to-prev`.
std::string dump(const LocalHypergraph& hg, const Vocab* classes = nullptr);

}  // namespace nestgraph
