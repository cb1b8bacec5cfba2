#include "nestgraph/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nestgraph {

std::size_t tag_index(const Tag& tag, std::size_t n_classes) {
  switch (tag.kind) {
    case Tag::Kind::inside:
      return 0;
    case Tag::Kind::outside:
      return 1;
    case Tag::Kind::end:
      if (tag.class_id < 0 || static_cast<std::size_t>(tag.class_id) >= n_classes)
        throw HypergraphError("tag_index: class id out of range");
      return 2 + static_cast<std::size_t>(tag.class_id);
  }
  throw HypergraphError("tag_index: bad tag");
}

Tag tag_from_index(std::size_t index, std::size_t n_classes) {
  if (index == 0) return Tag::I();
  if (index == 1) return Tag::O();
  if (index >= tag_alphabet_size(n_classes))
    throw HypergraphError("tag_from_index: index out of range");
  return Tag::E(static_cast<int>(index - 2));
}

std::string tag_label(const Tag& tag, const Vocab* classes) {
  switch (tag.kind) {
    case Tag::Kind::inside:
      return "I";
    case Tag::Kind::outside:
      return "O";
    case Tag::Kind::end:
      if (classes) return "E-" + classes->symbol(static_cast<std::size_t>(tag.class_id));
      return "E-" + std::to_string(tag.class_id);
  }
  return "?";
}

namespace {

std::string node_label(const HgNode& n, const Vocab* classes) {
  switch (n.type) {
    case HgNode::Type::B:
      return "B";
    case HgNode::Type::I:
      return "I";
    case HgNode::Type::O:
      return "O";
    case HgNode::Type::E:
      if (classes) return "E-" + classes->symbol(static_cast<std::size_t>(n.class_id));
      return "E-" + std::to_string(n.class_id);
  }
  return "?";
}

}  // namespace

LocalHypergraph build_hypergraph(std::size_t start, const std::vector<Tag>& tags) {
  if (tags.empty()) throw HypergraphError("build_hypergraph: empty tag sequence");
  for (std::size_t j = 0; j + 1 < tags.size(); ++j)
    if (tags[j].kind == Tag::Kind::outside)
      throw HypergraphError("build_hypergraph: O tag before the final position (step " +
                            std::to_string(j + 1) + ")");

  LocalHypergraph hg;
  hg.start = start;
  hg.nodes.push_back(HgNode{HgNode::Type::B, HgNode::kVirtual, -1});
  hg.steps.push_back({0});

  for (std::size_t j = 1; j <= tags.size(); ++j) {
    const Tag& tag = tags[j - 1];
    const int pos = static_cast<int>(start + j - 1);
    std::vector<int> step;
    auto add_node = [&](HgNode::Type type, int class_id) {
      const int id = static_cast<int>(hg.nodes.size());
      hg.nodes.push_back(HgNode{type, pos, class_id});
      for (int prev : hg.steps.back()) hg.edges.emplace_back(prev, id);
      step.push_back(id);
    };
    switch (tag.kind) {
      case Tag::Kind::inside:
        add_node(HgNode::Type::I, -1);
        break;
      case Tag::Kind::end:
        add_node(HgNode::Type::I, -1);
        add_node(HgNode::Type::E, tag.class_id);
        break;
      case Tag::Kind::outside:
        add_node(HgNode::Type::O, -1);
        break;
    }
    hg.steps.push_back(std::move(step));
  }
  return hg;
}

std::set<TypedSpan> extract_entities(const LocalHypergraph& hg) {
  std::set<TypedSpan> out;
  for (const auto& n : hg.nodes)
    if (n.type == HgNode::Type::E)
      out.insert(TypedSpan{hg.start, static_cast<std::size_t>(n.position), n.class_id});
  return out;
}

GoldTags gold_tag_sequence(const std::set<TypedSpan>& entities, std::size_t start,
                           std::size_t sentence_len) {
  GoldTags out;
  if (entities.empty()) {
    out.tags.push_back(Tag::O());
    return out;
  }

  std::map<std::size_t, std::vector<int>> ends;  // position -> classes ending there
  std::size_t max_end = start;
  for (const auto& e : entities) {
    if (e.start != start)
      throw HypergraphError("gold_tag_sequence: entity start " + std::to_string(e.start) +
                            " does not match query start " + std::to_string(start));
    if (e.end >= sentence_len)
      throw HypergraphError("gold_tag_sequence: entity end beyond sentence");
    auto& classes = ends[e.end];
    if (std::find(classes.begin(), classes.end(), e.class_id) == classes.end())
      classes.push_back(e.class_id);
    max_end = std::max(max_end, e.end);
  }

  for (std::size_t p = start; p <= max_end; ++p) {
    auto it = ends.find(p);
    if (it == ends.end()) {
      out.tags.push_back(Tag::I());
      continue;
    }
    auto& classes = it->second;
    std::sort(classes.begin(), classes.end());
    if (classes.size() > 1)
      out.conflicts.push_back(GoldTags::Conflict{p, classes, classes.front()});
    out.tags.push_back(Tag::E(classes.front()));
  }
  if (max_end + 1 <= sentence_len - 1) out.tags.push_back(Tag::O());
  return out;
}

std::vector<std::string> validate(const LocalHypergraph& hg) {
  std::vector<std::string> v;
  auto violation = [&v](const std::string& msg) { v.push_back(msg); };

  if (hg.nodes.empty()) {
    violation("Rule 2(1): hypergraph has no nodes, expected the single B-node");
    return v;
  }

  // Step partition must cover the nodes exactly once, in creation order.
  std::vector<int> step_of(hg.nodes.size(), -1);
  for (std::size_t j = 0; j < hg.steps.size(); ++j) {
    for (int id : hg.steps[j]) {
      if (id < 0 || static_cast<std::size_t>(id) >= hg.nodes.size()) {
        violation("Rule 3: step " + std::to_string(j) + " references a missing node");
        return v;
      }
      if (step_of[id] != -1)
        violation("Rule 3: node #" + std::to_string(id) + " appears in two steps");
      step_of[id] = static_cast<int>(j);
    }
  }
  for (std::size_t id = 0; id < hg.nodes.size(); ++id)
    if (step_of[id] == -1)
      violation("Rule 3: node #" + std::to_string(id) + " belongs to no step");

  // Rule 2(1): exactly one B-node, virtual, alone at step 0.
  std::size_t b_count = 0;
  for (std::size_t id = 0; id < hg.nodes.size(); ++id)
    if (hg.nodes[id].type == HgNode::Type::B) ++b_count;
  if (b_count != 1)
    violation("Rule 2(1): found " + std::to_string(b_count) + " B-nodes, expected exactly one");
  if (hg.steps.empty() || hg.steps[0] != std::vector<int>{0} ||
      hg.nodes[0].type != HgNode::Type::B)
    violation("Rule 2(1): step 0 must hold exactly the B-node (node #0)");
  else if (hg.nodes[0].position != HgNode::kVirtual)
    violation("Rule 2(1): the B-node must be virtual, found position " +
              std::to_string(hg.nodes[0].position));

  // Per-step shape, O placement, positions.
  for (std::size_t j = 1; j < hg.steps.size(); ++j) {
    const auto& step = hg.steps[j];
    std::size_t n_i = 0, n_o = 0, n_e = 0;
    for (int id : step) {
      switch (hg.nodes[id].type) {
        case HgNode::Type::I:
          ++n_i;
          break;
        case HgNode::Type::O:
          ++n_o;
          break;
        case HgNode::Type::E:
          ++n_e;
          break;
        case HgNode::Type::B:
          violation("Rule 2(1): B-node #" + std::to_string(id) + " at step " +
                    std::to_string(j));
          break;
      }
      const int want = static_cast<int>(hg.start + j - 1);
      if (hg.nodes[id].type != HgNode::Type::B && hg.nodes[id].position != want)
        violation("Algorithm 1: node #" + std::to_string(id) + " at step " + std::to_string(j) +
                  " should sit at token " + std::to_string(want));
    }
    if (n_o > 0) {
      if (step.size() != 1)
        violation("Rule 2(2): the O-node must be the only node of step " + std::to_string(j));
      if (j + 1 != hg.steps.size()) {
        for (std::size_t k = j + 1; k < hg.steps.size(); ++k)
          for (int id : hg.steps[k])
            violation("Rule 3(2): node #" + std::to_string(id) + " follows an O-node");
      }
    } else if (n_e > 0 && n_i == 0) {
      violation("Rule 3(1): E-node at step " + std::to_string(j) +
                " lacks the accompanying I-node");
    } else if (n_i != 1 || n_e > 1 || step.empty()) {
      violation("Rule 3: step " + std::to_string(j) + " has an invalid node set");
    }
  }

  // Rule 3(3): each node connects to exactly the nodes of the previous step.
  std::set<std::pair<int, int>> have(hg.edges.begin(), hg.edges.end());
  std::set<std::pair<int, int>> want;
  for (std::size_t j = 1; j < hg.steps.size(); ++j)
    for (int to : hg.steps[j])
      for (int from : hg.steps[j - 1]) want.emplace(from, to);
  for (const auto& e : want)
    if (!have.count(e))
      violation("Rule 3(3): node #" + std::to_string(e.second) + " missing edge from node #" +
                std::to_string(e.first));
  for (const auto& e : have)
    if (!want.count(e))
      violation("Rule 3(3): unexpected edge (" + std::to_string(e.first) + ", " +
                std::to_string(e.second) + ")");

  return v;
}

std::string dump(const LocalHypergraph& hg, const Vocab* classes) {
  std::ostringstream out;
  for (std::size_t j = 1; j < hg.steps.size(); ++j) {
    const auto& step = hg.steps[j];
    out << (hg.start + j - 1) << '\t';
    for (std::size_t k = 0; k < step.size(); ++k) {
      if (k) out << ',';
      out << node_label(hg.nodes[step[k]], classes);
    }
    out << '\t';
    const auto& prev = hg.steps[j - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      if (k) out << ',';
      out << node_label(hg.nodes[prev[k]], classes);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace nestgraph
