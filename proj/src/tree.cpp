#include "gessel/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace gessel {

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  Node parse() {
    skip_space();
    Node node = parse_child();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return node;
  }

 private:
  Node parse_child() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '*') {
      ++pos_;
      return Node::leaf();
    }
    if (text_[pos_] != '(') fail("expected '(' or '*'");
    ++pos_;
    skip_space();
    const int label = parse_label();
    Node node{label, {}};
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated vertex " + std::to_string(label));
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      node.children.push_back(parse_child());
    }
    return node;
  }

  int parse_label() {
    const std::size_t start = pos_;
    int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("label too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a vertex label");
    if (value == 0) fail("vertex labels start at 1");
    return value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("tree string, offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void format_into(const Node& node, std::string& out) {
  if (node.is_leaf()) {
    out += '*';
    return;
  }
  out += '(';
  out += std::to_string(node.label);
  for (const auto& c : node.children) {
    out += ' ';
    format_into(c, out);
  }
  out += ')';
}

// Shared walk for both validation flavours; `arity` returns the expected
// child count for a label or 0 when any count of at least two is allowed.
std::vector<Violation> validate_impl(const Node& root, int n, const std::function<int(int)>& arity,
                                     int expected_leaves) {
  std::vector<Violation> out;
  std::map<int, int> label_count;
  int leaves = 0;

  std::function<void(const Node&, int)> walk = [&](const Node& node, int parent) {
    if (node.is_leaf()) {
      ++leaves;
      return;
    }
    ++label_count[node.label];
    if (parent != 0 && node.label <= parent) {
      out.push_back({Violation::Kind::Increasing, node.label, parent,
                     "increasing condition violated at edge (" + std::to_string(parent) + "," +
                         std::to_string(node.label) + ")"});
    }
    const int want = node.label <= n ? arity(node.label) : 0;
    const int have = static_cast<int>(node.children.size());
    if (want > 0 ? have != want : have < 2) {
      out.push_back({Violation::Kind::Arity, node.label, parent,
                     "arity violation at vertex " + std::to_string(node.label) + ": " + std::to_string(have) +
                         " children, expected " + (want > 0 ? std::to_string(want) : std::string("at least 2"))});
    }
    for (const auto& c : node.children) walk(c, node.label);
  };
  walk(root, 0);

  for (const auto& [label, count] : label_count) {
    if (label > n) {
      out.push_back({Violation::Kind::Labels, label, 0,
                     "label " + std::to_string(label) + " outside 1.." + std::to_string(n)});
    } else if (count > 1) {
      out.push_back({Violation::Kind::Labels, label, 0, "label " + std::to_string(label) + " appears " +
                                                            std::to_string(count) + " times"});
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!label_count.contains(v)) {
      out.push_back({Violation::Kind::Labels, v, 0, "label " + std::to_string(v) + " is missing"});
    }
  }
  if (expected_leaves >= 0 && leaves != expected_leaves) {
    out.push_back({Violation::Kind::LeafCount, 0, 0,
                   "tree has " + std::to_string(leaves) + " leaves, expected " + std::to_string(expected_leaves)});
  }
  return out;
}

int max_label(const Node& node) {
  int best = node.label;
  for (const auto& c : node.children) best = std::max(best, max_label(c));
  return best;
}

void collect_arities(const Node& node, std::vector<int>& mults) {
  if (node.is_leaf()) return;
  mults[node.label - 1] = static_cast<int>(node.children.size()) - 1;
  for (const auto& c : node.children) collect_arities(c, mults);
}

const Node* find_vertex(const Node& node, int label) {
  if (node.label == label) return &node;
  for (const auto& c : node.children) {
    if (const Node* hit = find_vertex(c, label)) return hit;
  }
  return nullptr;
}

Node forward(std::span<const int> word) {
  if (word.empty()) return Node::leaf();
  const int least = *std::min_element(word.begin(), word.end());
  Node node{least, {}};
  std::size_t start = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == least) {
      node.children.push_back(forward(word.subspan(start, i - start)));
      start = i + 1;
    }
  }
  node.children.push_back(forward(word.subspan(start)));
  return node;
}

void inverse_into(const Node& node, Word& out) {
  if (node.is_leaf()) return;
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    if (c) out.push_back(node.label);
    inverse_into(node.children[c], out);
  }
}

void census_into(const Node& node, LeafCensus& census) {
  if (node.is_leaf()) return;
  auto& mine = census.per_vertex[node.label];
  const int last = static_cast<int>(node.children.size());
  for (int pos = 1; pos <= last; ++pos) {
    const Node& child = node.children[pos - 1];
    if (!child.is_leaf()) {
      census_into(child, census);
      continue;
    }
    if (pos == 1) {
      mine.has_x = true;
      ++census.xleaf;
    } else if (pos == last) {
      mine.has_y = true;
      ++census.yleaf;
    } else {
      ++mine.z;
      ++census.zleaf;
      ++census.zleaf_by_j[pos];
    }
  }
}

}  // namespace

Node parse_node(std::string_view text) { return TreeParser(text).parse(); }

std::string format_node(const Node& node) {
  std::string out;
  format_into(node, out);
  return out;
}

std::vector<Violation> validate_tree(const Node& node, const Multiset& m) {
  if (m.empty()) {
    if (node.is_leaf()) return {};
    return {{Violation::Kind::Labels, node.label, 0, "the empty multiset admits only the one-leaf tree"}};
  }
  return validate_impl(
      node, m.n(), [&m](int label) { return m.mult(label) + 1; }, m.total() + 1);
}

std::vector<Violation> validate_tree(const Node& node) {
  if (node.is_leaf()) return {};
  return validate_impl(
      node, max_label(node), [](int) { return 0; }, -1);
}

GesselTree::GesselTree(Node root, Multiset m) : root_(std::move(root)), multiset_(std::move(m)) {
  const auto violations = validate_tree(root_, multiset_);
  if (!violations.empty()) {
    std::vector<std::string> messages;
    for (const auto& v : violations) messages.push_back(v.message);
    throw ValidationError(std::move(messages));
  }
}

GesselTree GesselTree::parse(std::string_view text) {
  Node root = parse_node(text);
  const auto violations = validate_tree(root);
  if (!violations.empty()) {
    std::vector<std::string> messages;
    for (const auto& v : violations) messages.push_back(v.message);
    throw ValidationError(std::move(messages));
  }
  if (root.is_leaf()) return GesselTree(std::move(root), Multiset{});
  std::vector<int> mults(static_cast<std::size_t>(max_label(root)), 0);
  collect_arities(root, mults);
  Multiset m(std::move(mults));
  return GesselTree(std::move(root), std::move(m));
}

const Node& GesselTree::vertex(int label) const {
  const Node* hit = label >= 1 ? find_vertex(root_, label) : nullptr;
  if (hit == nullptr) throw DomainError("tree has no vertex " + std::to_string(label));
  return *hit;
}

Node* GesselTree::find_mutable(int label) { return const_cast<Node*>(&vertex(label)); }

GesselTree gessel_forward(const StirlingPermutation& s) {
  return GesselTree(forward(s.word()), s.multiset());
}

StirlingPermutation gessel_inverse(const GesselTree& t) {
  Word word;
  word.reserve(static_cast<std::size_t>(t.multiset().total()));
  inverse_into(t.root(), word);
  return StirlingPermutation::from_word(std::move(word), t.multiset());
}

LeafCensus leaf_census(const GesselTree& t) {
  LeafCensus census;
  census_into(t.root(), census);
  return census;
}

IndexRange segment(const StirlingPermutation& s, int value) {
  const auto occ = occurrences(s, value);
  IndexRange r{occ.first, occ.last};
  while (s.at(r.first - 1) > value) --r.first;
  while (s.at(r.last + 1) > value) ++r.last;
  return r;
}

Word segment_word(const StirlingPermutation& s, int value) {
  const auto r = segment(s, value);
  return Word(s.word().begin() + (r.first - 1), s.word().begin() + r.last);
}

std::vector<Word> gessel_decomposition(const StirlingPermutation& s, int value) {
  std::vector<Word> factors(1);
  for (int v : segment_word(s, value)) {
    if (v == value) {
      factors.emplace_back();
    } else {
      factors.back().push_back(v);
    }
  }
  return factors;
}

OccurrenceFlags first_last_occurrence_flags(const StirlingPermutation& s, int value) {
  const auto occ = occurrences(s, value);
  return {s.at(occ.first - 1) < value, value > s.at(occ.last + 1)};
}

Word subtree_word(const GesselTree& t, int label) {
  Word out;
  inverse_into(t.vertex(label), out);
  return out;
}

}  // namespace gessel
