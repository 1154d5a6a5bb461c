#pragma once

#include "gessel/stirling.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gessel {

/// A vertex of a plane tree: a leaf (label 0) or an internal vertex with an
/// ordered list of children. Leaf kinds (x, y, z_j) are derived from the
/// position among siblings and never stored.
struct Node {
  int label = 0;
  std::vector<Node> children;

  static Node leaf() { return Node{}; }
  static Node internal(int label, std::vector<Node> children) { return Node{label, std::move(children)}; }

  bool is_leaf() const { return label == 0; }

  friend bool operator==(const Node&, const Node&) = default;
};

/// Parses the tree grammar `"(" LABEL { " " Child } ")"`, Child := tree | "*",
/// without checking any Gessel-tree invariant. A lone "*" is the one-leaf tree.
Node parse_node(std::string_view text);

/// Canonical serialization, e.g. "(1 * (2 * * *) *)".
std::string format_node(const Node& node);

struct Violation {
  enum class Kind { Labels, Arity, Increasing, LeafCount };
  Kind kind;
  int vertex = 0;
  int parent = 0;
  std::string message;
};

/// Checks every Gessel-tree invariant of node against m.
std::vector<Violation> validate_tree(const Node& node, const Multiset& m);

/// Checks the invariants that do not depend on a multiset: labels 1..n once
/// each, at least two children per internal vertex, increasing labels.
std::vector<Violation> validate_tree(const Node& node);

/// An increasing plane tree on M: vertex i carries k_i + 1 ordered children.
class GesselTree {
 public:
  /// Throws ValidationError listing every violated invariant.
  GesselTree(Node root, Multiset m);

  /// Parses a tree string; the multiset is read off the arities.
  static GesselTree parse(std::string_view text);

  const Node& root() const { return root_; }
  const Multiset& multiset() const { return multiset_; }

  /// The internal vertex with this label; throws DomainError if absent.
  const Node& vertex(int label) const;

  std::string to_string() const { return format_node(root_); }

  /// Copy with the children of vertex `label` rearranged by `edit`.
  template <typename Edit>
  GesselTree with_vertex_edited(int label, Edit&& edit) const {
    GesselTree copy = *this;
    edit(copy.find_mutable(label)->children);
    return copy;
  }

  friend bool operator==(const GesselTree& a, const GesselTree& b) {
    return a.root_ == b.root_ && a.multiset_ == b.multiset_;
  }

 private:
  Node* find_mutable(int label);

  Node root_;
  Multiset multiset_;
};

/// The Gessel map: split the word at the copies of its smallest value and
/// recurse on the factors.
GesselTree gessel_forward(const StirlingPermutation& s);

/// Reads a tree back into its Stirling permutation.
StirlingPermutation gessel_inverse(const GesselTree& t);

struct VertexLeaves {
  bool has_x = false;
  bool has_y = false;
  int z = 0;
};

struct LeafCensus {
  int xleaf = 0;
  int yleaf = 0;
  int zleaf = 0;
  std::map<int, int> zleaf_by_j;
  std::map<int, VertexLeaves> per_vertex;
};

/// Positional classification: first child x, last child y, j-th child z_j.
LeafCensus leaf_census(const GesselTree& t);

/// 1-based inclusive index range.
struct IndexRange {
  int first = 0;
  int last = 0;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// The i-segment: the maximal window of entries >= value around its copies.
IndexRange segment(const StirlingPermutation& s, int value);

Word segment_word(const StirlingPermutation& s, int value);

/// Splits the segment of value at its copies: (w_0, ..., w_{k}).
std::vector<Word> gessel_decomposition(const StirlingPermutation& s, int value);

struct OccurrenceFlags {
  bool first_is_ascent = false;
  bool last_is_descent = false;
  friend bool operator==(const OccurrenceFlags&, const OccurrenceFlags&) = default;
};

OccurrenceFlags first_last_occurrence_flags(const StirlingPermutation& s, int value);

/// Reads off the word of the subtree rooted at `label`.
Word subtree_word(const GesselTree& t, int label);

}  // namespace gessel
