#pragma once

#include "gessel/poly.hpp"
#include "gessel/tree.hpp"

#include <map>
#include <string>
#include <vector>

namespace gessel {

/// How the x- and y-leaves of one internal vertex pair up. An x-leaf is
/// balanced iff its parent also has a y-leaf, and symmetrically.
enum class LeafBalance { NoXYLeaf, BalancedPair, UnbalancedX, UnbalancedY };

std::string to_string(LeafBalance b);

struct BalanceReport {
  std::map<int, LeafBalance> status;
  int uxleaf = 0;
  int bxleaf = 0;
  int uyleaf = 0;
  int byleaf = 0;
};

BalanceReport balance_report(const GesselTree& t);

/// Foata-Strehl action at one vertex: when the vertex has an unbalanced
/// y-leaf, swap its first and last children (with their subtrees); otherwise
/// return the tree unchanged. Throws DomainError if the vertex is absent.
GesselTree psi(const GesselTree& t, int vertex);

/// Two-sided version of psi: swaps first and last children whenever the
/// vertex carries an unbalanced x- or y-leaf. An involution.
GesselTree toggle(const GesselTree& t, int vertex);

/// No vertex carries an unbalanced y-leaf.
bool is_canonical(const GesselTree& t);

/// Applies psi at every vertex with an unbalanced y-leaf, ascending labels.
GesselTree canonical_representative(const GesselTree& t);

/// Closure of {t} under toggle at every vertex, sorted by serialization.
std::vector<GesselTree> orbit(const GesselTree& t);

/// Canonical trees on m, in the order of their permutations.
std::vector<GesselTree> enumerate_canonical(const Multiset& m);

/// For trees on [n]_2: no vertex has a z-leaf without an x-leaf. Throws
/// DomainError on any other multiset.
bool is_canonical_ternary(const GesselTree& t);

/// Number of vertices carrying both an x-leaf and a z-leaf.
int xz_vertex_count(const GesselTree& t);

/// Vertex classes after chopping off x- and y-leaves.
enum class VertexType {
  Full = 1,    // neither an x- nor a y-leaf
  YLabel = 2,  // y-leaf only
  XLabel = 3,  // x-leaf only, weighted v
  XYLabel = 4  // both, weighted u
};

/// A vertex of a pruned tree; label 0 marks a retained z-leaf.
struct PrunedNode {
  int label = 0;
  VertexType type = VertexType::Full;
  std::vector<PrunedNode> children;

  bool is_leaf() const { return label == 0; }
};

/// A Gessel tree with its x- and y-leaves removed. z-leaves stay, so the
/// z-degree of the source tree is preserved.
class PrunedTree {
 public:
  const PrunedNode& root() const { return root_; }
  const std::map<int, VertexType>& types() const { return types_; }
  int z_degree() const { return zleaf_; }

  /// Label of the first Type-2 vertex, or 0 if there is none.
  int first_type2_vertex() const;

  /// (u exponent, v exponent) = (#Type 4, #Type 3). Throws DomainError
  /// naming the vertex when a Type-2 vertex is present.
  std::pair<int, int> weight() const;

  /// u^a v^b z^zleaf as a (u,v,z) polynomial; same precondition as weight().
  Poly3 weighted_monomial() const;

  /// Tree grammar with "LABEL:u", "LABEL:v" or "LABEL:y" heads; Type-1
  /// vertices carry no suffix and z-leaves print as "*".
  std::string to_string() const;

 private:
  friend PrunedTree prune(const GesselTree& t);

  PrunedNode root_;
  std::map<int, VertexType> types_;
  int zleaf_ = 0;
};

/// Throws DomainError on the one-leaf tree of the empty multiset.
PrunedTree prune(const GesselTree& t);

}  // namespace gessel
