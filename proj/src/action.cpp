#include "gessel/action.hpp"

#include <set>
#include <utility>

namespace gessel {

namespace {

LeafBalance classify(const VertexLeaves& v) {
  if (v.has_x && v.has_y) return LeafBalance::BalancedPair;
  if (v.has_x) return LeafBalance::UnbalancedX;
  if (v.has_y) return LeafBalance::UnbalancedY;
  return LeafBalance::NoXYLeaf;
}

GesselTree swap_ends(const GesselTree& t, int vertex) {
  return t.with_vertex_edited(vertex, [](std::vector<Node>& children) {
    std::swap(children.front(), children.back());
  });
}

VertexLeaves leaves_of(const Node& node) {
  VertexLeaves v;
  const std::size_t last = node.children.size();
  for (std::size_t pos = 1; pos <= last; ++pos) {
    if (!node.children[pos - 1].is_leaf()) continue;
    if (pos == 1) {
      v.has_x = true;
    } else if (pos == last) {
      v.has_y = true;
    } else {
      ++v.z;
    }
  }
  return v;
}

PrunedNode prune_node(const Node& node, std::map<int, VertexType>& types, int& zleaf) {
  const VertexLeaves leaves = leaves_of(node);
  PrunedNode out;
  out.label = node.label;
  if (leaves.has_x && leaves.has_y) {
    out.type = VertexType::XYLabel;
  } else if (leaves.has_x) {
    out.type = VertexType::XLabel;
  } else if (leaves.has_y) {
    out.type = VertexType::YLabel;
  } else {
    out.type = VertexType::Full;
  }
  types[node.label] = out.type;
  const std::size_t last = node.children.size();
  for (std::size_t pos = 1; pos <= last; ++pos) {
    const Node& child = node.children[pos - 1];
    if (child.is_leaf()) {
      if (pos == 1 || pos == last) continue;
      ++zleaf;
      out.children.emplace_back();
    } else {
      out.children.push_back(prune_node(child, types, zleaf));
    }
  }
  return out;
}

void format_pruned(const PrunedNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += '*';
    return;
  }
  out += '(';
  out += std::to_string(node.label);
  switch (node.type) {
    case VertexType::XYLabel: out += ":u"; break;
    case VertexType::XLabel: out += ":v"; break;
    case VertexType::YLabel: out += ":y"; break;
    case VertexType::Full: break;
  }
  for (const auto& c : node.children) {
    out += ' ';
    format_pruned(c, out);
  }
  out += ')';
}

}  // namespace

std::string to_string(LeafBalance b) {
  switch (b) {
    case LeafBalance::NoXYLeaf: return "no-xy-leaf";
    case LeafBalance::BalancedPair: return "balanced-pair";
    case LeafBalance::UnbalancedX: return "unbalanced-x";
    case LeafBalance::UnbalancedY: return "unbalanced-y";
  }
  return "?";
}

BalanceReport balance_report(const GesselTree& t) {
  BalanceReport report;
  for (const auto& [label, leaves] : leaf_census(t).per_vertex) {
    const LeafBalance b = classify(leaves);
    report.status[label] = b;
    switch (b) {
      case LeafBalance::BalancedPair:
        ++report.bxleaf;
        ++report.byleaf;
        break;
      case LeafBalance::UnbalancedX: ++report.uxleaf; break;
      case LeafBalance::UnbalancedY: ++report.uyleaf; break;
      case LeafBalance::NoXYLeaf: break;
    }
  }
  return report;
}

GesselTree psi(const GesselTree& t, int vertex) {
  if (classify(leaves_of(t.vertex(vertex))) != LeafBalance::UnbalancedY) return t;
  return swap_ends(t, vertex);
}

GesselTree toggle(const GesselTree& t, int vertex) {
  const LeafBalance b = classify(leaves_of(t.vertex(vertex)));
  if (b != LeafBalance::UnbalancedX && b != LeafBalance::UnbalancedY) return t;
  return swap_ends(t, vertex);
}

bool is_canonical(const GesselTree& t) { return balance_report(t).uyleaf == 0; }

GesselTree canonical_representative(const GesselTree& t) {
  GesselTree out = t;
  for (const auto& [label, b] : balance_report(t).status) {
    if (b == LeafBalance::UnbalancedY) out = psi(out, label);
  }
  return out;
}

std::vector<GesselTree> orbit(const GesselTree& t) {
  std::map<std::string, GesselTree> seen;
  std::vector<GesselTree> frontier{t};
  seen.emplace(t.to_string(), t);
  while (!frontier.empty()) {
    std::vector<GesselTree> next;
    for (const auto& tree : frontier) {
      for (int v = 1; v <= tree.multiset().n(); ++v) {
        GesselTree moved = toggle(tree, v);
        auto key = moved.to_string();
        if (seen.contains(key)) continue;
        seen.emplace(std::move(key), moved);
        next.push_back(std::move(moved));
      }
    }
    frontier = std::move(next);
  }
  std::vector<GesselTree> out;
  out.reserve(seen.size());
  for (auto& [key, tree] : seen) out.push_back(std::move(tree));
  return out;
}

std::vector<GesselTree> enumerate_canonical(const Multiset& m) {
  std::vector<GesselTree> out;
  for (const auto& s : enumerate_stirling(m)) {
    GesselTree t = gessel_forward(s);
    if (is_canonical(t)) out.push_back(std::move(t));
  }
  return out;
}

bool is_canonical_ternary(const GesselTree& t) {
  const Multiset& m = t.multiset();
  if (m.empty() || !m.is_uniform(2)) {
    throw DomainError("canonical ternary trees are defined on [n]_2 only, got {" + m.to_string() + "}");
  }
  for (const auto& [label, leaves] : leaf_census(t).per_vertex) {
    if (leaves.z > 0 && !leaves.has_x) return false;
  }
  return true;
}

int xz_vertex_count(const GesselTree& t) {
  int count = 0;
  for (const auto& [label, leaves] : leaf_census(t).per_vertex) {
    if (leaves.has_x && leaves.z > 0) ++count;
  }
  return count;
}

int PrunedTree::first_type2_vertex() const {
  for (const auto& [label, type] : types_) {
    if (type == VertexType::YLabel) return label;
  }
  return 0;
}

std::pair<int, int> PrunedTree::weight() const {
  if (const int bad = first_type2_vertex(); bad != 0) {
    throw DomainError("vertex " + std::to_string(bad) +
                      " is Type 2 (y-leaf without x-leaf); (u,v)-weights need a canonical tree");
  }
  int u = 0;
  int v = 0;
  for (const auto& [label, type] : types_) {
    if (type == VertexType::XYLabel) ++u;
    if (type == VertexType::XLabel) ++v;
  }
  return {u, v};
}

Poly3 PrunedTree::weighted_monomial() const {
  const auto [u, v] = weight();
  return Poly3::monomial({u, v, zleaf_}, 1, Variables::UVZ);
}

std::string PrunedTree::to_string() const {
  std::string out;
  format_pruned(root_, out);
  return out;
}

PrunedTree prune(const GesselTree& t) {
  if (t.root().is_leaf()) throw DomainError("the one-leaf tree has no vertices to prune");
  PrunedTree out;
  out.root_ = prune_node(t.root(), out.types_, out.zleaf_);
  return out;
}

}  // namespace gessel
