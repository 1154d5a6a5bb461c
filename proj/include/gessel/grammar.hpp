#pragma once

#include "gessel/multiset.hpp"
#include "gessel/poly.hpp"

#include <array>

namespace gessel {

/// Substitution rules of a context-free grammar over three variables.
/// rules[k] is the image of variable k.
struct GrammarRuleSet {
  Variables vars = Variables::XYZ;
  std::array<Poly3, 3> rules;

  /// x, y, z -> x y z^{k-1}.
  static GrammarRuleSet xyz(int k);
  /// u -> u v z^{k-1}, v -> 2 u z^{k-1}, z -> u z^{k-1}.
  static GrammarRuleSet uvz(int k);
};

/// Formal derivative: linear over terms, Leibniz over variable occurrences.
/// Throws DomainError if the signatures differ.
Poly3 derive(const Poly3& p, const GrammarRuleSet& rules);

/// D_{k_n} ... D_{k_1}(x), applying D_{k_1} first.
Poly3 c_polynomial_grammar(const Multiset& m);

/// The same derivation carried out in u = xy, v = x + y. The start symbol x
/// has no (u,v,z) rule, so the first step maps x to u z^{k_1 - 1}, the
/// image of x y z^{k_1 - 1}. Throws DomainError on the empty multiset.
Poly3 gamma_polynomial_grammar(const Multiset& m);

/// First derivation step in (u,v,z) from the start symbol x.
Poly3 uvz_seed(int k);

}  // namespace gessel
