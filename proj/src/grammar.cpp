#include "gessel/grammar.hpp"

namespace gessel {

GrammarRuleSet GrammarRuleSet::xyz(int k) {
  if (k < 1) throw DomainError("grammar index k must be at least 1");
  const Poly3 image = Poly3::monomial({1, 1, k - 1});
  return {Variables::XYZ, {image, image, image}};
}

GrammarRuleSet GrammarRuleSet::uvz(int k) {
  if (k < 1) throw DomainError("grammar index k must be at least 1");
  return {Variables::UVZ,
          {Poly3::monomial({1, 1, k - 1}, 1, Variables::UVZ), Poly3::monomial({1, 0, k - 1}, 2, Variables::UVZ),
           Poly3::monomial({1, 0, k - 1}, 1, Variables::UVZ)}};
}

Poly3 derive(const Poly3& p, const GrammarRuleSet& rules) {
  if (p.vars() != rules.vars) throw DomainError("polynomial and grammar use different variables");
  Poly3 out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    for (int var = 0; var < 3; ++var) {
      if (e[var] == 0) continue;
      Exponents lowered = e;
      --lowered[var];
      out += Poly3::monomial(lowered, c * e[var], p.vars()) * rules.rules[var];
    }
  }
  return out;
}

Poly3 c_polynomial_grammar(const Multiset& m) {
  Poly3 p = Poly3::monomial({1, 0, 0});
  for (int k : m.mults()) p = derive(p, GrammarRuleSet::xyz(k));
  return p;
}

Poly3 uvz_seed(int k) {
  if (k < 1) throw DomainError("grammar index k must be at least 1");
  return Poly3::monomial({1, 0, k - 1}, 1, Variables::UVZ);
}

Poly3 gamma_polynomial_grammar(const Multiset& m) {
  if (m.empty()) throw DomainError("the gamma polynomial needs a nonempty multiset");
  Poly3 p = uvz_seed(m.mult(1));
  for (int v = 2; v <= m.n(); ++v) p = derive(p, GrammarRuleSet::uvz(m.mult(v)));
  return p;
}

}  // namespace gessel
