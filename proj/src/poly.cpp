#include "gessel/poly.hpp"

#include <algorithm>
#include <vector>

namespace gessel {

std::array<std::string, 3> variable_names(Variables vars) {
  if (vars == Variables::UVZ) return {"u", "v", "z"};
  return {"x", "y", "z"};
}

Poly3 Poly3::monomial(Exponents e, BigInt coeff, Variables vars) {
  Poly3 p(vars);
  p.add_term(e, coeff);
  return p;
}

Poly3 Poly3::variable(int index, Variables vars) {
  Exponents e{0, 0, 0};
  e.at(static_cast<std::size_t>(index)) = 1;
  return monomial(e, 1, vars);
}

BigInt Poly3::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly3::add_term(const Exponents& e, const BigInt& coeff) {
  if (coeff == 0) return;
  for (int x : e) {
    if (x < 0) throw DomainError("negative exponent in polynomial term");
  }
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly3::require_same_vars(const Poly3& other) const {
  if (vars_ != other.vars_) throw DomainError("polynomial variable signatures differ");
}

Poly3& Poly3::operator+=(const Poly3& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& other) {
  require_same_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  a.require_same_vars(b);
  Poly3 out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

Poly3 Poly3::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Poly3 result = monomial({0, 0, 0}, 1, vars_);
  Poly3 base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly3 Poly3::z_slice(int i) const {
  Poly3 out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[2] == i) out.add_term({e[0], e[1], 0}, c);
  }
  return out;
}

Poly3 Poly3::permuted(const std::array<int, 3>& perm) const {
  Poly3 out(vars_);
  for (const auto& [e, c] : terms_) out.add_term({e[perm[0]], e[perm[1]], e[perm[2]]}, c);
  return out;
}

Poly3 Poly3::at_z_one() const {
  Poly3 out(vars_);
  for (const auto& [e, c] : terms_) out.add_term({e[0], e[1], 0}, c);
  return out;
}

Poly3 Poly3::relabeled(Variables vars) const {
  Poly3 out = *this;
  out.vars_ = vars;
  return out;
}

std::string Poly3::to_string() const {
  if (terms_.empty()) return "0";
  const auto names = variable_names(vars_);
  std::string out;
  // Highest exponents first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigInt mag = c;
    if (c < 0) {
      out += out.empty() ? "-" : " - ";
      mag = -c;
    } else if (!out.empty()) {
      out += " + ";
    }
    std::string mono;
    for (int k = 0; k < 3; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[k];
      if (e[k] > 1) mono += '^' + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + '*' + mono;
    }
  }
  return out;
}

Poly3 substitute_uv(const Poly3& p) {
  if (p.vars() != Variables::UVZ) throw DomainError("substitute_uv expects a (u,v,z) polynomial");
  const Poly3 u = Poly3::monomial({1, 1, 0});
  const Poly3 v = Poly3::monomial({1, 0, 0}) + Poly3::monomial({0, 1, 0});
  Poly3 out;
  for (const auto& [e, c] : p.terms()) {
    out += u.pow(e[0]) * v.pow(e[1]) * Poly3::monomial({0, 0, e[2]}, c);
  }
  return out;
}

bool is_symmetric(const Poly3& p, std::span<const int> var_indices) {
  std::vector<int> idx(var_indices.begin(), var_indices.end());
  std::sort(idx.begin(), idx.end());
  // Adjacent transpositions of the chosen variables generate their full
  // symmetric group.
  for (std::size_t a = 0; a + 1 < idx.size(); ++a) {
    std::array<int, 3> perm{0, 1, 2};
    std::swap(perm[idx[a]], perm[idx[a + 1]]);
    if (!(p.permuted(perm) == p)) return false;
  }
  return true;
}

}  // namespace gessel
