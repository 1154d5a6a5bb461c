#pragma once

#include "gessel/common.hpp"

#include <array>
#include <map>
#include <span>
#include <string>
#include <string_view>

namespace gessel {

/// Variable signature of a Poly3. Metadata only: arithmetic requires matching
/// signatures but never interprets them.
enum class Variables { XYZ, UVZ };

std::array<std::string, 3> variable_names(Variables vars);

using Exponents = std::array<int, 3>;

/// Sparse trivariate polynomial with exact integer coefficients. Terms are kept
/// in lexicographic exponent order and zero coefficients are never stored.
class Poly3 {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  explicit Poly3(Variables vars = Variables::XYZ) : vars_(vars) {}

  static Poly3 monomial(Exponents e, BigInt coeff = 1, Variables vars = Variables::XYZ);
  /// x, y, z (or u, v, z) as polynomials, index 0..2.
  static Poly3 variable(int index, Variables vars = Variables::XYZ);

  Variables vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const BigInt& coeff);

  Poly3& operator+=(const Poly3& other);
  Poly3& operator-=(const Poly3& other);
  Poly3& operator*=(const BigInt& scalar);

  friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
  friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(Poly3 a, const BigInt& s) { return a *= s; }

  /// Integer power of this polynomial.
  Poly3 pow(int exponent) const;

  /// Coefficient of z^i as a polynomial (z-exponent zeroed out).
  Poly3 z_slice(int i) const;

  /// Every term's exponents permuted: result exponent[k] = e[perm[k]].
  Poly3 permuted(const std::array<int, 3>& perm) const;

  /// Substitutes 1 for the third variable.
  Poly3 at_z_one() const;

  /// Same terms under another signature.
  Poly3 relabeled(Variables vars) const;

  /// Human-readable form such as "x^2*y + 3*x*y^2"; "0" for zero.
  std::string to_string() const;

  friend bool operator==(const Poly3& a, const Poly3& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

 private:
  void require_same_vars(const Poly3& other) const;

  Variables vars_;
  TermMap terms_;
};

/// Expands a (u,v,z) polynomial under u = xy, v = x + y.
Poly3 substitute_uv(const Poly3& p);

/// Invariance under every permutation of the exponents of the listed
/// variable indices (0, 1, 2).
bool is_symmetric(const Poly3& p, std::span<const int> var_indices);

}  // namespace gessel
