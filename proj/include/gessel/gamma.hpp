#pragma once

#include "gessel/multiset.hpp"
#include "gessel/poly.hpp"

#include <map>
#include <utility>

namespace gessel {

/// Partial gamma-coefficients: entries[(i, j)] is the coefficient of
/// z^i (xy)^j (x+y)^{K+1-i-2j}. i is always the z-exponent and j the
/// (xy)-exponent, whatever statistic pair populated the table.
struct GammaTable {
  int K = 0;
  std::map<std::pair<int, int>, BigInt> entries;

  BigInt at(int i, int j) const;
  void add(int i, int j, const BigInt& count = 1);

  friend bool operator==(const GammaTable&, const GammaTable&) = default;
};

/// Raised when a polynomial has no positive partial gamma-expansion.
class GammaError : public Error {
 public:
  enum class Kind { Asymmetric, NonHomogeneous, NonPositive, Residue };

  GammaError(Kind kind, int i, int j, BigInt value);

  Kind kind() const { return kind_; }
  int i() const { return i_; }
  int j() const { return j_; }
  const BigInt& value() const { return value_; }

 private:
  Kind kind_;
  int i_;
  int j_;
  BigInt value_;
};

/// Sum of x^asc y^des z^plat over the Stirling permutations of m; the empty
/// multiset gives x.
Poly3 c_polynomial_enum(const Multiset& m);

/// Peels each z-slice in the basis (xy)^j (x+y)^{K+1-i-2j}, smallest j first.
GammaTable gamma_extract(const Poly3& p, int K);

Poly3 gamma_reconstruct(const GammaTable& g);

/// sum gamma_{i,j} u^j v^{K+1-i-2j} z^i.
Poly3 gamma_to_uvz(const GammaTable& g);

/// Inverse of gamma_to_uvz; throws DomainError when a term does not have
/// v-degree K+1-i-2j.
GammaTable gamma_from_uvz(const Poly3& p, int K);

/// Canonical Gessel trees on m tabulated by (zleaf, yleaf).
GammaTable gamma_count_trees(const Multiset& m);

/// Permutations with no double fall tabulated by (plat, des).
GammaTable gamma_count_perms(const Multiset& m);

/// Permutations of [n]_2 with no descent-plateau tabulated by (des, aplat).
GammaTable gamma_count_mma(int n);

/// Canonical ternary trees on [n]_2 tabulated by (yleaf, number of vertices
/// with both an x-leaf and a z-leaf).
GammaTable gamma_count_ternary(int n);

/// Rewrites a polynomial symmetric in x, y with homogeneous z-slices in the
/// basis u = xy, v = x + y. In signed mode negative coefficients are kept
/// instead of raising GammaError.
Poly3 change_of_variables(const Poly3& p, bool allow_negative = false);

}  // namespace gessel
