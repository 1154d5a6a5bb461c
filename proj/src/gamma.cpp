#include "gessel/gamma.hpp"

#include "gessel/action.hpp"
#include "gessel/stirling.hpp"
#include "gessel/tree.hpp"

#include <array>

namespace gessel {

namespace {

std::string kind_name(GammaError::Kind kind) {
  switch (kind) {
    case GammaError::Kind::Asymmetric: return "polynomial is not symmetric in x and y";
    case GammaError::Kind::NonHomogeneous: return "z-slice is not homogeneous in x and y";
    case GammaError::Kind::NonPositive: return "non-positive gamma coefficient";
    case GammaError::Kind::Residue: return "nonzero residue past the last basis element";
  }
  return "gamma error";
}

// Coefficients c_j of one z-slice in the basis (xy)^j (x+y)^{degree-2j}.
std::map<int, BigInt> peel_slice(Poly3 slice, int i, int degree, bool allow_negative) {
  for (const auto& [e, c] : slice.terms()) {
    if (e[0] + e[1] != degree) throw GammaError(GammaError::Kind::NonHomogeneous, i, e[0], c);
  }
  const Poly3 xy = Poly3::monomial({1, 1, 0});
  const Poly3 x_plus_y = Poly3::monomial({1, 0, 0}) + Poly3::monomial({0, 1, 0});
  std::map<int, BigInt> out;
  while (!slice.is_zero()) {
    // Lexicographic term order puts the smallest x-exponent first.
    const int j = slice.terms().begin()->first[0];
    if (degree - 2 * j < 0) throw GammaError(GammaError::Kind::Residue, i, j, slice.terms().begin()->second);
    const BigInt g = slice.coefficient({j, degree - j, 0});
    if (g == 0) throw GammaError(GammaError::Kind::Asymmetric, i, j, slice.terms().begin()->second);
    if (g < 0 && !allow_negative) throw GammaError(GammaError::Kind::NonPositive, i, j, g);
    slice -= xy.pow(j) * x_plus_y.pow(degree - 2 * j) * g;
    out.emplace(j, g);
  }
  return out;
}

void require_xy_symmetric(const Poly3& p) {
  for (const auto& [e, c] : p.terms()) {
    if (p.coefficient({e[1], e[0], e[2]}) != c) throw GammaError(GammaError::Kind::Asymmetric, e[2], e[0], c);
  }
}

}  // namespace

BigInt GammaTable::at(int i, int j) const {
  const auto it = entries.find({i, j});
  return it == entries.end() ? BigInt(0) : it->second;
}

void GammaTable::add(int i, int j, const BigInt& count) {
  auto& slot = entries[{i, j}];
  slot += count;
  if (slot == 0) entries.erase({i, j});
}

GammaError::GammaError(Kind kind, int i, int j, BigInt value)
    : Error(kind_name(kind) + " at (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
            ", value=" + value.str() + ")"),
      kind_(kind),
      i_(i),
      j_(j),
      value_(std::move(value)) {}

Poly3 c_polynomial_enum(const Multiset& m) {
  if (m.empty()) return Poly3::monomial({1, 0, 0});
  Poly3 out;
  for (const auto& s : enumerate_stirling(m)) {
    const auto st = statistics(s);
    out.add_term({st.asc, st.des, st.plat}, 1);
  }
  return out;
}

GammaTable gamma_extract(const Poly3& p, int K) {
  if (p.vars() != Variables::XYZ) throw DomainError("gamma_extract expects an (x,y,z) polynomial");
  require_xy_symmetric(p);
  std::map<int, bool> z_degrees;
  for (const auto& [e, c] : p.terms()) z_degrees[e[2]] = true;
  GammaTable g;
  g.K = K;
  for (const auto& [i, unused] : z_degrees) {
    for (auto& [j, c] : peel_slice(p.z_slice(i), i, K + 1 - i, false)) g.entries[{i, j}] = std::move(c);
  }
  return g;
}

Poly3 gamma_reconstruct(const GammaTable& g) {
  const Poly3 xy = Poly3::monomial({1, 1, 0});
  const Poly3 x_plus_y = Poly3::monomial({1, 0, 0}) + Poly3::monomial({0, 1, 0});
  Poly3 out;
  for (const auto& [ij, c] : g.entries) {
    const auto [i, j] = ij;
    const int rest = g.K + 1 - i - 2 * j;
    if (rest < 0 || j < 0 || i < 0) {
      throw DomainError("gamma entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for K=" +
                        std::to_string(g.K));
    }
    out += xy.pow(j) * x_plus_y.pow(rest) * Poly3::monomial({0, 0, i}, c);
  }
  return out;
}

Poly3 gamma_to_uvz(const GammaTable& g) {
  Poly3 out(Variables::UVZ);
  for (const auto& [ij, c] : g.entries) {
    const auto [i, j] = ij;
    const int rest = g.K + 1 - i - 2 * j;
    if (rest < 0) throw DomainError("gamma entry out of range");
    out.add_term({j, rest, i}, c);
  }
  return out;
}

GammaTable gamma_from_uvz(const Poly3& p, int K) {
  if (p.vars() != Variables::UVZ) throw DomainError("gamma_from_uvz expects a (u,v,z) polynomial");
  GammaTable g;
  g.K = K;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] != K + 1 - e[2] - 2 * e[0]) {
      throw DomainError("term u^" + std::to_string(e[0]) + " v^" + std::to_string(e[1]) + " z^" +
                        std::to_string(e[2]) + " has the wrong degree for K=" + std::to_string(K));
    }
    g.entries[{e[2], e[0]}] = c;
  }
  return g;
}

GammaTable gamma_count_trees(const Multiset& m) {
  GammaTable g;
  g.K = m.total();
  for (const auto& t : enumerate_canonical(m)) {
    const auto census = leaf_census(t);
    g.add(census.zleaf, census.yleaf);
  }
  return g;
}

GammaTable gamma_count_perms(const Multiset& m) {
  GammaTable g;
  g.K = m.total();
  for (const auto& s : enumerate_stirling(m)) {
    const auto st = statistics(s);
    if (st.dfall == 0) g.add(st.plat, st.des);
  }
  return g;
}

GammaTable gamma_count_mma(int n) {
  const Multiset m = Multiset::uniform(n, 2);
  GammaTable g;
  g.K = m.total();
  for (const auto& s : enumerate_stirling(m)) {
    const auto st = statistics(s);
    if (st.dplat == 0) g.add(st.des, st.aplat);
  }
  return g;
}

GammaTable gamma_count_ternary(int n) {
  if (n < 1) throw DomainError("gamma_count_ternary needs n >= 1");
  const Multiset m = Multiset::uniform(n, 2);
  GammaTable g;
  g.K = m.total();
  for (const auto& s : enumerate_stirling(m)) {
    const GesselTree t = gessel_forward(s);
    if (is_canonical_ternary(t)) g.add(leaf_census(t).yleaf, xz_vertex_count(t));
  }
  return g;
}

Poly3 change_of_variables(const Poly3& p, bool allow_negative) {
  if (p.vars() != Variables::XYZ) throw DomainError("change_of_variables expects an (x,y,z) polynomial");
  require_xy_symmetric(p);
  std::map<int, int> slice_degree;
  for (const auto& [e, c] : p.terms()) slice_degree.try_emplace(e[2], e[0] + e[1]);
  Poly3 out(Variables::UVZ);
  for (const auto& [i, degree] : slice_degree) {
    for (const auto& [j, c] : peel_slice(p.z_slice(i), i, degree, allow_negative)) {
      out.add_term({j, degree - 2 * j, i}, c);
    }
  }
  return out;
}

}  // namespace gessel
