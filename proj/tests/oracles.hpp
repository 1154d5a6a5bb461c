// Brute-force reference implementations used by the tests. Nothing here calls
// into the library, so agreement with it is an independent check.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Poly = std::map<std::array<int, 3>, std::int64_t>;

// Everything strictly between two equal letters is at least that letter.
inline bool is_stirling(const Word& w) {
  const int len = static_cast<int>(w.size());
  for (int a = 0; a < len; ++a) {
    for (int c = a + 1; c < len; ++c) {
      if (w[a] != w[c]) continue;
      for (int b = a + 1; b < c; ++b) {
        if (w[b] < w[a]) return false;
      }
    }
  }
  return true;
}

// All arrangements of the multiset filtered by the Stirling condition,
// in lexicographic order.
inline std::vector<Word> stirling_words(const std::vector<int>& mults) {
  Word w;
  for (int v = 1; v <= static_cast<int>(mults.size()); ++v) w.insert(w.end(), mults[v - 1], v);
  std::vector<Word> out;
  do {
    if (is_stirling(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct Stats {
  int asc = 0, des = 0, plat = 0, dfall = 0, aplat = 0, dplat = 0;
  std::map<int, int> plat_by_j;
  std::vector<int> dfall_positions;
};

// Direct scan of 0 w_1 ... w_K 0.
inline Stats stats(const Word& w) {
  const int len = static_cast<int>(w.size());
  auto at = [&](int i) { return (i < 1 || i > len) ? 0 : w[i - 1]; };
  auto is_descent = [&](int i) { return at(i) > at(i + 1); };
  Stats s;
  for (int i = 0; i <= len; ++i) {
    if (at(i) < at(i + 1)) ++s.asc;
    if (at(i) > at(i + 1)) ++s.des;
    if (i >= 1 && at(i) == at(i + 1)) {
      ++s.plat;
      int occurrence = 0;
      for (int p = 1; p <= i + 1; ++p) occurrence += at(p) == at(i + 1);
      ++s.plat_by_j[occurrence];
      if (at(i - 1) < at(i)) ++s.aplat;
      if (at(i - 1) > at(i)) ++s.dplat;
    }
    if (i >= 1 && is_descent(i)) {
      int first = 1;
      while (at(first) != at(i)) ++first;
      if (first - 1 >= 1 && is_descent(first - 1)) {
        ++s.dfall;
        s.dfall_positions.push_back(i);
      }
    }
  }
  return s;
}

// sum x^asc y^des z^plat by enumeration.
inline Poly c_polynomial(const std::vector<int>& mults) {
  Poly p;
  for (const auto& w : stirling_words(mults)) {
    const auto s = stats(w);
    ++p[{s.asc, s.des, s.plat}];
  }
  return p;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sum g_{ij} z^i (xy)^j (x+y)^{K+1-i-2j}, expanded with binomials.
inline Poly expand_gamma(int K, const std::map<std::pair<int, int>, std::int64_t>& g) {
  Poly p;
  for (const auto& [ij, c] : g) {
    const auto [i, j] = ij;
    const int m = K + 1 - i - 2 * j;
    for (int a = 0; a <= m; ++a) p[{j + a, j + m - a, i}] += c * binomial(m, a);
  }
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
  return p;
}

inline std::uint64_t double_factorial(int n) {
  std::uint64_t r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

// Eulerian numbers: permutations of [n] with k descents (no sentinels).
inline std::int64_t eulerian(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 0 || k >= n) return 0;
  return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1);
}

// Second-order Eulerian numbers: Stirling permutations of [n]_2 with k
// descents (no sentinels).
inline std::int64_t second_order_eulerian(int n, int k) {
  if (n == 0) return k == 0 ? 1 : 0;
  if (k < 0 || k >= n) return 0;
  return (k + 1) * second_order_eulerian(n - 1, k) + (2 * n - 1 - k) * second_order_eulerian(n - 1, k - 1);
}

// Every multiplicity vector with n <= max_n, k_i <= max_k, sum <= max_K.
inline std::vector<std::vector<int>> bounded_family(int max_n, int max_k, int max_K) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int total) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_n) return;
    for (int k = 1; k <= max_k && total + k <= max_K; ++k) {
      cur.push_back(k);
      self(self, total + k);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Random Stirling permutation: insert each value's block of copies into a
// uniformly chosen gap, smallest value first.
inline Word random_stirling(const std::vector<int>& mults, std::mt19937& rng) {
  Word w;
  for (int v = 1; v <= static_cast<int>(mults.size()); ++v) {
    std::uniform_int_distribution<std::size_t> gap(0, w.size());
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(gap(rng)), mults[v - 1], v);
  }
  return w;
}

inline std::vector<int> random_mults(std::mt19937& rng, int max_n, int max_k) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  std::uniform_int_distribution<int> k_dist(1, max_k);
  std::vector<int> m(n_dist(rng));
  for (auto& k : m) k = k_dist(rng);
  return m;
}

}  // namespace oracle
