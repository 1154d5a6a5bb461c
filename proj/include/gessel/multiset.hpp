#pragma once

#include "gessel/common.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gessel {

/// The multiset {1^k_1, 2^k_2, ..., n^k_n}, stored as its multiplicity vector.
class Multiset {
 public:
  Multiset() = default;

  /// Throws DomainError if any multiplicity is below one.
  explicit Multiset(std::vector<int> mults);

  /// Parses "k1,k2,...,kn"; whitespace around tokens is ignored and the
  /// empty string is the empty multiset.
  static Multiset parse(std::string_view spec);

  /// [n]_k = {1^k, ..., n^k}.
  static Multiset uniform(int n, int k);

  int n() const { return static_cast<int>(mults_.size()); }
  int total() const { return total_; }
  bool empty() const { return mults_.empty(); }

  /// Multiplicity of a 1-based value.
  int mult(int value) const { return mults_[value - 1]; }
  std::span<const int> mults() const { return mults_; }
  int max_mult() const;

  /// True when every multiplicity equals k (vacuously true when empty).
  bool is_uniform(int k) const;

  /// The multiset on the first m values.
  Multiset prefix(int m) const;

  std::string to_string() const;

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.mults_ == b.mults_; }
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    return a.mults_ <=> b.mults_;
  }

 private:
  std::vector<int> mults_;
  int total_ = 0;
};

}  // namespace gessel
