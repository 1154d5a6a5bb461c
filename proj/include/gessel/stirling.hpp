#pragma once

#include "gessel/multiset.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gessel {

using Word = std::vector<int>;

/// Parses a word written as space- or comma-separated decimal values.
/// A single run of digits with no separators ("1221") is read one digit per
/// value, which is convenient for multisets on at most nine values.
Word parse_word(std::string_view text);

/// Space-separated decimal form of a word.
std::string format_word(std::span<const int> word);

/// Exact multiplicities of m plus the Stirling condition: everything strictly
/// between two equal values is at least that value.
bool is_stirling(std::span<const int> word, const Multiset& m);

/// A word on a multiset satisfying the Stirling condition.
class StirlingPermutation {
 public:
  /// Throws DomainError when the word is not a Stirling permutation on m.
  static StirlingPermutation from_word(Word word, const Multiset& m);

  /// Infers the multiset from the value counts; values must cover 1..max.
  static StirlingPermutation from_word(Word word);

  static StirlingPermutation parse(std::string_view text) { return from_word(parse_word(text)); }

  const Word& word() const { return word_; }
  const Multiset& multiset() const { return multiset_; }
  int size() const { return static_cast<int>(word_.size()); }

  /// 1-based access with the sentinel convention: positions 0 and K+1 read 0.
  int at(int position) const {
    return (position < 1 || position > size()) ? 0 : word_[position - 1];
  }

  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const StirlingPermutation& a, const StirlingPermutation& b) {
    return a.word_ == b.word_ && a.multiset_ == b.multiset_;
  }

 private:
  StirlingPermutation(Word word, Multiset m) : word_(std::move(word)), multiset_(std::move(m)) {}
  friend std::vector<StirlingPermutation> enumerate_stirling(const Multiset& m);

  Word word_;
  Multiset multiset_;
};

/// Every Stirling permutation on m, once each, in lexicographic word order.
/// The empty multiset yields the single empty word.
std::vector<StirlingPermutation> enumerate_stirling(const Multiset& m);

/// prod_{i=2..n} (1 + k_1 + ... + k_{i-1}).
BigInt count_stirling(const Multiset& m);

/// Descent/ascent/plateau statistics under the zero-sentinel convention.
/// All positions are 1-based indices into the word.
struct StatProfile {
  int asc = 0;
  int des = 0;
  int plat = 0;
  /// Plateau at i with word[i+1] the j-th occurrence of its value is keyed j.
  std::map<int, int> plat_by_j;
  int dfall = 0;
  int aplat = 0;
  int dplat = 0;
  std::vector<int> ascent_positions;
  std::vector<int> descent_positions;
  std::vector<int> plateau_positions;
  std::vector<int> dfall_positions;
  std::vector<int> aplat_positions;
  std::vector<int> dplat_positions;
};

StatProfile statistics(const StirlingPermutation& s);

/// Positions (1-based) of the first and last occurrence of value.
struct Occurrences {
  int first = 0;
  int last = 0;
};

/// Throws DomainError if value does not occur.
Occurrences occurrences(const StirlingPermutation& s, int value);

}  // namespace gessel
