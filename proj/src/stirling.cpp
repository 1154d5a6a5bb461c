#include "gessel/stirling.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace gessel {

Word parse_word(std::string_view text) {
  Word word;
  const bool has_separator = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!has_separator) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("invalid character '" + std::string(1, c) + "' in word");
      }
      word.push_back(c - '0');
    }
    return word;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != ',' && text[end] != '\t') ++end;
    const auto token = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid value token '" + std::string(token) + "'");
    }
    word.push_back(value);
    pos = end;
  }
  return word;
}

std::string format_word(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

bool is_stirling(std::span<const int> word, const Multiset& m) {
  if (static_cast<int>(word.size()) != m.total()) return false;
  std::vector<int> seen(static_cast<std::size_t>(m.n()) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > m.n()) return false;
    ++seen[v];
  }
  for (int v = 1; v <= m.n(); ++v) {
    if (seen[v] != m.mult(v)) return false;
  }
  // Scanning left to right, a value may only reappear while every value
  // written since its previous occurrence is at least as large.
  std::vector<int> last(seen.size(), -1);
  for (int pos = 0; pos < static_cast<int>(word.size()); ++pos) {
    const int v = word[pos];
    if (last[v] >= 0) {
      for (int k = last[v] + 1; k < pos; ++k) {
        if (word[k] < v) return false;
      }
    }
    last[v] = pos;
  }
  return true;
}

StirlingPermutation StirlingPermutation::from_word(Word word, const Multiset& m) {
  if (!is_stirling(word, m)) {
    throw DomainError("'" + format_word(word) + "' is not a Stirling permutation on {" + m.to_string() + "}");
  }
  return StirlingPermutation(std::move(word), m);
}

StirlingPermutation StirlingPermutation::from_word(Word word) {
  int n = 0;
  for (int v : word) {
    if (v < 1) throw DomainError("word values must be positive");
    n = std::max(n, v);
  }
  std::vector<int> mults(static_cast<std::size_t>(n), 0);
  for (int v : word) ++mults[v - 1];
  for (int v = 1; v <= n; ++v) {
    if (mults[v - 1] == 0) throw DomainError("value " + std::to_string(v) + " is missing from the word");
  }
  return from_word(std::move(word), Multiset(std::move(mults)));
}

std::vector<StirlingPermutation> enumerate_stirling(const Multiset& m) {
  // The largest value's copies are consecutive, so Q_M is obtained by
  // inserting the block n^{k_n} into every gap of every word of Q_{M'}.
  std::vector<Word> words{Word{}};
  for (int v = 1; v <= m.n(); ++v) {
    const int k = m.mult(v);
    std::vector<Word> next;
    next.reserve(words.size() * (words.front().size() + 1));
    for (const auto& w : words) {
      for (std::size_t gap = 0; gap <= w.size(); ++gap) {
        Word grown;
        grown.reserve(w.size() + k);
        grown.insert(grown.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(gap));
        grown.insert(grown.end(), static_cast<std::size_t>(k), v);
        grown.insert(grown.end(), w.begin() + static_cast<std::ptrdiff_t>(gap), w.end());
        next.push_back(std::move(grown));
      }
    }
    words = std::move(next);
  }
  std::sort(words.begin(), words.end());
  std::vector<StirlingPermutation> out;
  out.reserve(words.size());
  for (auto& w : words) out.push_back(StirlingPermutation(std::move(w), m));
  return out;
}

BigInt count_stirling(const Multiset& m) {
  BigInt count = 1;
  int prefix = 0;
  for (int v = 1; v <= m.n(); ++v) {
    if (v >= 2) count *= 1 + prefix;
    prefix += m.mult(v);
  }
  return count;
}

StatProfile statistics(const StirlingPermutation& s) {
  StatProfile p;
  const int len = s.size();
  if (len == 0) return p;

  std::vector<int> first(static_cast<std::size_t>(s.multiset().n()) + 1, 0);
  std::vector<int> seen(first.size(), 0);
  std::vector<int> occurrence(static_cast<std::size_t>(len) + 1, 0);
  for (int i = 1; i <= len; ++i) {
    const int v = s.at(i);
    if (first[v] == 0) first[v] = i;
    occurrence[i] = ++seen[v];
  }

  auto is_descent = [&](int i) { return i >= 1 && i <= len && s.at(i) > s.at(i + 1); };

  for (int i = 1; i <= len; ++i) {
    const int prev = s.at(i - 1);
    const int cur = s.at(i);
    const int next = s.at(i + 1);
    if (prev < cur) p.ascent_positions.push_back(i);
    if (cur > next) {
      p.descent_positions.push_back(i);
      if (is_descent(first[cur] - 1)) p.dfall_positions.push_back(i);
    }
    if (cur == next) {
      p.plateau_positions.push_back(i);
      ++p.plat_by_j[occurrence[i + 1]];
      if (prev < cur) p.aplat_positions.push_back(i);
      if (prev > cur) p.dplat_positions.push_back(i);
    }
  }
  p.asc = static_cast<int>(p.ascent_positions.size());
  p.des = static_cast<int>(p.descent_positions.size());
  p.plat = static_cast<int>(p.plateau_positions.size());
  p.dfall = static_cast<int>(p.dfall_positions.size());
  p.aplat = static_cast<int>(p.aplat_positions.size());
  p.dplat = static_cast<int>(p.dplat_positions.size());
  return p;
}

Occurrences occurrences(const StirlingPermutation& s, int value) {
  Occurrences o;
  for (int i = 1; i <= s.size(); ++i) {
    if (s.at(i) == value) {
      if (o.first == 0) o.first = i;
      o.last = i;
    }
  }
  if (o.first == 0) throw DomainError("value " + std::to_string(value) + " does not occur in the word");
  return o;
}

}  // namespace gessel
