#include "gessel/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gessel {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("validation failed: " + join(violations)), violations_(std::move(violations)) {}

Multiset::Multiset(std::vector<int> mults) : mults_(std::move(mults)) {
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (mults_[i] < 1) {
      throw DomainError("multiplicity of value " + std::to_string(i + 1) + " must be positive, got " +
                        std::to_string(mults_[i]));
    }
  }
  total_ = std::accumulate(mults_.begin(), mults_.end(), 0);
}

Multiset Multiset::parse(std::string_view spec) {
  std::vector<int> mults;
  if (trim(spec).empty()) return Multiset{};
  std::size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    const auto token = trim(spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start));
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw ParseError("invalid multiplicity token '" + std::string(token) + "'");
    }
    if (value < 1) {
      throw ParseError("multiplicity must be positive: '" + std::string(token) + "'");
    }
    mults.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Multiset(std::move(mults));
}

Multiset Multiset::uniform(int n, int k) {
  if (n < 0 || k < 1) throw DomainError("uniform multiset needs n >= 0 and k >= 1");
  return Multiset(std::vector<int>(static_cast<std::size_t>(n), k));
}

int Multiset::max_mult() const {
  return mults_.empty() ? 0 : *std::max_element(mults_.begin(), mults_.end());
}

bool Multiset::is_uniform(int k) const {
  return std::all_of(mults_.begin(), mults_.end(), [k](int m) { return m == k; });
}

Multiset Multiset::prefix(int m) const {
  if (m < 0 || m > n()) throw DomainError("prefix length out of range");
  return Multiset(std::vector<int>(mults_.begin(), mults_.begin() + m));
}

std::string Multiset::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(mults_[i]);
  }
  return out;
}

}  // namespace gessel
