#pragma once

#include "gessel/io.hpp"
#include "gessel/multiset.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gessel {

/// Identity checks run by the harness; names match the CLI ids.
enum class CheckId {
  Bijection,          // P2.1
  OccurrenceFlags,    // P2.2
  CanonicalTrees,     // T3.1
  GrammarC,           // T4.1
  PrunedWeights,      // T4.3
  GrammarGamma,       // T4.4
  DoubleFallGamma,    // T5.2
  DoubleFallLeaves,   // P5.1
  DescentPlateaux,    // T6.1
  TernaryTrees,       // T6.2
  TernaryCharacter,   // P6.3
  SymmetryXY,         // SYM-XY
  SymmetryXYZ,        // SYM-XYZ
  Orbits,             // ORBIT
  RoundTrip,          // ROUNDTRIP
  PlateauLeaves       // JKP-ZJ
};

std::string_view check_name(CheckId id);

/// Throws DomainError on an unknown id.
CheckId parse_check_id(std::string_view name);

const std::vector<CheckId>& all_checks();

/// A finite family of multisets: every multiplicity vector within the bounds
/// (1 <= n <= max_n, 1 <= k_i <= max_k, K <= max_K), plus an explicit list.
struct FamilySpec {
  std::optional<int> max_n;
  std::optional<int> max_k;
  std::optional<int> max_K;
  std::vector<Multiset> list;

  static FamilySpec bounded(int max_n, int max_k, int max_K);
  static FamilySpec of(std::vector<Multiset> list);

  /// Bounds (4, 3, 10) plus [n]_2 for n <= 6 and [n] for n <= 7; with
  /// `with_7_2` also [7]_2.
  static FamilySpec default_campaign(bool with_7_2 = false);
};

/// Deduplicated and in lexicographic order of multiplicity vectors.
std::vector<Multiset> generate_family(const FamilySpec& spec);

/// Sum of |Q_M| over the family.
BigInt family_cost(const std::vector<Multiset>& family);

enum class Verdict { Pass, Fail, Skip };

std::string_view verdict_name(Verdict v);

struct MultisetResult {
  Multiset multiset;
  Verdict verdict = Verdict::Pass;
  std::uint64_t items = 0;
  /// Present on FAIL: the multiset, the permutation and/or tree, and both
  /// sides of the failed equality.
  json counterexample;
  /// Check-specific deterministic diagnostics.
  json notes;
};

struct CheckReport {
  CheckId id;
  std::vector<MultisetResult> results;
  Verdict verdict = Verdict::Pass;
  double elapsed_ms = 0;
};

struct VerifyOptions {
  int jobs = 1;
  BigInt cost_cap = 1'000'000;
};

class FamilyTooLarge : public DomainError {
 public:
  FamilyTooLarge(BigInt cost, BigInt cap);
  const BigInt& cost() const { return cost_; }

 private:
  BigInt cost_;
};

/// Runs one check on one multiset.
MultisetResult check_multiset(CheckId id, const Multiset& m);

/// Runs a check over every multiset of the family, optionally on several
/// worker threads; results are always in family order. Throws
/// FamilyTooLarge before doing any work when the cost exceeds the cap.
CheckReport verify(CheckId id, const FamilySpec& family, const VerifyOptions& options = {});

json report_to_json(const CheckReport& report, bool with_timing = true);
std::string report_to_table(const CheckReport& report);

struct GoldenCase {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// Replays the worked examples: the example trees and their permutations,
/// the segment table, the action at vertex 2, canonicity, the pruned weight,
/// the double-fall and descent-plateau examples.
std::vector<GoldenCase> golden_examples();

json golden_to_json(const std::vector<GoldenCase>& cases);

}  // namespace gessel
