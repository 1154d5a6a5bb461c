#include "gessel/harness.hpp"

#include "gessel/action.hpp"
#include "gessel/gamma.hpp"
#include "gessel/grammar.hpp"
#include "gessel/stirling.hpp"
#include "gessel/tree.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace gessel {

namespace {

struct CheckName {
  CheckId id;
  std::string_view name;
};

constexpr std::array<CheckName, 16> kCheckNames{{
    {CheckId::Bijection, "P2.1"},
    {CheckId::OccurrenceFlags, "P2.2"},
    {CheckId::CanonicalTrees, "T3.1"},
    {CheckId::GrammarC, "T4.1"},
    {CheckId::PrunedWeights, "T4.3"},
    {CheckId::GrammarGamma, "T4.4"},
    {CheckId::DoubleFallGamma, "T5.2"},
    {CheckId::DoubleFallLeaves, "P5.1"},
    {CheckId::DescentPlateaux, "T6.1"},
    {CheckId::TernaryTrees, "T6.2"},
    {CheckId::TernaryCharacter, "P6.3"},
    {CheckId::SymmetryXY, "SYM-XY"},
    {CheckId::SymmetryXYZ, "SYM-XYZ"},
    {CheckId::Orbits, "ORBIT"},
    {CheckId::RoundTrip, "ROUNDTRIP"},
    {CheckId::PlateauLeaves, "JKP-ZJ"},
}};

// Collects the first failure of a check; later failures are ignored so the
// payload stays small and deterministic.
class Outcome {
 public:
  explicit Outcome(const Multiset& m) { result_.multiset = m; }

  bool failed() const { return result_.verdict == Verdict::Fail; }

  void item() { ++result_.items; }
  void items(std::uint64_t n) { result_.items += n; }

  void fail(std::string what, json lhs, json rhs, json extra = json::object()) {
    if (failed()) return;
    result_.verdict = Verdict::Fail;
    json ce = std::move(extra);
    ce["multiset"] = result_.multiset.to_string();
    ce["what"] = std::move(what);
    ce["lhs"] = std::move(lhs);
    ce["rhs"] = std::move(rhs);
    result_.counterexample = std::move(ce);
  }

  void expect(bool ok, std::string what, json lhs, json rhs, json extra = json::object()) {
    if (!ok) fail(std::move(what), std::move(lhs), std::move(rhs), std::move(extra));
  }

  void skip(std::string why) {
    result_.verdict = Verdict::Skip;
    result_.notes["skipped"] = std::move(why);
  }

  json& notes() { return result_.notes; }
  MultisetResult take() { return std::move(result_); }

 private:
  MultisetResult result_;
};

json perm_payload(const StirlingPermutation& s) { return {{"perm", s.to_string()}}; }

json tree_payload(const GesselTree& t) { return {{"tree", t.to_string()}}; }

json census_json(const LeafCensus& c) { return json::array({c.xleaf, c.yleaf, c.zleaf}); }

json map_json(const std::map<int, int>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

bool is_uniform_2(const Multiset& m) { return !m.empty() && m.is_uniform(2); }

// Compares two gamma tables and checks the index bounds of the first.
void expect_tables(Outcome& out, const std::string& what, const GammaTable& lhs, const GammaTable& rhs) {
  out.expect(lhs == rhs, what, gamma_to_json(lhs), gamma_to_json(rhs));
}

void expect_gamma_bounds(Outcome& out, const Multiset& m, const GammaTable& g) {
  for (const auto& [ij, c] : g.entries) {
    const auto [i, j] = ij;
    const bool ok = i >= 0 && i <= m.total() - m.n() && j >= 1 && j <= (m.total() + 1 - i) / 2 && c > 0;
    out.expect(ok, "gamma entry outside the index bounds or not positive", json::array({i, j}), c.str());
  }
}

void check_bijection(Outcome& out, const Multiset& m) {
  const auto perms = enumerate_stirling(m);
  out.expect(BigInt(perms.size()) == count_stirling(m), "enumeration length equals the product formula",
             perms.size(), count_stirling(m).str());
  std::unordered_set<std::string> trees;
  for (const auto& s : perms) {
    out.item();
    const GesselTree t = gessel_forward(s);
    const auto st = statistics(s);
    const auto census = leaf_census(t);
    out.expect(st.asc == census.xleaf && st.des == census.yleaf && st.plat == census.zleaf,
               "(asc,des,plat) equals (xleaf,yleaf,zleaf)", json::array({st.asc, st.des, st.plat}),
               census_json(census), {{"perm", s.to_string()}, {"tree", t.to_string()}});
    out.expect(trees.insert(t.to_string()).second, "forward map is injective", t.to_string(), "duplicate",
               perm_payload(s));
  }
}

// Number of windows [r,s] containing a copy of value whose boundary
// conditions sigma_{r-1} < sigma_r and sigma_s > sigma_{s+1} hold.
int raw_segment_windows(const StirlingPermutation& s, int value) {
  const auto occ = occurrences(s, value);
  int count = 0;
  for (int r = 1; r <= occ.last; ++r) {
    if (!(s.at(r - 1) < s.at(r))) continue;
    for (int e = std::max(r, occ.first); e <= s.size(); ++e) {
      if (s.at(e) > s.at(e + 1)) ++count;
    }
  }
  return count;
}

void check_occurrence_flags(Outcome& out, const Multiset& m) {
  int ambiguous = 0;
  for (const auto& s : enumerate_stirling(m)) {
    out.item();
    const GesselTree t = gessel_forward(s);
    const auto census = leaf_census(t);
    for (int v = 1; v <= m.n(); ++v) {
      const auto flags = first_last_occurrence_flags(s, v);
      const auto& leaves = census.per_vertex.at(v);
      json where{{"perm", s.to_string()}, {"tree", t.to_string()}, {"value", v}};
      out.expect(flags.first_is_ascent == leaves.has_x && flags.last_is_descent == leaves.has_y,
                 "(first is ascent, last is descent) equals (has x-leaf, has y-leaf)",
                 json::array({flags.first_is_ascent, flags.last_is_descent}),
                 json::array({leaves.has_x, leaves.has_y}), where);

      const auto range = segment(s, v);
      const Word seg = segment_word(s, v);
      out.expect(seg == subtree_word(t, v), "segment equals the word of the subtree at the value",
                 format_word(seg), format_word(subtree_word(t, v)), where);
      out.expect(s.at(range.first - 1) < s.at(range.first) && s.at(range.last) > s.at(range.last + 1),
                 "segment boundary conditions", json::array({range.first, range.last}), "strict rise and fall",
                 where);
      if (raw_segment_windows(s, v) > 1) ++ambiguous;

      const auto factors = gessel_decomposition(s, v);
      Word rebuilt;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f) rebuilt.push_back(v);
        rebuilt.insert(rebuilt.end(), factors[f].begin(), factors[f].end());
        if (!factors[f].empty()) {
          const int least = *std::min_element(factors[f].begin(), factors[f].end());
          out.expect(factors[f] == segment_word(s, least), "nonempty factor is the segment of its minimum",
                     format_word(factors[f]), format_word(segment_word(s, least)), where);
        }
      }
      out.expect(static_cast<int>(factors.size()) == m.mult(v) + 1 && rebuilt == seg,
                 "decomposition reassembles the segment", format_word(rebuilt), format_word(seg), where);
    }
  }
  out.notes()["raw_ambiguous_segments"] = ambiguous;
}

void check_canonical_trees(Outcome& out, const Multiset& m) {
  const GammaTable extracted = gamma_extract(c_polynomial_enum(m), m.total());
  const GammaTable trees = gamma_count_trees(m);
  const GammaTable perms = gamma_count_perms(m);
  out.items(extracted.entries.size());
  expect_gamma_bounds(out, m, extracted);
  expect_tables(out, "extracted table equals canonical-tree counts", extracted, trees);
  expect_tables(out, "extracted table equals no-double-fall counts", extracted, perms);
}

void check_grammar_c(Outcome& out, const Multiset& m) {
  const Poly3 enumerated = c_polynomial_enum(m);
  const Poly3 derived = c_polynomial_grammar(m);
  out.items(enumerated.size());
  out.expect(enumerated == derived, "grammar derivation equals enumeration", poly_to_json(derived),
             poly_to_json(enumerated));
}

void check_pruned_weights(Outcome& out, const Multiset& m) {
  Poly3 weights(Variables::UVZ);
  for (const auto& t : enumerate_canonical(m)) {
    out.item();
    const PrunedTree p = prune(t);
    weights += p.weighted_monomial();
    out.expect(p.z_degree() == leaf_census(t).zleaf, "pruning keeps every z-leaf", p.z_degree(),
               leaf_census(t).zleaf, tree_payload(t));
  }
  const Poly3 target = gamma_to_uvz(gamma_extract(c_polynomial_enum(m), m.total()));
  out.expect(weights == target, "sum of pruned weights equals the gamma polynomial", poly_to_json(weights),
             poly_to_json(target));
}

void check_grammar_gamma(Outcome& out, const Multiset& m) {
  const Poly3 derived = gamma_polynomial_grammar(m);
  const Poly3 target = gamma_to_uvz(gamma_extract(c_polynomial_enum(m), m.total()));
  out.items(derived.size());
  out.expect(derived == target, "(u,v,z) derivation equals the extracted gamma polynomial", poly_to_json(derived),
             poly_to_json(target));
  const Poly3 back = substitute_uv(derived);
  const Poly3 c = c_polynomial_grammar(m);
  out.expect(back == c, "substituting u=xy, v=x+y recovers the (x,y,z) derivation", poly_to_json(back),
             poly_to_json(c));
}

void check_double_fall_gamma(Outcome& out, const Multiset& m) {
  const GammaTable extracted = gamma_extract(c_polynomial_enum(m), m.total());
  out.items(extracted.entries.size());
  expect_tables(out, "no-double-fall counts equal the extracted table", gamma_count_perms(m), extracted);
}

void check_double_fall_leaves(Outcome& out, const Multiset& m) {
  for (const auto& s : enumerate_stirling(m)) {
    out.item();
    const GesselTree t = gessel_forward(s);
    const auto st = statistics(s);
    const auto report = balance_report(t);
    std::set<int> from_word;
    for (int pos : st.dfall_positions) from_word.insert(s.at(pos));
    std::set<int> from_tree;
    for (const auto& [label, b] : report.status) {
      if (b == LeafBalance::UnbalancedY) from_tree.insert(label);
    }
    out.expect(from_word == from_tree && from_word.size() == st.dfall_positions.size(),
               "double-fall values equal vertices with an unbalanced y-leaf", from_word, from_tree,
               {{"perm", s.to_string()}, {"tree", t.to_string()}});
  }
}

void check_descent_plateaux(Outcome& out, const Multiset& m) {
  if (!is_uniform_2(m)) return out.skip("needs [n]_2");
  const GammaTable extracted = gamma_extract(c_polynomial_enum(m), m.total());
  out.items(extracted.entries.size());
  expect_tables(out, "(des, aplat) counts without descent-plateaux equal the extracted table",
                gamma_count_mma(m.n()), extracted);
}

void check_ternary_trees(Outcome& out, const Multiset& m) {
  if (!is_uniform_2(m)) return out.skip("needs [n]_2");
  const GammaTable extracted = gamma_extract(c_polynomial_enum(m), m.total());
  const GammaTable ternary = gamma_count_ternary(m.n());
  out.items(extracted.entries.size());
  expect_tables(out, "canonical ternary tree counts equal the extracted table", ternary, extracted);
  expect_tables(out, "canonical ternary tree counts equal the descent-plateau counts", ternary,
                gamma_count_mma(m.n()));
}

void check_ternary_character(Outcome& out, const Multiset& m) {
  if (!is_uniform_2(m)) return out.skip("needs [n]_2");
  for (const auto& s : enumerate_stirling(m)) {
    out.item();
    const GesselTree t = gessel_forward(s);
    const auto st = statistics(s);
    json where{{"perm", s.to_string()}, {"tree", t.to_string()}};
    out.expect((st.dplat == 0) == is_canonical_ternary(t), "no descent-plateau iff canonical ternary",
               st.dplat, is_canonical_ternary(t), where);
    out.expect(st.aplat == xz_vertex_count(t), "aplat equals vertices with both x- and z-leaves", st.aplat,
               xz_vertex_count(t), where);
  }
}

void check_symmetry(Outcome& out, const Multiset& m, bool all_three) {
  if (all_three && !is_uniform_2(m)) return out.skip("needs [n]_2");
  const Poly3 c = c_polynomial_enum(m);
  out.items(c.size());
  const std::vector<int> vars = all_three ? std::vector<int>{0, 1, 2} : std::vector<int>{0, 1};
  out.expect(is_symmetric(c, vars), all_three ? "symmetric in x, y, z" : "symmetric in x, y", poly_to_json(c),
             "symmetric");
  for (const auto& [e, coeff] : c.terms()) {
    const bool ok = e[0] + e[1] + e[2] == m.total() + 1 && e[2] <= m.total() - m.n() && e[0] >= 1 && e[1] >= 1;
    out.expect(ok, "monomial degree bounds", json::array({e[0], e[1], e[2]}), m.total() + 1);
  }
}

void check_orbits(Outcome& out, const Multiset& m) {
  const auto perms = enumerate_stirling(m);
  std::set<std::string> all;
  for (const auto& s : perms) all.insert(gessel_forward(s).to_string());

  const Poly3 xy = Poly3::monomial({1, 1, 0});
  const Poly3 x_plus_y = Poly3::monomial({1, 0, 0}) + Poly3::monomial({0, 1, 0});
  std::set<std::string> covered;
  Poly3 total;
  for (const auto& canon : enumerate_canonical(m)) {
    out.item();
    const auto census = leaf_census(canon);
    const auto report = balance_report(canon);
    json where = tree_payload(canon);
    out.expect(report.uxleaf == m.total() + 1 - census.zleaf - 2 * census.yleaf,
               "uxleaf = K + 1 - zleaf - 2 yleaf on canonical trees", report.uxleaf,
               m.total() + 1 - census.zleaf - 2 * census.yleaf, where);
    const auto members = orbit(canon);
    out.expect(members.size() == (std::size_t{1} << report.uxleaf), "orbit size is 2^uxleaf", members.size(),
               std::size_t{1} << report.uxleaf, where);
    Poly3 orbit_sum;
    int canonical_members = 0;
    for (const auto& member : members) {
      const auto key = member.to_string();
      out.expect(covered.insert(key).second, "orbits are disjoint", key, "seen in an earlier orbit", where);
      if (is_canonical(member)) ++canonical_members;
      out.expect(canonical_representative(member) == canon, "every member returns to the canonical tree",
                 canonical_representative(member).to_string(), canon.to_string(), {{"member", key}});
      const auto mc = leaf_census(member);
      orbit_sum.add_term({mc.xleaf, mc.yleaf, mc.zleaf}, 1);
    }
    out.expect(canonical_members == 1, "exactly one canonical tree per orbit", canonical_members, 1, where);
    const Poly3 expected =
        xy.pow(census.yleaf) * x_plus_y.pow(report.uxleaf) * Poly3::monomial({0, 0, census.zleaf});
    out.expect(orbit_sum == expected, "orbit monomial sum", poly_to_json(orbit_sum), poly_to_json(expected), where);
    total += orbit_sum;
  }
  out.expect(covered == all, "orbits cover every tree", covered.size(), all.size());
  const Poly3 c = c_polynomial_enum(m);
  out.expect(total == c, "sum over orbits equals the Eulerian polynomial", poly_to_json(total), poly_to_json(c));
}

void check_round_trip(Outcome& out, const Multiset& m) {
  for (const auto& s : enumerate_stirling(m)) {
    out.item();
    const GesselTree t = gessel_forward(s);
    const StirlingPermutation back = gessel_inverse(t);
    out.expect(back == s, "inverse after forward is the identity", back.to_string(), s.to_string(),
               perm_payload(s));
    const GesselTree reparsed = GesselTree::parse(t.to_string());
    out.expect(reparsed == t, "tree serialization round-trips", reparsed.to_string(), t.to_string(),
               perm_payload(s));
    const GesselTree again = gessel_forward(gessel_inverse(reparsed));
    out.expect(again == reparsed, "forward after inverse is the identity", again.to_string(),
               reparsed.to_string(), perm_payload(s));
  }
}

void check_plateau_leaves(Outcome& out, const Multiset& m) {
  for (const auto& s : enumerate_stirling(m)) {
    out.item();
    const GesselTree t = gessel_forward(s);
    const auto st = statistics(s);
    const auto census = leaf_census(t);
    out.expect(st.plat_by_j == census.zleaf_by_j, "j-plateaux equal z_j-leaves", map_json(st.plat_by_j),
               map_json(census.zleaf_by_j), {{"perm", s.to_string()}, {"tree", t.to_string()}});
  }
}

void run_check(CheckId id, Outcome& out, const Multiset& m) {
  switch (id) {
    case CheckId::Bijection: return check_bijection(out, m);
    case CheckId::OccurrenceFlags: return check_occurrence_flags(out, m);
    case CheckId::CanonicalTrees: return check_canonical_trees(out, m);
    case CheckId::GrammarC: return check_grammar_c(out, m);
    case CheckId::PrunedWeights: return check_pruned_weights(out, m);
    case CheckId::GrammarGamma: return check_grammar_gamma(out, m);
    case CheckId::DoubleFallGamma: return check_double_fall_gamma(out, m);
    case CheckId::DoubleFallLeaves: return check_double_fall_leaves(out, m);
    case CheckId::DescentPlateaux: return check_descent_plateaux(out, m);
    case CheckId::TernaryTrees: return check_ternary_trees(out, m);
    case CheckId::TernaryCharacter: return check_ternary_character(out, m);
    case CheckId::SymmetryXY: return check_symmetry(out, m, false);
    case CheckId::SymmetryXYZ: return check_symmetry(out, m, true);
    case CheckId::Orbits: return check_orbits(out, m);
    case CheckId::RoundTrip: return check_round_trip(out, m);
    case CheckId::PlateauLeaves: return check_plateau_leaves(out, m);
  }
}

void bounded_family(int max_n, int max_k, int max_K, std::vector<int>& prefix, std::vector<Multiset>& out,
                    int used) {
  if (!prefix.empty()) out.emplace_back(prefix);
  if (static_cast<int>(prefix.size()) == max_n) return;
  for (int k = 1; k <= max_k && used + k <= max_K; ++k) {
    prefix.push_back(k);
    bounded_family(max_n, max_k, max_K, prefix, out, used + k);
    prefix.pop_back();
  }
}

}  // namespace

std::string_view check_name(CheckId id) {
  for (const auto& entry : kCheckNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

CheckId parse_check_id(std::string_view name) {
  for (const auto& entry : kCheckNames) {
    if (entry.name == name) return entry.id;
  }
  throw DomainError("unknown check id '" + std::string(name) + "'");
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> out;
    for (const auto& entry : kCheckNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

FamilySpec FamilySpec::bounded(int max_n, int max_k, int max_K) {
  FamilySpec spec;
  spec.max_n = max_n;
  spec.max_k = max_k;
  spec.max_K = max_K;
  return spec;
}

FamilySpec FamilySpec::of(std::vector<Multiset> list) {
  FamilySpec spec;
  spec.list = std::move(list);
  return spec;
}

FamilySpec FamilySpec::default_campaign(bool with_7_2) {
  FamilySpec spec = bounded(4, 3, 10);
  for (int n = 1; n <= (with_7_2 ? 7 : 6); ++n) spec.list.push_back(Multiset::uniform(n, 2));
  for (int n = 1; n <= 7; ++n) spec.list.push_back(Multiset::uniform(n, 1));
  return spec;
}

std::vector<Multiset> generate_family(const FamilySpec& spec) {
  std::vector<Multiset> out = spec.list;
  if (spec.max_n || spec.max_k || spec.max_K) {
    if (!(spec.max_n && spec.max_k && spec.max_K)) {
      throw DomainError("a bounded family needs max_n, max_k and max_K");
    }
    std::vector<int> prefix;
    bounded_family(*spec.max_n, *spec.max_k, *spec.max_K, prefix, out, 0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BigInt family_cost(const std::vector<Multiset>& family) {
  BigInt cost = 0;
  for (const auto& m : family) cost += count_stirling(m);
  return cost;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skip: return "SKIP";
  }
  return "?";
}

FamilyTooLarge::FamilyTooLarge(BigInt cost, BigInt cap)
    : DomainError("family too large: " + cost.str() + " permutations exceed the cap of " + cap.str()),
      cost_(std::move(cost)) {}

MultisetResult check_multiset(CheckId id, const Multiset& m) {
  Outcome out(m);
  try {
    run_check(id, out, m);
  } catch (const Error& ex) {
    out.fail("exception", ex.what(), nullptr);
  }
  return out.take();
}

CheckReport verify(CheckId id, const FamilySpec& family, const VerifyOptions& options) {
  const auto members = generate_family(family);
  const BigInt cost = family_cost(members);
  if (cost > options.cost_cap) throw FamilyTooLarge(cost, options.cost_cap);

  const auto start = std::chrono::steady_clock::now();
  CheckReport report{id, std::vector<MultisetResult>(members.size()), Verdict::Pass, 0};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < members.size(); i = next++) report.results[i] = check_multiset(id, members[i]);
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(members.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  const bool any_pass = std::any_of(report.results.begin(), report.results.end(),
                                    [](const auto& r) { return r.verdict == Verdict::Pass; });
  const bool any_fail = std::any_of(report.results.begin(), report.results.end(),
                                    [](const auto& r) { return r.verdict == Verdict::Fail; });
  report.verdict = any_fail ? Verdict::Fail : (any_pass ? Verdict::Pass : Verdict::Skip);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json report_to_json(const CheckReport& report, bool with_timing) {
  json results = json::array();
  for (const auto& r : report.results) {
    json entry{{"multiset", r.multiset.to_string()}, {"verdict", verdict_name(r.verdict)}, {"items", r.items}};
    if (r.verdict == Verdict::Fail) entry["counterexample"] = r.counterexample;
    if (!r.notes.is_null()) entry["notes"] = r.notes;
    results.push_back(std::move(entry));
  }
  json out{{"check", check_name(report.id)}, {"verdict", verdict_name(report.verdict)}, {"results", results}};
  if (with_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::string report_to_table(const CheckReport& report) {
  std::ostringstream os;
  std::uint64_t items = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  for (const auto& r : report.results) {
    items += r.items;
    if (r.verdict == Verdict::Pass) ++passed;
    if (r.verdict == Verdict::Skip) ++skipped;
  }
  os << verdict_name(report.verdict) << "  " << check_name(report.id) << "  multisets=" << report.results.size()
     << " pass=" << passed << " skip=" << skipped << " items=" << items << "  " << report.elapsed_ms << " ms\n";
  for (const auto& r : report.results) {
    if (r.verdict == Verdict::Fail) {
      os << "    FAIL {" << r.multiset.to_string() << "}: " << r.counterexample.dump() << "\n";
    }
  }
  return os.str();
}

namespace {

constexpr std::string_view kExample1Perm = "33552217714664";
constexpr std::string_view kExample1Tree = "(1 (2 (3 * * (5 * * *)) * *) (7 * * *) (4 * (6 * * *) *))";
constexpr std::string_view kExample2Perm = "5533211466674";
constexpr std::string_view kExample2Tree = "(1 (2 (3 (5 * * *) * *) *) * (4 * (6 * * * (7 * *)) *))";
constexpr std::string_view kExample3Tree = "(1 (2 * (3 (5 * * *) * *)) * (4 * (6 * * * (7 * *)) *))";
constexpr std::string_view kExample4Tree = "(1 (2 * (3 * * (5 * * *))) * (4 * (6 * * * (7 * *)) *))";
constexpr std::string_view kExample5Pruned = "(1 (2:v (3:v * (5:u *))) * (4:u (6:v * * (7:u))))";
constexpr std::string_view kExample7Perm = "22335517714664";
constexpr std::string_view kExample7Tree = "(1 (2 * * (3 * * (5 * * *))) (7 * * *) (4 * (6 * * *) *))";

std::string digits(const Word& w) {
  std::string out;
  for (int v : w) out += std::to_string(v);
  return out;
}

std::string positions(const std::vector<int>& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + "}";
}

}  // namespace

std::vector<GoldenCase> golden_examples() {
  std::vector<GoldenCase> cases;
  auto add = [&cases](std::string name, const std::string& expected, const std::function<std::string()>& actual) {
    GoldenCase c{std::move(name), false, expected, {}};
    try {
      c.actual = actual();
    } catch (const Error& ex) {
      c.actual = std::string("error: ") + ex.what();
    }
    c.pass = c.actual == c.expected;
    cases.push_back(std::move(c));
  };

  const auto example1 = StirlingPermutation::parse(kExample1Perm);
  const auto example2 = StirlingPermutation::parse(kExample2Perm);
  const auto example7 = StirlingPermutation::parse(kExample7Perm);

  add("example1: permutation to tree", std::string(kExample1Tree), [&] { return gessel_forward(example1).to_string(); });
  add("example1: tree to permutation", std::string(kExample1Perm),
      [&] { return digits(gessel_inverse(GesselTree::parse(kExample1Tree)).word()); });
  add("example1: leaf census (x,y,z)", "5,5,5", [&] {
    const auto c = leaf_census(gessel_forward(example1));
    return std::to_string(c.xleaf) + "," + std::to_string(c.yleaf) + "," + std::to_string(c.zleaf);
  });
  add("example1: (asc,des,plat)", "5,5,5", [&] {
    const auto st = statistics(example1);
    return std::to_string(st.asc) + "," + std::to_string(st.des) + "," + std::to_string(st.plat);
  });
  add("example2: permutation to tree", std::string(kExample2Tree), [&] { return gessel_forward(example2).to_string(); });
  add("example2: tree to permutation", std::string(kExample2Perm),
      [&] { return digits(gessel_inverse(GesselTree::parse(kExample2Tree)).word()); });

  const std::array<std::string, 7> segments{"5533211466674", "55332", "5533", "466674", "55", "6667", "7"};
  for (int v = 1; v <= 7; ++v) {
    add("example2: segment S_" + std::to_string(v), segments[v - 1], [&, v] { return digits(segment_word(example2, v)); });
  }

  add("example3: psi_2 of the example2 tree", std::string(kExample3Tree),
      [&] { return psi(GesselTree::parse(kExample2Tree), 2).to_string(); });
  add("example4: canonical", "true", [&] { return is_canonical(GesselTree::parse(kExample4Tree)) ? "true" : "false"; });
  add("example2: canonical representative is the example4 tree", std::string(kExample4Tree),
      [&] { return canonical_representative(GesselTree::parse(kExample2Tree)).to_string(); });
  add("example5: pruned example4 tree", std::string(kExample5Pruned),
      [&] { return prune(GesselTree::parse(kExample4Tree)).to_string(); });
  add("example5: pruned weight", "u^3*v^3", [&] {
    const auto [u, v] = prune(GesselTree::parse(kExample4Tree)).weight();
    return Poly3::monomial({u, v, 0}, 1, Variables::UVZ).to_string();
  });

  const auto dfall_example = StirlingPermutation::parse("2533114664");
  add("double falls of 2533114664", "{4}", [&] { return positions(statistics(dfall_example).dfall_positions); });
  add("descents of 2533114664", "{2,4,9,10}",
      [&] { return positions(statistics(dfall_example).descent_positions); });

  add("example1: descent-plateau 522 at index 5", "{5}", [&] { return positions(statistics(example1).dplat_positions); });
  add("example1: not canonical ternary", "false",
      [&] { return is_canonical_ternary(gessel_forward(example1)) ? "true" : "false"; });
  add("example7: permutation to tree", std::string(kExample7Tree), [&] { return gessel_forward(example7).to_string(); });
  add("example7: tree to permutation", std::string(kExample7Perm),
      [&] { return digits(gessel_inverse(GesselTree::parse(kExample7Tree)).word()); });
  add("example7: canonical ternary", "true",
      [&] { return is_canonical_ternary(GesselTree::parse(kExample7Tree)) ? "true" : "false"; });
  add("example7: no descent-plateaux", "0", [&] { return std::to_string(statistics(example7).dplat); });
  return cases;
}

json golden_to_json(const std::vector<GoldenCase>& cases) {
  json list = json::array();
  bool all = true;
  for (const auto& c : cases) {
    all = all && c.pass;
    json entry{{"name", c.name}, {"verdict", c.pass ? "PASS" : "FAIL"}, {"expected", c.expected}};
    if (!c.pass) entry["actual"] = c.actual;
    list.push_back(std::move(entry));
  }
  return {{"verdict", all ? "PASS" : "FAIL"}, {"cases", std::move(list)}};
}

}  // namespace gessel
