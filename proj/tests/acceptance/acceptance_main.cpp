// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include "gessel/action.hpp"
#include "gessel/gamma.hpp"
#include "gessel/grammar.hpp"
#include "gessel/harness.hpp"

#include "../oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace gessel;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure and a short summary.
class Tally {
 public:
  void expect(bool cond, const std::string& what) {
    ++checked_;
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  bool failed() const { return !out_.ok; }
  Outcome finish(const std::string& summary) {
    if (out_.ok) out_.detail = summary + ", " + std::to_string(checked_) + " assertions";
    return out_;
  }

 private:
  Outcome out_;
  long checked_ = 0;
};

std::vector<Multiset> bounded_family() { return generate_family(FamilySpec::bounded(4, 3, 10)); }

std::vector<Multiset> with_uniform_two(std::vector<Multiset> family, int max_n) {
  for (int n = 1; n <= max_n; ++n) family.push_back(Multiset::uniform(n, 2));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

Poly3 from_oracle(const oracle::Poly& p) {
  Poly3 out;
  for (const auto& [e, c] : p) out.add_term(e, c);
  return out;
}

std::vector<int> to_vector(const Multiset& m) { return {m.mults().begin(), m.mults().end()}; }

Outcome counting() {
  Tally t;
  const std::uint64_t known[] = {1, 3, 15, 105, 945, 10395};
  for (int n = 1; n <= 6; ++n) {
    const Multiset m = Multiset::uniform(n, 2);
    t.expect(count_stirling(m) == known[n - 1], "count of [" + std::to_string(n) + "]_2");
    t.expect(known[n - 1] == oracle::double_factorial(2 * n - 1), "double factorial " + std::to_string(n));
    t.expect(enumerate_stirling(m).size() == known[n - 1], "enumeration of [" + std::to_string(n) + "]_2");
  }
  const auto family = bounded_family();
  for (const auto& m : family) {
    const auto listed = enumerate_stirling(m);
    t.expect(count_stirling(m) == listed.size(), "count vs enumeration for " + m.to_string());
    if (m.total() <= 8) {
      const auto brute = oracle::stirling_words(to_vector(m));
      std::vector<Word> words;
      for (const auto& s : listed) words.push_back(s.word());
      t.expect(words == brute, "enumeration vs brute force for " + m.to_string());
    }
  }
  return t.finish(std::to_string(family.size()) + " multisets");
}

Outcome bijection() {
  Tally t;
  long perms = 0;
  for (const auto& m : with_uniform_two(bounded_family(), 6)) {
    for (const auto& s : enumerate_stirling(m)) {
      ++perms;
      const auto tree = gessel_forward(s);
      const auto back = gessel_inverse(tree);
      t.expect(back == s, "inverse(forward) at " + s.to_string());
      t.expect(gessel_forward(back) == tree, "forward(inverse) at " + tree.to_string());
      t.expect(GesselTree::parse(tree.to_string()) == tree, "tree text round trip at " + tree.to_string());
      const auto census = leaf_census(tree);
      const auto st = oracle::stats(s.word());
      t.expect(census.xleaf == st.asc && census.yleaf == st.des && census.zleaf == st.plat,
               "leaf census vs (asc,des,plat) at " + s.to_string());
      t.expect(census.zleaf_by_j == st.plat_by_j, "z_j-leaves vs j-plateaux at " + s.to_string());
      if (t.failed()) return t.finish("");
    }
  }
  return t.finish(std::to_string(perms) + " permutations");
}

Outcome golden() {
  Tally t;
  const auto example1 = gessel_forward(StirlingPermutation::parse("33552217714664"));
  t.expect(example1.to_string() == "(1 (2 (3 * * (5 * * *)) * *) (7 * * *) (4 * (6 * * *) *))", "example 1 tree");
  const auto census = leaf_census(example1);
  t.expect(census.xleaf == 5 && census.yleaf == 5 && census.zleaf == 5, "example 1 census");

  const auto example2perm = StirlingPermutation::parse("5533211466674");
  const char* table[] = {"5533211466674", "55332", "5533", "466674", "55", "6667", "7"};
  for (int i = 1; i <= 7; ++i) {
    t.expect(format_word(segment_word(example2perm, i)) == format_word(parse_word(table[i - 1])),
             "segment " + std::to_string(i));
  }
  const auto example2 = gessel_forward(example2perm);
  t.expect(example2.to_string() == "(1 (2 (3 (5 * * *) * *) *) * (4 * (6 * * * (7 * *)) *))", "example 2 tree");
  t.expect(psi(example2, 2).to_string() == "(1 (2 * (3 (5 * * *) * *)) * (4 * (6 * * * (7 * *)) *))",
           "action at vertex 2");
  const auto canon = canonical_representative(example2);
  t.expect(canon.to_string() == "(1 (2 * (3 * * (5 * * *))) * (4 * (6 * * * (7 * *)) *))", "canonical tree");
  const auto [u, v] = prune(canon).weight();
  t.expect(Poly3::monomial({u, v, 0}, 1, Variables::UVZ).to_string() == "u^3*v^3", "pruned weight");

  const auto df = statistics(StirlingPermutation::parse("2533114664"));
  t.expect(df.dfall_positions == std::vector<int>{4}, "double-fall set");
  t.expect(statistics(StirlingPermutation::parse("22335517714664")).dplat == 0, "descent-plateau free word");
  t.expect(statistics(StirlingPermutation::parse("33552217714664")).dplat_positions == std::vector<int>{5},
           "descent-plateau 522");

  const auto cases = golden_examples();
  for (const auto& c : cases) t.expect(c.pass, "golden case " + c.name);
  return t.finish(std::to_string(cases.size()) + " golden cases");
}

Outcome triple_equality() {
  Tally t;
  const auto family = with_uniform_two(bounded_family(), 5);
  for (const auto& m : family) {
    const auto g = gamma_extract(c_polynomial_enum(m), m.total());
    t.expect(gamma_count_trees(m) == g, "canonical trees vs extraction for " + m.to_string());
    t.expect(gamma_count_perms(m) == g, "double-fall-free permutations vs extraction for " + m.to_string());
    t.expect(!g.entries.empty(), "empty table for " + m.to_string());
  }
  return t.finish(std::to_string(family.size()) + " multisets");
}

Outcome grammar() {
  Tally t;
  const auto family = with_uniform_two(bounded_family(), 6);
  for (const auto& m : family) {
    const Poly3 c = c_polynomial_enum(m);
    t.expect(c_polynomial_grammar(m) == c, "grammar vs enumeration for " + m.to_string());
    if (m.total() <= 8) t.expect(c == from_oracle(oracle::c_polynomial(to_vector(m))), "oracle polynomial");
    const auto g = gamma_extract(c, m.total());
    const Poly3 gg = gamma_polynomial_grammar(m);
    t.expect(gg == gamma_to_uvz(g), "(u,v,z) grammar vs extracted table for " + m.to_string());
    t.expect(substitute_uv(gg) == gamma_reconstruct(g), "(u,v,z) grammar vs reconstruction for " + m.to_string());
  }
  const Poly3 x = Poly3::variable(0), y = Poly3::variable(1), z = Poly3::variable(2);
  for (int k = 1; k <= 5; ++k) {
    const auto d = GrammarRuleSet::xyz(k);
    const Poly3 zk = z.pow(k - 1);
    t.expect(derive(x * y, d) == x * y * (x + y) * zk, "D(xy) at k=" + std::to_string(k));
    t.expect(derive(x + y, d) == x * y * zk * BigInt(2), "D(x+y) at k=" + std::to_string(k));
    t.expect(derive(z, d) == x * y * zk, "D(z) at k=" + std::to_string(k));
  }
  return t.finish(std::to_string(family.size()) + " multisets, rules k=1..5");
}

Outcome orbits() {
  Tally t;
  long trees = 0;
  const Poly3 x = Poly3::variable(0), y = Poly3::variable(1), z = Poly3::variable(2);
  for (const auto& m : with_uniform_two(bounded_family(), 6)) {
    std::set<std::string> covered;
    Poly3 total;
    for (const auto& canon : enumerate_canonical(m)) {
      const auto members = orbit(canon);
      int canonical_members = 0;
      Poly3 sum;
      for (const auto& member : members) {
        canonical_members += is_canonical(member);
        t.expect(covered.insert(member.to_string()).second, "tree in two orbits: " + member.to_string());
        const auto c = leaf_census(member);
        sum += Poly3::monomial({c.xleaf, c.yleaf, c.zleaf});
      }
      const auto census = leaf_census(canon);
      const int ux = balance_report(canon).uxleaf;
      t.expect(canonical_members == 1, "canonical count in orbit of " + canon.to_string());
      t.expect(members.size() == (std::size_t{1} << ux), "orbit size of " + canon.to_string());
      t.expect(sum == (x * y).pow(census.yleaf) * (x + y).pow(ux) * z.pow(census.zleaf),
               "orbit sum of " + canon.to_string());
      total += sum;
      trees += static_cast<long>(members.size());
    }
    t.expect(covered.size() == count_stirling(m), "orbits do not cover " + m.to_string());
    t.expect(total == c_polynomial_enum(m), "orbit sums vs polynomial for " + m.to_string());
    if (t.failed()) break;
  }
  return t.finish(std::to_string(trees) + " trees");
}

Outcome uniform_two() {
  Tally t;
  long perms = 0;
  for (int n = 1; n <= 5; ++n) {
    const Multiset m = Multiset::uniform(n, 2);
    const auto g = gamma_extract(c_polynomial_enum(m), 2 * n);
    t.expect(gamma_count_mma(n) == g, "descent-plateau count for n=" + std::to_string(n));
    t.expect(gamma_count_ternary(n) == g, "ternary tree count for n=" + std::to_string(n));
    for (const auto& s : enumerate_stirling(m)) {
      ++perms;
      const auto tree = gessel_forward(s);
      const auto st = oracle::stats(s.word());
      t.expect((st.dplat == 0) == is_canonical_ternary(tree), "ternary characterisation at " + s.to_string());
      t.expect(st.aplat == xz_vertex_count(tree), "ascent-plateaux vs x/z vertices at " + s.to_string());

      std::set<int> dfall_values;
      for (int p : st.dfall_positions) dfall_values.insert(s.at(p));
      std::set<int> unbalanced_y;
      for (const auto& [vertex, b] : balance_report(tree).status) {
        if (b == LeafBalance::UnbalancedY) unbalanced_y.insert(vertex);
      }
      t.expect(dfall_values == unbalanced_y, "double falls vs unbalanced y-leaves at " + s.to_string());

      const auto census = leaf_census(tree);
      for (int i = 1; i <= n; ++i) {
        const auto occ = occurrences(s, i);
        t.expect((s.at(occ.first - 1) < i) == census.per_vertex.at(i).has_x, "first occurrence flag");
        t.expect((s.at(occ.last + 1) < i) == census.per_vertex.at(i).has_y, "last occurrence flag");
        t.expect(segment_word(s, i) == subtree_word(tree, i), "segment vs subtree at " + s.to_string());
      }
    }
  }
  return t.finish(std::to_string(perms) + " permutations");
}

Outcome symmetry() {
  Tally t;
  const std::array<int, 2> xy{0, 1};
  const std::array<int, 3> xyz{0, 1, 2};
  const auto family = with_uniform_two(bounded_family(), 6);
  for (const auto& m : family) t.expect(is_symmetric(c_polynomial_enum(m), xy), "x<->y for " + m.to_string());
  for (int n = 1; n <= 6; ++n) {
    t.expect(is_symmetric(c_polynomial_enum(Multiset::uniform(n, 2)), xyz), "x,y,z for n=" + std::to_string(n));
  }
  return t.finish(std::to_string(family.size()) + " multisets");
}

Outcome specializations() {
  Tally t;
  for (int n = 1; n <= 7; ++n) {
    const Poly3 a = c_polynomial_enum(Multiset::uniform(n, 1)).at_z_one();
    Poly3 expected;
    for (int k = 0; k < n; ++k) expected.add_term({n - k, k + 1, 0}, oracle::eulerian(n, k));
    t.expect(a == expected, "Eulerian row n=" + std::to_string(n));
  }
  GammaTable a2;
  a2.K = 2;
  a2.add(0, 1, 1);
  t.expect(gamma_extract(c_polynomial_enum(Multiset::uniform(2, 1)).at_z_one(), 2) == a2, "gamma of A_2");

  std::map<int, std::int64_t> des;
  for (const auto& s : enumerate_stirling(Multiset::uniform(3, 2))) ++des[statistics(s).des];
  const std::map<int, std::int64_t> row{{1, 1}, {2, 8}, {3, 6}};
  t.expect(des == row, "descent distribution of [3]_2");
  for (int k = 0; k < 3; ++k) {
    t.expect(row.at(k + 1) == oracle::second_order_eulerian(3, k), "second-order Eulerian recurrence");
  }
  return t.finish("n <= 7");
}

Outcome properties() {
  Tally t;
  std::mt19937 rng(1789);
  constexpr int kCases = 1000;
  auto random_poly = [&](Variables vars) {
    std::uniform_int_distribution<int> terms(0, 4), e(0, 3), c(-4, 4);
    Poly3 p(vars);
    for (int n = terms(rng); n > 0; --n) p.add_term({e(rng), e(rng), e(rng)}, c(rng));
    return p;
  };
  std::uniform_int_distribution<int> kd(1, 4), sd(-3, 3);
  for (int i = 0; i < kCases; ++i) {
    const Variables vars = i % 2 ? Variables::UVZ : Variables::XYZ;
    const auto rules = i % 2 ? GrammarRuleSet::uvz(kd(rng)) : GrammarRuleSet::xyz(kd(rng));
    const Poly3 p = random_poly(vars), q = random_poly(vars);
    const BigInt a = sd(rng), b = sd(rng);
    t.expect(derive(p * q, rules) == derive(p, rules) * q + p * derive(q, rules), "Leibniz rule");
    t.expect(derive(p * a + q * b, rules) == derive(p, rules) * a + derive(q, rules) * b, "linearity");
  }

  std::uniform_int_distribution<int> Kd(0, 9), cd(1, 1000), nd(0, 6);
  for (int i = 0; i < kCases; ++i) {
    GammaTable g;
    g.K = Kd(rng);
    for (int n = nd(rng); n > 0; --n) {
      std::uniform_int_distribution<int> id(0, g.K + 1);
      const int row = id(rng);
      std::uniform_int_distribution<int> jd(0, (g.K + 1 - row) / 2);
      g.add(row, jd(rng), cd(rng));
    }
    t.expect(gamma_extract(gamma_reconstruct(g), g.K) == g, "extract(reconstruct(g))");
  }

  auto random_tree = [&] {
    const auto mults = oracle::random_mults(rng, 7, 3);
    return gessel_forward(StirlingPermutation::from_word(oracle::random_stirling(mults, rng), Multiset(mults)));
  };
  for (int i = 0; i < kCases; ++i) {
    const auto tree = random_tree();
    std::uniform_int_distribution<int> vd(1, tree.multiset().n());
    const int v = vd(rng);
    t.expect(toggle(toggle(tree, v), v) == tree, "toggle involution at " + tree.to_string());
  }
  for (int i = 0; i < kCases; ++i) {
    const auto tree = random_tree();
    std::vector<int> targets;
    for (const auto& [v, b] : balance_report(tree).status) {
      if (b == LeafBalance::UnbalancedY) targets.push_back(v);
    }
    std::shuffle(targets.begin(), targets.end(), rng);
    GesselTree out = tree;
    for (int v : targets) out = psi(out, v);
    t.expect(out == canonical_representative(tree), "flip order changed the result at " + tree.to_string());
  }
  return t.finish(std::to_string(kCases) + " cases per law");
}

struct Criterion {
  int number;
  const char* name;
  double limit_s;  // 0 = no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "counting", 10, counting},
      {2, "bijection", 60, bijection},
      {3, "golden examples", 0, golden},
      {4, "gamma triple equality", 120, triple_equality},
      {5, "grammar", 0, grammar},
      {6, "orbit structure", 0, orbits},
      {7, "uniform-two closure", 120, uniform_two},
      {8, "symmetry", 0, symmetry},
      {9, "specializations", 0, specializations},
      {10, "property tests", 0, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_s > 0 && secs > c.limit_s) {
      out = {false, "took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s"};
    }
    failures += !out.ok;
    std::ostringstream line;
    line << (out.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << "  " << c.name << "  ("
         << std::fixed << std::setprecision(2) << secs << " s)  " << out.detail;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
