#include "gessel/action.hpp"
#include "gessel/gamma.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace gessel;

namespace {

const char* kExample2Tree = "(1 (2 (3 (5 * * *) * *) *) * (4 * (6 * * * (7 * *)) *))";
const char* kExample3Tree = "(1 (2 * (3 (5 * * *) * *)) * (4 * (6 * * * (7 * *)) *))";
const char* kExample4Tree = "(1 (2 * (3 * * (5 * * *))) * (4 * (6 * * * (7 * *)) *))";
const char* kExample7Tree = "(1 (2 * * (3 * * (5 * * *))) (7 * * *) (4 * (6 * * *) *))";

GesselTree random_tree(std::mt19937& rng, int max_n = 6, int max_k = 3) {
  const auto mults = oracle::random_mults(rng, max_n, max_k);
  return gessel_forward(StirlingPermutation::from_word(oracle::random_stirling(mults, rng), Multiset(mults)));
}

}  // namespace

TEST(Balance, Example2Report) {
  const auto r = balance_report(GesselTree::parse(kExample2Tree));
  EXPECT_EQ(r.status.at(1), LeafBalance::NoXYLeaf);
  EXPECT_EQ(r.status.at(2), LeafBalance::UnbalancedY);
  EXPECT_EQ(r.status.at(3), LeafBalance::UnbalancedY);
  EXPECT_EQ(r.status.at(4), LeafBalance::BalancedPair);
  EXPECT_EQ(r.status.at(6), LeafBalance::UnbalancedX);
  EXPECT_EQ(r.uyleaf, 2);
  EXPECT_EQ(to_string(LeafBalance::UnbalancedY), "unbalanced-y");
}

TEST(Action, Example2ToExample3AndCanonical) {
  const auto example2 = GesselTree::parse(kExample2Tree);
  EXPECT_EQ(psi(example2, 2).to_string(), kExample3Tree);
  EXPECT_EQ(psi(example2, 4), example2);
  EXPECT_THROW(psi(example2, 9), DomainError);
  EXPECT_FALSE(is_canonical(example2));
  EXPECT_FALSE(is_canonical(GesselTree::parse(kExample3Tree)));
  EXPECT_TRUE(is_canonical(GesselTree::parse(kExample4Tree)));
  EXPECT_EQ(canonical_representative(example2).to_string(), kExample4Tree);
}

TEST(Action, ToggleIsAnInvolution) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto t = random_tree(rng);
    std::uniform_int_distribution<int> vd(1, t.multiset().n());
    const int v = vd(rng);
    const auto once = toggle(t, v);
    ASSERT_EQ(toggle(once, v), t) << t.to_string();
    ASSERT_EQ(leaf_census(once).zleaf, leaf_census(t).zleaf);
    ASSERT_EQ(leaf_census(once).xleaf + leaf_census(once).yleaf, leaf_census(t).xleaf + leaf_census(t).yleaf);
  }
}

TEST(Action, CanonicalRepresentativeIgnoresOrder) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 1500; ++trial) {
    const auto t = random_tree(rng, 7, 3);
    std::vector<int> targets;
    for (const auto& [v, b] : balance_report(t).status) {
      if (b == LeafBalance::UnbalancedY) targets.push_back(v);
    }
    std::shuffle(targets.begin(), targets.end(), rng);
    GesselTree out = t;
    for (int v : targets) out = psi(out, v);
    ASSERT_TRUE(is_canonical(out));
    ASSERT_EQ(out, canonical_representative(t)) << t.to_string();
  }
}

TEST(Orbits, PartitionAndSizes) {
  for (const auto& mults : oracle::bounded_family(3, 3, 7)) {
    const Multiset m(mults);
    std::set<std::string> covered;
    std::size_t total = 0;
    for (const auto& canon : enumerate_canonical(m)) {
      const auto members = orbit(canon);
      int canonical_members = 0;
      for (const auto& t : members) {
        canonical_members += is_canonical(t);
        ASSERT_EQ(canonical_representative(t), canon);
        ASSERT_TRUE(covered.insert(t.to_string()).second);
      }
      ASSERT_EQ(canonical_members, 1);
      ASSERT_EQ(members.size(), std::size_t{1} << balance_report(canon).uxleaf);
      total += members.size();
    }
    EXPECT_EQ(total, oracle::stirling_words(mults).size()) << m.to_string();
  }
}

TEST(Ternary, Characterisation) {
  EXPECT_TRUE(is_canonical_ternary(GesselTree::parse(kExample7Tree)));
  EXPECT_FALSE(is_canonical_ternary(
      GesselTree::parse("(1 (2 (3 * * (5 * * *)) * *) (7 * * *) (4 * (6 * * *) *))")));
  EXPECT_TRUE(is_canonical_ternary(GesselTree::parse("(1 * * (2 * * *))")));
  EXPECT_TRUE(is_canonical_ternary(GesselTree::parse("(1 * (2 * * *) *)")));
  EXPECT_FALSE(is_canonical_ternary(GesselTree::parse("(1 (2 * * *) * *)")));
  EXPECT_THROW(is_canonical_ternary(GesselTree::parse("(1 * *)")), DomainError);

  for (int n = 1; n <= 5; ++n) {
    const Multiset m = Multiset::uniform(n, 2);
    for (const auto& w : oracle::stirling_words(std::vector<int>(n, 2))) {
      const auto t = gessel_forward(StirlingPermutation::from_word(w, m));
      const auto st = oracle::stats(w);
      ASSERT_EQ(st.dplat == 0, is_canonical_ternary(t)) << format_word(w);
      ASSERT_EQ(st.aplat, xz_vertex_count(t)) << format_word(w);
    }
  }
}

TEST(Prune, Example5Weight) {
  const auto p = prune(GesselTree::parse(kExample4Tree));
  EXPECT_EQ(p.to_string(), "(1 (2:v (3:v * (5:u *))) * (4:u (6:v * * (7:u))))");
  EXPECT_EQ(p.weight(), std::make_pair(3, 3));
  EXPECT_EQ(p.z_degree(), 5);
  EXPECT_EQ(p.first_type2_vertex(), 0);
  EXPECT_EQ(p.weighted_monomial(), Poly3::monomial({3, 3, 5}, 1, Variables::UVZ));

  const auto bad = prune(GesselTree::parse(kExample2Tree));
  EXPECT_EQ(bad.first_type2_vertex(), 2);
  EXPECT_THROW(bad.weight(), DomainError);
  EXPECT_THROW(prune(GesselTree::parse("*")), DomainError);
}

TEST(Prune, WeightsSumToGammaPolynomial) {
  for (const auto& mults : oracle::bounded_family(3, 3, 8)) {
    const Multiset m(mults);
    Poly3 sum(Variables::UVZ);
    for (const auto& t : enumerate_canonical(m)) sum += prune(t).weighted_monomial();
    ASSERT_EQ(gamma_from_uvz(sum, m.total()), gamma_extract(c_polynomial_enum(m), m.total())) << m.to_string();
  }
}
