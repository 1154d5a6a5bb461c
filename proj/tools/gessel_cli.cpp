// Command-line front end: enumeration, the tree bijection, polynomials,
// gamma tables, the Foata-Strehl orbit, pruning, grammar derivations and the
// verification harness.

#include "gessel/action.hpp"
#include "gessel/gamma.hpp"
#include "gessel/grammar.hpp"
#include "gessel/harness.hpp"
#include "gessel/io.hpp"
#include "gessel/stirling.hpp"
#include "gessel/tree.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace gessel;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<Multiset> parse_multiset_list(const std::string& text) {
  std::vector<Multiset> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const auto part = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(Multiset::parse(part));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  const Multiset m = Multiset::parse(text);
  return {m.mults().begin(), m.mults().end()};
}

void print_poly(const Poly3& p, const std::string& format) {
  if (format == "csv") {
    std::cout << poly_to_csv(p);
  } else {
    std::cout << poly_to_json(p).dump() << "\n";
  }
}

void print_gamma(const GammaTable& g, const std::string& format) {
  if (format == "csv") {
    std::cout << gamma_to_csv(g);
  } else {
    std::cout << gamma_to_json(g).dump() << "\n";
  }
}

int cmd_enumerate(const std::string& spec, bool with_stats, const std::string& format) {
  const Multiset m = Multiset::parse(spec);
  const auto perms = enumerate_stirling(m);
  if (format == "json") {
    json out = json::array();
    for (const auto& s : perms) {
      json entry{{"word", s.word()}};
      if (with_stats) entry["stats"] = stats_to_json(statistics(s));
      out.push_back(std::move(entry));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << (with_stats ? "word,asc,des,plat,dfall,aplat,dplat\n" : "word\n");
  for (const auto& s : perms) {
    std::cout << s.to_string();
    if (with_stats) {
      const auto st = statistics(s);
      std::cout << ',' << st.asc << ',' << st.des << ',' << st.plat << ',' << st.dfall << ',' << st.aplat << ','
                << st.dplat;
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_gamma(const std::string& spec, const std::string& via, const std::string& format) {
  const Multiset m = Multiset::parse(spec);
  GammaTable g;
  if (via == "extract") {
    g = gamma_extract(c_polynomial_enum(m), m.total());
  } else if (via == "grammar") {
    g = gamma_from_uvz(gamma_polynomial_grammar(m), m.total());
  } else if (via == "trees") {
    g = gamma_count_trees(m);
  } else if (via == "perms") {
    g = gamma_count_perms(m);
  } else {
    if (m.empty() || !m.is_uniform(2)) throw DomainError("--via " + via + " needs a multiset of the form [n]_2");
    g = via == "mma" ? gamma_count_mma(m.n()) : gamma_count_ternary(m.n());
  }
  print_gamma(g, format);
  return 0;
}

int cmd_orbit(const std::string& word) {
  const GesselTree t = gessel_forward(StirlingPermutation::parse(word));
  const GesselTree canon = canonical_representative(t);
  json members = json::array();
  for (const auto& member : orbit(t)) {
    members.push_back({{"tree", member.to_string()}, {"perm", gessel_inverse(member).to_string()}});
  }
  json out{{"canonical", {{"tree", canon.to_string()}, {"perm", gessel_inverse(canon).to_string()}}},
           {"size", members.size()},
           {"members", std::move(members)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_prune(const std::string& text) {
  const PrunedTree p = prune(GesselTree::parse(text));
  json out{{"pruned", p.to_string()}, {"z_degree", p.z_degree()}};
  try {
    const auto [u, v] = p.weight();
    out["weight"] = Poly3::monomial({u, v, 0}, 1, Variables::UVZ).to_string();
  } catch (const DomainError& ex) {
    out["weight"] = nullptr;
    out["error"] = ex.what();
    std::cout << out.dump(2) << "\n";
    return kExitUsage;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_grammar_derive(const std::string& rules, const std::string& kseq) {
  const auto ks = parse_int_list(kseq);
  const bool uvz = rules == "uvz";
  Poly3 p = Poly3::monomial({1, 0, 0});
  for (std::size_t step = 0; step < ks.size(); ++step) {
    if (uvz) {
      p = step == 0 ? uvz_seed(ks[0]) : derive(p, GrammarRuleSet::uvz(ks[step]));
    } else {
      p = derive(p, GrammarRuleSet::xyz(ks[step]));
    }
    json doc = poly_to_json(p);
    doc["step"] = step + 1;
    doc["k"] = ks[step];
    std::cout << doc.dump() << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string check = "all";
  std::optional<int> max_n;
  std::optional<int> max_k;
  std::optional<int> max_K;
  std::string multisets;
  int jobs = 1;
  std::uint64_t cap = 1'000'000;
  bool with_7_2 = false;
  std::string format = "json";
};

int cmd_verify(const VerifyArgs& args) {
  FamilySpec family;
  if (!args.multisets.empty()) {
    family = FamilySpec::of(parse_multiset_list(args.multisets));
  } else if (args.max_n || args.max_k || args.max_K) {
    family = FamilySpec::bounded(args.max_n.value_or(4), args.max_k.value_or(3), args.max_K.value_or(10));
  } else {
    family = FamilySpec::default_campaign(args.with_7_2);
  }
  std::vector<CheckId> ids;
  if (args.check == "all") {
    ids = all_checks();
  } else {
    ids.push_back(parse_check_id(args.check));
  }
  VerifyOptions options;
  options.jobs = args.jobs;
  options.cost_cap = args.cap;

  bool failed = false;
  json reports = json::array();
  for (CheckId id : ids) {
    const CheckReport report = verify(id, family, options);
    failed = failed || report.verdict == Verdict::Fail;
    if (args.format == "table") {
      std::cout << report_to_table(report);
    } else {
      reports.push_back(report_to_json(report));
    }
  }
  if (args.format != "table") {
    if (ids.size() == 1) {
      std::cout << reports.front().dump(2) << "\n";
    } else {
      std::cout << json{{"verdict", failed ? "FAIL" : "PASS"}, {"checks", reports}}.dump(2) << "\n";
    }
  }
  return failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling permutations, Gessel trees and partial gamma-expansions"};
  app.require_subcommand(1);

  std::string spec;
  std::string enumerate_format;
  std::string poly_format;
  std::string gamma_format;
  std::string via;
  std::string word;
  std::string tree_text;
  bool with_stats = false;

  auto* enumerate = app.add_subcommand("enumerate", "List the Stirling permutations of a multiset");
  enumerate->add_option("--multiset", spec, "Multiplicities, e.g. 2,2")->required();
  enumerate->add_flag("--stats", with_stats, "Include statistics");
  enumerate->add_option("--format", enumerate_format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->default_val("csv");

  auto* tree = app.add_subcommand("tree", "Map a Stirling permutation to its Gessel tree");
  tree->add_option("--perm", word, "Word, e.g. \"1 2 2 1\" or 1221")->required();

  auto* perm = app.add_subcommand("perm", "Map a Gessel tree back to its permutation");
  perm->add_option("--tree", tree_text, "Tree string, e.g. \"(1 * (2 * * *) *)\"")->required();

  auto* poly = app.add_subcommand("poly", "Eulerian polynomial C_M(x,y,z)");
  poly->add_option("--multiset", spec)->required();
  poly->add_option("--via", via)->check(CLI::IsMember({"enum", "grammar"}))->required();
  poly->add_option("--format", poly_format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* gamma = app.add_subcommand("gamma", "Partial gamma-coefficients");
  gamma->add_option("--multiset", spec)->required();
  gamma->add_option("--via", via)
      ->check(CLI::IsMember({"extract", "grammar", "trees", "perms", "mma", "ternary"}))
      ->required();
  gamma->add_option("--format", gamma_format)->check(CLI::IsMember({"json", "csv"}))->default_val("json");

  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit and canonical representative of a permutation's tree");
  orbit_cmd->add_option("--perm", word)->required();

  auto* prune_cmd = app.add_subcommand("prune", "Pruned tree and (u,v)-weight");
  prune_cmd->add_option("--tree", tree_text)->required();

  std::string rules;
  std::string kseq;
  auto* derive_cmd = app.add_subcommand("grammar-derive", "Stream successive grammar derivatives");
  derive_cmd->add_option("--rules", rules)->check(CLI::IsMember({"xyz", "uvz"}))->required();
  derive_cmd->add_option("--k-seq", kseq, "Comma-separated k values")->required();

  VerifyArgs vargs;
  auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks over a family of multisets");
  verify_cmd->add_option("--check", vargs.check, "Check id or 'all'")->default_val("all");
  auto* o_n = verify_cmd->add_option("--max-n", vargs.max_n);
  auto* o_k = verify_cmd->add_option("--max-k", vargs.max_k);
  auto* o_K = verify_cmd->add_option("--max-K", vargs.max_K);
  auto* o_list = verify_cmd->add_option("--multisets", vargs.multisets, "Semicolon-separated, e.g. \"2,2;2,2,2\"");
  o_list->excludes(o_n)->excludes(o_k)->excludes(o_K);
  verify_cmd->add_option("--jobs", vargs.jobs)->check(CLI::PositiveNumber)->default_val(1);
  verify_cmd->add_option("--cap", vargs.cap, "Maximum total permutations")->default_val(1'000'000);
  verify_cmd->add_flag("--with-7-2", vargs.with_7_2, "Add [7]_2 to the default campaign");
  verify_cmd->add_option("--format", vargs.format)->check(CLI::IsMember({"json", "table"}))->default_val("json");

  auto* golden = app.add_subcommand("golden", "Replay the worked examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(spec, with_stats, enumerate_format);
    if (*tree) {
      std::cout << gessel_forward(StirlingPermutation::parse(word)).to_string() << "\n";
      return 0;
    }
    if (*perm) {
      std::cout << gessel_inverse(GesselTree::parse(tree_text)).to_string() << "\n";
      return 0;
    }
    if (*poly) {
      const Multiset m = Multiset::parse(spec);
      print_poly(via == "enum" ? c_polynomial_enum(m) : c_polynomial_grammar(m), poly_format);
      return 0;
    }
    if (*gamma) return cmd_gamma(spec, via, gamma_format);
    if (*orbit_cmd) return cmd_orbit(word);
    if (*prune_cmd) return cmd_prune(tree_text);
    if (*derive_cmd) return cmd_grammar_derive(rules, kseq);
    if (*verify_cmd) return cmd_verify(vargs);
    if (*golden) {
      const json report = golden_to_json(golden_examples());
      std::cout << report.dump(2) << "\n";
      return report["verdict"] == "PASS" ? 0 : kExitFail;
    }
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
