#include "gessel/action.hpp"
#include "gessel/gamma.hpp"
#include "gessel/grammar.hpp"
#include "gessel/harness.hpp"
#include "gessel/stirling.hpp"
#include "gessel/tree.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gessel;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

Multiset to_multiset(const std::vector<int>& mults) { return Multiset(mults); }

py::dict poly_dict(const Poly3& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::make_tuple(e[0], e[1], e[2])] = to_py(c);
  return out;
}

py::dict gamma_dict(const GammaTable& g) {
  py::dict out;
  for (const auto& [ij, c] : g.entries) out[py::make_tuple(ij.first, ij.second)] = to_py(c);
  return out;
}

py::dict stats_dict(const Word& word) {
  const auto st = statistics(StirlingPermutation::from_word(word));
  py::dict out;
  out["asc"] = st.asc;
  out["des"] = st.des;
  out["plat"] = st.plat;
  out["plat_by_j"] = st.plat_by_j;
  out["dfall"] = st.dfall;
  out["aplat"] = st.aplat;
  out["dplat"] = st.dplat;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stirling permutations, Gessel trees and partial gamma-expansions";

  // Translators are tried newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("count_stirling", [](const std::vector<int>& mults) { return to_py(count_stirling(to_multiset(mults))); },
        py::arg("mults"));

  m.def(
      "enumerate_stirling",
      [](const std::vector<int>& mults) {
        std::vector<Word> out;
        for (const auto& s : enumerate_stirling(to_multiset(mults))) out.push_back(s.word());
        return out;
      },
      py::arg("mults"));

  m.def("statistics", &stats_dict, py::arg("word"));

  m.def(
      "to_tree", [](const Word& word) { return gessel_forward(StirlingPermutation::from_word(word)).to_string(); },
      py::arg("word"), "Serialized Gessel tree of a Stirling permutation.");

  m.def(
      "to_perm", [](const std::string& tree) { return gessel_inverse(GesselTree::parse(tree)).word(); },
      py::arg("tree"));

  m.def(
      "c_polynomial",
      [](const std::vector<int>& mults, const std::string& via) {
        const Multiset ms = to_multiset(mults);
        if (via == "enum") return poly_dict(c_polynomial_enum(ms));
        if (via == "grammar") return poly_dict(c_polynomial_grammar(ms));
        throw DomainError("via must be 'enum' or 'grammar'");
      },
      py::arg("mults"), py::arg("via") = "enum", "Dict (asc, des, plat) -> count.");

  m.def(
      "gamma",
      [](const std::vector<int>& mults, const std::string& via) {
        const Multiset ms = to_multiset(mults);
        if (via == "extract") return gamma_dict(gamma_extract(c_polynomial_enum(ms), ms.total()));
        if (via == "grammar") return gamma_dict(gamma_from_uvz(gamma_polynomial_grammar(ms), ms.total()));
        if (via == "trees") return gamma_dict(gamma_count_trees(ms));
        if (via == "perms") return gamma_dict(gamma_count_perms(ms));
        if (ms.empty() || !ms.is_uniform(2)) throw DomainError("via '" + via + "' needs [n]_2");
        if (via == "mma") return gamma_dict(gamma_count_mma(ms.n()));
        if (via == "ternary") return gamma_dict(gamma_count_ternary(ms.n()));
        throw DomainError("unknown via '" + via + "'");
      },
      py::arg("mults"), py::arg("via") = "extract", "Dict (i, j) -> gamma_{i,j}.");

  m.def(
      "is_canonical", [](const std::string& tree) { return is_canonical(GesselTree::parse(tree)); },
      py::arg("tree"));

  m.def(
      "canonical_representative",
      [](const std::string& tree) { return canonical_representative(GesselTree::parse(tree)).to_string(); },
      py::arg("tree"));

  m.def(
      "toggle", [](const std::string& tree, int vertex) { return toggle(GesselTree::parse(tree), vertex).to_string(); },
      py::arg("tree"), py::arg("vertex"));

  m.def(
      "orbit",
      [](const std::string& tree) {
        std::vector<std::string> out;
        for (const auto& t : orbit(GesselTree::parse(tree))) out.push_back(t.to_string());
        return out;
      },
      py::arg("tree"));

  m.def(
      "prune",
      [](const std::string& tree) {
        const PrunedTree p = prune(GesselTree::parse(tree));
        return py::make_tuple(p.to_string(), p.weight());
      },
      py::arg("tree"), "Pruned tree string and its (u, v) exponents.");

  m.def(
      "verify",
      [](const std::string& check, const std::vector<std::vector<int>>& family) {
        std::vector<Multiset> list;
        for (const auto& mults : family) list.push_back(to_multiset(mults));
        const auto report = verify(parse_check_id(check), FamilySpec::of(std::move(list)));
        return std::string(verdict_name(report.verdict));
      },
      py::arg("check"), py::arg("family"));

  m.def("golden", [] {
    py::dict out;
    for (const auto& c : golden_examples()) out[py::str(c.name)] = c.pass;
    return out;
  });
}
