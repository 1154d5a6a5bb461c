#include "gessel/io.hpp"

#include <limits>

namespace gessel {

namespace {

BigInt parse_bigint(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? BigInt(value.get<std::uint64_t>()) : BigInt(value.get<std::int64_t>());
  }
  if (!value.is_string()) throw ParseError("coefficient must be an integer or a decimal string");
  const auto text = value.get<std::string>();
  const std::size_t digits_from = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == digits_from ||
      text.find_first_not_of("0123456789", digits_from) != std::string::npos) {
    throw ParseError("invalid decimal coefficient '" + text + "'");
  }
  return BigInt(text);
}

json bigint_value(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

json poly_to_json(const Poly3& p) {
  const auto names = variable_names(p.vars());
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"e", {e[0], e[1], e[2]}}, {"c", c.str()}});
  return {{"vars", {names[0], names[1], names[2]}}, {"terms", std::move(terms)}};
}

Poly3 poly_from_json(const json& j) {
  try {
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    Variables sig;
    if (vars == std::vector<std::string>{"x", "y", "z"}) {
      sig = Variables::XYZ;
    } else if (vars == std::vector<std::string>{"u", "v", "z"}) {
      sig = Variables::UVZ;
    } else {
      throw ParseError("unknown variable signature");
    }
    Poly3 p(sig);
    for (const auto& term : j.at("terms")) {
      const auto e = term.at("e").get<std::vector<int>>();
      if (e.size() != 3) throw ParseError("exponent triple must have three entries");
      p.add_term({e[0], e[1], e[2]}, parse_bigint(term.at("c")));
    }
    return p;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("polynomial JSON: ") + ex.what());
  }
}

std::string poly_to_csv(const Poly3& p) {
  const auto names = variable_names(p.vars());
  std::string out = names[0] + "," + names[1] + "," + names[2] + ",c\n";
  for (const auto& [e, c] : p.terms()) {
    out += std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," + c.str() + "\n";
  }
  return out;
}

json gamma_to_json(const GammaTable& g) {
  json entries = json::array();
  for (const auto& [ij, c] : g.entries) entries.push_back({{"i", ij.first}, {"j", ij.second}, {"g", bigint_value(c)}});
  return {{"K", g.K}, {"entries", std::move(entries)}};
}

GammaTable gamma_from_json(const json& j) {
  try {
    GammaTable g;
    g.K = j.at("K").get<int>();
    for (const auto& entry : j.at("entries")) {
      g.add(entry.at("i").get<int>(), entry.at("j").get<int>(), parse_bigint(entry.at("g")));
    }
    return g;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("gamma table JSON: ") + ex.what());
  }
}

std::string gamma_to_csv(const GammaTable& g) {
  std::string out = "i,j,g\n";
  for (const auto& [ij, c] : g.entries) {
    out += std::to_string(ij.first) + "," + std::to_string(ij.second) + "," + c.str() + "\n";
  }
  return out;
}

json stats_to_json(const StatProfile& st) {
  json by_j = json::object();
  for (const auto& [j, count] : st.plat_by_j) by_j[std::to_string(j)] = count;
  return {{"asc", st.asc},
          {"des", st.des},
          {"plat", st.plat},
          {"plat_by_j", std::move(by_j)},
          {"dfall", st.dfall},
          {"aplat", st.aplat},
          {"dplat", st.dplat},
          {"ascents", st.ascent_positions},
          {"descents", st.descent_positions},
          {"plateaux", st.plateau_positions}};
}

}  // namespace gessel
