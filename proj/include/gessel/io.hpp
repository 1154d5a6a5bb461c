#pragma once

#include "gessel/gamma.hpp"
#include "gessel/poly.hpp"
#include "gessel/stirling.hpp"

#include <json.hpp>

#include <string>

namespace gessel {

using nlohmann::json;

/// {"vars":["x","y","z"],"terms":[{"e":[a,b,c],"c":"<decimal>"}, ...]},
/// terms sorted by exponent triple.
json poly_to_json(const Poly3& p);
Poly3 poly_from_json(const json& j);

/// Header "x,y,z,c" (or "u,v,z,c"), one term per row.
std::string poly_to_csv(const Poly3& p);

/// {"K":K,"entries":[{"i":i,"j":j,"g":g}, ...]} sorted by (i,j). g is a JSON
/// integer when it fits in 64 bits and a decimal string otherwise.
json gamma_to_json(const GammaTable& g);
GammaTable gamma_from_json(const json& j);

/// Header "i,j,g", one entry per row.
std::string gamma_to_csv(const GammaTable& g);

json stats_to_json(const StatProfile& st);

}  // namespace gessel
