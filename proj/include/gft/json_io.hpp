#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gft/errors.hpp"
#include "gft/polyanalytic.hpp"
#include "gft/psi.hpp"

namespace gft {

// {"family": "booth", "beta": 0.5}; parameter keys follow the factory
// argument names (beta | gamma, eta | D, E).
inline nlohmann::json psi_to_json(const PsiSpec& spec) {
  nlohmann::json j;
  j["family"] = family_name(spec.family());
  switch (spec.family()) {
    case PsiFamily::identity: break;
    case PsiFamily::booth:
    case PsiFamily::cissoid:
    case PsiFamily::concave:
      j["beta"] = spec.beta();
      break;
    case PsiFamily::s_gamma:
      j["gamma"] = spec.gamma();
      j["eta"] = spec.eta();
      break;
    case PsiFamily::janowski:
      j["D"] = spec.jan_d();
      j["E"] = spec.jan_e();
      break;
  }
  return j;
}

inline PsiSpec psi_from_json(const nlohmann::json& j) {
  if (!j.contains("family")) throw BadInputError("psi json: missing \"family\"");
  const std::string fam = j.at("family").get<std::string>();
  auto family = family_from_name(fam);
  if (!family) throw BadInputError("psi json: unknown family \"" + fam + "\"");
  auto num = [&j](const char* key) {
    if (!j.contains(key)) throw BadInputError(std::string("psi json: missing \"") + key + "\"");
    return j.at(key).get<double>();
  };
  switch (*family) {
    case PsiFamily::identity: return PsiSpec::identity();
    case PsiFamily::booth: return PsiSpec::booth(num("beta"));
    case PsiFamily::cissoid: return PsiSpec::cissoid(num("beta"));
    case PsiFamily::s_gamma: return PsiSpec::s_gamma(num("gamma"), num("eta"));
    case PsiFamily::janowski: return PsiSpec::janowski(num("D"), num("E"));
    case PsiFamily::concave: return PsiSpec::concave(num("beta"));
  }
  throw BadInputError("psi json: unknown family");
}

// {"alpha": 2, "components": [[[re, im], ...], ...]}; component k lists its
// coefficients by ascending degree.
inline nlohmann::json polyfn_to_json(const PolyFn& F) {
  nlohmann::json comps = nlohmann::json::array();
  for (const Series& f : F.components) {
    nlohmann::json col = nlohmann::json::array();
    for (int n = 0; n <= f.order(); ++n) col.push_back({f[n].real(), f[n].imag()});
    comps.push_back(std::move(col));
  }
  return {{"alpha", F.alpha}, {"components", std::move(comps)}};
}

inline PolyFn polyfn_from_json(const nlohmann::json& j) {
  if (!j.contains("components") || !j.at("components").is_array())
    throw BadInputError("polyfn json: missing \"components\" array");
  std::vector<Series> comps;
  for (const auto& col : j.at("components")) {
    std::vector<Complex> c;
    c.reserve(col.size());
    for (const auto& pair : col) {
      if (!pair.is_array() || pair.size() != 2)
        throw BadInputError("polyfn json: coefficients must be [re, im] pairs");
      c.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    if (c.empty()) c.emplace_back(0.0, 0.0);
    comps.emplace_back(std::move(c));
  }
  PolyFn F = make_polyfn(std::move(comps));
  if (j.contains("alpha") && j.at("alpha").get<int>() != F.alpha)
    throw BadInputError("polyfn json: alpha does not match component count");
  return F;
}

}  // namespace gft
