#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "core/findist.hpp"
#include "core/limit.hpp"

namespace definetti {

/// {"support": [{"atom": <canonical key>, "prob": "num/den"}, ...]} with
/// atoms in canonical order.  Parses back exactly: keys are the canonical
/// atom encodings and probabilities are exact rational strings.
template <class A>
nlohmann::json findist_json(const FinDist<A>& d) {
  nlohmann::json support = nlohmann::json::array();
  for (const auto& e : d.support()) {
    support.push_back({{"atom", e.key}, {"prob", e.prob.str()}});
  }
  return {{"support", std::move(support)}};
}

/// (atom key, prob string) pairs of a serialized distribution, for exact
/// structural comparison and parse-back.
std::vector<std::pair<std::string, std::string>> findist_pairs_from_json(
    const nlohmann::json& j);

/// Grid table for the approximants at the requested levels.  Exact columns
/// K, grid_point, weight plus *_approx columns carrying the IEEE-double
/// rendering (shortest round-trip form) for plotting; rows cover the full
/// grid k = 0..K including zero weights.
std::string approximant_table_csv(const ConePrefix& cone, const std::vector<int>& levels);
nlohmann::json approximant_table_json(const ConePrefix& cone,
                                      const std::vector<int>& levels);

}  // namespace definetti
