#include "core/serialize.hpp"

namespace definetti {

std::vector<std::pair<std::string, std::string>> findist_pairs_from_json(
    const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("support") || !j["support"].is_array()) {
    raise(ErrorCode::parse_error, "expected an object with a support array");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& entry : j["support"]) {
    if (!entry.is_object() || !entry.contains("atom") || !entry.contains("prob") ||
        !entry["atom"].is_string() || !entry["prob"].is_string()) {
      raise(ErrorCode::parse_error, "support entries need atom and prob strings");
    }
    pairs.emplace_back(entry["atom"].get<std::string>(),
                       entry["prob"].get<std::string>());
  }
  return pairs;
}

namespace {

struct TableRow {
  int level;
  Rational grid_point;
  Rational weight;
};

std::vector<TableRow> table_rows(const ConePrefix& cone, const std::vector<int>& levels) {
  std::vector<TableRow> rows;
  for (int level : levels) {
    Approximant a = approximant(cone, level);
    for (int k = 0; k <= level; ++k) {
      Rational point(k, level);
      rows.push_back(TableRow{level, point, a.grid.prob(point)});
    }
  }
  return rows;
}

}  // namespace

std::string approximant_table_csv(const ConePrefix& cone, const std::vector<int>& levels) {
  std::string out = "K,grid_point,weight,grid_point_approx,weight_approx\n";
  for (const TableRow& row : table_rows(cone, levels)) {
    out += std::to_string(row.level);
    out += ",";
    out += row.grid_point.str();
    out += ",";
    out += row.weight.str();
    out += ",";
    out += row.grid_point.decimal();
    out += ",";
    out += row.weight.decimal();
    out += "\n";
  }
  return out;
}

nlohmann::json approximant_table_json(const ConePrefix& cone,
                                      const std::vector<int>& levels) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& row : table_rows(cone, levels)) {
    rows.push_back({{"K", row.level},
                    {"grid_point", row.grid_point.str()},
                    {"weight", row.weight.str()},
                    {"grid_point_approx", row.grid_point.to_double()},
                    {"weight_approx", row.weight.to_double()}});
  }
  return {{"columns",
           {"K", "grid_point", "weight", "grid_point_approx", "weight_approx"}},
          {"rows", std::move(rows)}};
}

}  // namespace definetti
