#include "regset/json_io.hpp"

#include <json.hpp>

namespace regset {

using nlohmann::json;

std::string group_to_json(const FiniteGroup& g) {
  const int n = g.order();
  json mul = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(g.op(i, j));
    mul.push_back(std::move(row));
  }
  json out{{"order", n}, {"identity", g.identity()}, {"mul", std::move(mul)},
           {"labels", g.labels()}};
  return out.dump();
}

FiniteGroup group_from_json(const std::string& text, TableCheck check, unsigned seed) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(std::string("invalid JSON: ") + e.what());
  }
  require(j.is_object() && j.contains("order") && j.contains("mul"),
          "group JSON must be an object with \"order\" and \"mul\"");
  int n = j.at("order").get<int>();
  auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
  require(static_cast<int>(mul.size()) == n, "group JSON: mul has wrong number of rows");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  FiniteGroup g = FiniteGroup::from_table(mul, std::move(labels), check, seed);
  if (j.contains("identity"))
    require(g.identity() == j.at("identity").get<int>(),
            "group JSON: declared identity does not match the table");
  return g;
}

std::string element_set_to_json(const ElementSet& s) {
  return json(s.members()).dump();
}

ElementSet element_set_from_json(const std::string& text, int parent_order) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(std::string("invalid JSON: ") + e.what());
  }
  require(j.is_array(), "element set JSON must be an array of indices");
  return ElementSet(parent_order, j.get<std::vector<int>>());
}

std::string certificate_to_json(const RegularCertificate& cert) {
  json out{{"group", json::parse(group_to_json(cert.graph.group()))},
           {"S", cert.graph.connection().members()},
           {"D", cert.set.members()},
           {"a", cert.a},
           {"b", cert.b}};
  return out.dump();
}

std::string covering_map_to_json(const CoveringMap& f) {
  json out{{"k", f.k},
           {"target_order", f.target.num_vertices()},
           {"assignment", f.assignment}};
  return out.dump();
}

}  // namespace regset
