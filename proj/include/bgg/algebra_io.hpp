#ifndef BGG_ALGEBRA_IO_HPP
#define BGG_ALGEBRA_IO_HPP

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "bgg/algebra.hpp"
#include "bgg/errors.hpp"

namespace bgg {

inline AlgebraData algebra_from_json(const nlohmann::json& j) {
  AlgebraData d;
  try {
    if (!j.is_object()) throw InputError("algebra file: top level must be an object");
    const auto& field = j.at("field");
    if (field.is_string() && (field.get<std::string>() == "Q")) {
      d.rational_field = true;
    } else if (field.is_number_integer()) {
      d.rational_field = false;
      d.prime = field.get<std::int64_t>();
    } else if (field.is_string()) {
      d.rational_field = false;
      try {
        d.prime = std::stoll(field.get<std::string>());
      } catch (const std::exception&) {
        throw InputError("algebra file: field must be \"Q\" or a prime");
      }
    } else {
      throw InputError("algebra file: field must be \"Q\" or a prime");
    }
    for (const auto& v : j.at("vertices"))
      d.vertices.push_back({v.at("name").get<std::string>(), v.at("length").get<int>()});
    for (const auto& c : j.at("order")) {
      if (!c.is_array() || c.size() != 2)
        throw InputError("algebra file: order entries must be pairs");
      d.order.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
    for (const auto& a : j.at("arrows"))
      d.arrows.push_back({a.at("name").get<std::string>(), a.at("from").get<std::string>(),
                          a.at("to").get<std::string>()});
    for (const auto& rel : j.at("relations")) {
      std::vector<AlgebraData::RelTerm> terms;
      for (const auto& t : rel) {
        AlgebraData::RelTerm term;
        const auto& c = t.at("coeff");
        term.coeff = c.is_string() ? c.get<std::string>() : c.dump();
        for (const auto& p : t.at("path")) term.path.push_back(p.get<std::string>());
        terms.push_back(std::move(term));
      }
      d.relations.push_back(std::move(terms));
    }
    d.path_bound = j.at("path_bound").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("algebra file: ") + e.what());
  }
  return d;
}

inline nlohmann::json algebra_to_json(const AlgebraData& d) {
  nlohmann::json j;
  if (d.rational_field)
    j["field"] = "Q";
  else
    j["field"] = d.prime;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : d.vertices) j["vertices"].push_back({{"name", v.name}, {"length", v.length}});
  j["order"] = nlohmann::json::array();
  for (const auto& [a, b] : d.order) j["order"].push_back({a, b});
  j["arrows"] = nlohmann::json::array();
  for (const auto& a : d.arrows)
    j["arrows"].push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
  j["relations"] = nlohmann::json::array();
  for (const auto& rel : d.relations) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& t : rel) jr.push_back({{"coeff", t.coeff}, {"path", t.path}});
    j["relations"].push_back(jr);
  }
  j["path_bound"] = d.path_bound;
  return j;
}

inline AlgebraData load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open algebra file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("algebra file " + path + ": " + e.what());
  }
  return algebra_from_json(j);
}

}  // namespace bgg

#endif
