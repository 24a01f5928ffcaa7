#ifndef MRING_SPACE_DOC_HPP
#define MRING_SPACE_DOC_HPP

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>

#include "mring/measurable_fn.hpp"

namespace mring {

/// Space description document: points, generator subsets, optional named
/// function literals.
struct SpaceDoc {
  std::string name;
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> generators;
  std::map<std::string, std::map<std::string, std::string>> functions;

  static SpaceDoc parse(const nlohmann::json& doc) {
    SpaceDoc out;
    try {
      out.name = doc.value("name", "space");
      if (!doc.contains("points")) throw validation_error("document lacks a 'points' field");
      out.points = doc.at("points").get<std::vector<std::string>>();
      if (doc.contains("generators"))
        out.generators = doc.at("generators").get<std::vector<std::vector<std::string>>>();
      if (doc.contains("functions"))
        for (const auto& [fname, values] : doc.at("functions").items())
          for (const auto& [label, literal] : values.items())
            out.functions[fname][label] = literal.is_string()
                                              ? literal.get<std::string>()
                                              : std::to_string(literal.get<long long>());
    } catch (const nlohmann::json::exception& e) {
      throw validation_error(std::string("malformed space document: ") + e.what());
    }
    return out;
  }

  static SpaceDoc load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open space document: " + path);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw validation_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse(doc);
  }

  SpacePtr build_space() const {
    GroundSet ground(points);
    std::vector<Subset> gens;
    for (const auto& labels : generators) {
      Subset s = Subset::empty(ground.size());
      for (const auto& label : labels) s = s.with(ground.index_of(label));
      gens.push_back(s);
    }
    return MeasurableSpace::generate(ground, gens);
  }

  MeasurableFn build_function(const SpacePtr& space, const std::string& fname) const {
    auto it = functions.find(fname);
    if (it == functions.end()) throw validation_error("unknown function name: " + fname);
    std::vector<Rational> values(static_cast<std::size_t>(space->points()));
    std::vector<bool> seen(values.size(), false);
    for (const auto& [label, literal] : it->second) {
      int p = space->ground().index_of(label);
      values[static_cast<std::size_t>(p)] = parse_rational(literal);
      seen[static_cast<std::size_t>(p)] = true;
    }
    for (std::size_t p = 0; p < seen.size(); ++p)
      if (!seen[p])
        throw validation_error("function " + fname + " misses point " +
                               space->ground().label(static_cast<int>(p)));
    return MeasurableFn::make(space, std::move(values));
  }
};

/// Canonical serialization: each member as a sorted label list, the family in
/// the canonical (cardinality, bit pattern) order.
inline nlohmann::ordered_json serialize_algebra(const MeasurableSpace& space) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& s : space.algebra().sets()) {
    nlohmann::ordered_json member = nlohmann::ordered_json::array();
    for (int p : s.members()) member.push_back(space.ground().label(p));
    out.push_back(member);
  }
  return out;
}

inline std::string render_algebra_text(const MeasurableSpace& space) {
  std::string out;
  for (const auto& s : space.algebra().sets()) out += "  " + render_subset(s, space.ground()) + "\n";
  return out;
}

}  // namespace mring

#endif
