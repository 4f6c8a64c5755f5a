#pragma once

/**
 * @file json_io.hpp
 * @brief JSON wire formats for elements, ring values, shapes, tables and
 *        reports (nlohmann::json).
 */

#include <json.hpp>

#include "wreath/characters.hpp"
#include "wreath/colored_perm.hpp"
#include "wreath/cyclotomic.hpp"
#include "wreath/model.hpp"
#include "wreath/rsk.hpp"

namespace wreath {

// {"r":3,"n":2,"perm":[2,1],"colors":[0,1]}
inline void to_json(nlohmann::json& j, const ColoredPermutation& g) {
  j = {{"r", g.r}, {"n", g.n}, {"perm", g.perm}, {"colors", g.colors}};
}

inline void from_json(const nlohmann::json& j, ColoredPermutation& g) {
  g.r = j.at("r").get<int>();
  g.n = j.at("n").get<int>();
  g.perm = j.at("perm").get<std::vector<int>>();
  g.colors = j.at("colors").get<std::vector<int>>();
  g.validate();
}

// {"r":4,"coeffs":[1,0,2,0]} -- raw, possibly unreduced, coefficients
inline void to_json(nlohmann::json& j, const CycEl& v) {
  j = {{"r", v.modulus()}, {"coeffs", v.raw()}};
}

inline void from_json(const nlohmann::json& j, CycEl& v) {
  v = CycEl(j.at("r").get<int>(),
            j.at("coeffs").get<std::vector<long long>>());
}

inline void to_json(nlohmann::json& j, const ClassType& ct) {
  j = {{"r", ct.r}, {"n", ct.n}, {"cycles_by_color", ct.cycles_by_color}};
}

inline void from_json(const nlohmann::json& j, ClassType& ct) {
  ct.r = j.at("r").get<int>();
  ct.n = j.at("n").get<int>();
  ct.cycles_by_color = j.at("cycles_by_color").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(ct.cycles_by_color.size()) != ct.r)
    throw std::invalid_argument("ClassType: need one length list per color");
  int total = 0;
  for (const auto& part : ct.cycles_by_color) {
    if (!is_valid_partition(part))
      throw std::invalid_argument("ClassType: length lists must be partitions");
    total += partition_size(part);
  }
  if (total != ct.n)
    throw std::invalid_argument("ClassType: cycle lengths must sum to n");
}

inline void to_json(nlohmann::json& j, const TableauPair& p) {
  j = {{"P", p.P}, {"Q", p.Q}};
}

inline void from_json(const nlohmann::json& j, TableauPair& p) {
  p.P = j.at("P").get<std::vector<Tableau>>();
  p.Q = j.at("Q").get<std::vector<Tableau>>();
}

inline void to_json(nlohmann::json& j, const CharacterTable& t) {
  nlohmann::json classes = nlohmann::json::array();
  for (size_t c = 0; c < t.classes.types.size(); ++c)
    classes.push_back({{"type", t.classes.types[c].cycles_by_color},
                       {"size", t.classes.sizes[c]},
                       {"representative", t.classes.reps[c]}});
  j = {{"r", t.r},
       {"n", t.n},
       {"order", t.order},
       {"shapes", t.shapes},
       {"classes", classes},
       {"values", t.values}};
}

inline void to_json(nlohmann::json& j, const ModelDecomposition& d) {
  j = {{"shapes", d.shapes}, {"multiplicities", d.multiplicities}};
}

inline void to_json(nlohmann::json& j, const ConjectureGroupReport& g) {
  j = {{"two_cycles", g.two_cycles},
       {"total_cycles", g.total_cycles},
       {"size", g.size},
       {"invariant", g.invariant},
       {"shapes", g.shapes},
       {"character_match", g.character_match}};
}

inline void to_json(nlohmann::json& j, const ConjectureReport& rep) {
  j = {{"r", rep.r},
       {"n", rep.n},
       {"groups", rep.groups},
       {"all_match", rep.all_match}};
}

}  // namespace wreath
