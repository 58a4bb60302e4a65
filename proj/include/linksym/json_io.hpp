#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "linksym/linking.hpp"
#include "linksym/rotation.hpp"
#include "linksym/seifert.hpp"
#include "linksym/subgroups.hpp"
#include "linksym/tree.hpp"
#include "linksym/whitten.hpp"

namespace linksym {

// Ordered JSON keeps key order stable, so identical inputs serialize to
// byte-identical reports.
using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const ojson& require(const ojson& j, const char* key) {
  if (!j.contains(key)) throw parse_error(std::string("missing field: ") + key);
  return j.at(key);
}

}  // namespace detail

// --- group descriptors -------------------------------------------------------

inline ojson group_to_json(const FiniteGroup& g) {
  ojson j;
  j["degree"] = g.degree();
  ojson gens = ojson::array();
  for (const auto& p : g.generators()) {
    ojson row = ojson::array();
    for (Point x : p.images()) row.push_back(static_cast<int>(x));
    gens.push_back(std::move(row));
  }
  j["generators"] = std::move(gens);
  return j;
}

inline FiniteGroup group_from_json(const ojson& j, ClosureLimits limits = {}) {
  std::size_t degree = detail::require(j, "degree").get<std::size_t>();
  std::vector<Perm> gens;
  for (const auto& row : detail::require(j, "generators"))
    gens.push_back(Perm::from_ints(row.get<std::vector<int>>()));
  return FiniteGroup::closure(degree, std::move(gens), limits);
}

inline ojson subgroup_to_json(const SubgroupRecord& r) {
  ojson j;
  j["order"] = r.order;
  j["members"] = r.members;
  if (r.class_id >= 0) j["class"] = r.class_id;
  return j;
}

inline ojson subgroup_list_to_json(const std::vector<SubgroupRecord>& records) {
  ojson arr = ojson::array();
  for (const auto& r : records) arr.push_back(subgroup_to_json(r));
  return arr;
}

// --- Whitten elements and links ----------------------------------------------

inline ojson whitten_to_json(const WhittenElement& s) {
  ojson j;
  j["eta"] = s.eta.value();
  ojson eps = ojson::array();
  for (Sign e : s.eps) eps.push_back(e.value());
  j["eps"] = std::move(eps);
  ojson rho = ojson::array();
  for (Point x : s.rho.images()) rho.push_back(static_cast<int>(x) + 1);
  j["rho"] = std::move(rho);
  return j;
}

inline WhittenElement whitten_from_json(const ojson& j) {
  WhittenElement s;
  s.eta = Sign::from_int(detail::require(j, "eta").get<int>());
  for (const auto& e : detail::require(j, "eps"))
    s.eps.push_back(Sign::from_int(e.get<int>()));
  std::vector<int> rho = detail::require(j, "rho").get<std::vector<int>>();
  for (int& x : rho) --x;  // 1-based on the wire
  s.rho = Perm::from_ints(rho);
  s.check();
  return s;
}

inline ojson linking_to_json(const LinkingMatrix& m) {
  ojson j;
  j["n"] = m.n;
  j["lk"] = m.entries;
  return j;
}

inline LinkingMatrix linking_from_json(const ojson& j) {
  std::size_t n = detail::require(j, "n").get<std::size_t>();
  auto entries =
      detail::require(j, "lk").get<std::vector<std::vector<long long>>>();
  if (entries.size() != n) throw parse_error("link: lk size disagrees with n");
  return LinkingMatrix::from_entries(std::move(entries));
}

// --- trees --------------------------------------------------------------------

inline ojson tree_to_json(const LabeledTree& t) {
  ojson j;
  j["vertices"] = t.vertex_count;
  ojson edges = ojson::array();
  for (auto [u, v] : t.edges) edges.push_back(ojson::array({u, v}));
  j["edges"] = std::move(edges);
  ojson labels = ojson::object();
  for (const auto& [lbl, v] : t.labels) labels[std::to_string(lbl)] = v;
  j["labels"] = std::move(labels);
  return j;
}

inline LabeledTree tree_from_json(const ojson& j) {
  std::size_t vertices = detail::require(j, "vertices").get<std::size_t>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : detail::require(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw parse_error("tree: bad edge");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::map<int, int> labels;
  for (const auto& [key, val] : detail::require(j, "labels").items())
    labels[std::stoi(key)] = val.get<int>();
  return LabeledTree::make(vertices, std::move(edges), std::move(labels));
}

// --- reports -------------------------------------------------------------------

inline ojson a5only_report_to_json(const A5OnlyReport& rep) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["max_n"] = rep.max_n;
  j["flag"] = rep.flag;
  j["union_quotients"] = rep.union_quotients;
  ojson cells = ojson::array();
  for (const auto& c : rep.cells) {
    ojson cj;
    cj["group"] = c.group;
    cj["class"] = c.class_id;
    cj["subgroup_order"] = c.subgroup_order;
    cj["quotients"] = c.quotients;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

inline ojson projection_report_to_json(const ProjectionReport& rep) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["pair"] = rep.pair_name;
  j["subgroups_checked"] = rep.subgroups_checked;
  j["flag"] = rep.flag;
  j["mechanism_ok"] = rep.mechanism_ok;
  ojson cells = ojson::array();
  for (const auto& c : rep.cells) {
    ojson cj;
    cj["subgroup_class"] = c.class_id;
    cj["class_size"] = c.class_size;
    cj["subgroup_order"] = c.subgroup_order;
    cj["quotients"] = c.quotients;
    cj["witness_factor"] = c.witness_factor;
    cj["intersection_normal"] = c.intersection_normal;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

inline ojson locus_to_json(const Locus& locus) {
  ojson j;
  if (std::holds_alternative<int>(locus)) {
    j["type"] = "vertex";
    j["vertex"] = std::get<int>(locus);
  } else {
    auto [a, b] = std::get<std::pair<int, int>>(locus);
    j["type"] = "edge";
    j["edge"] = ojson::array({a, b});
  }
  return j;
}

}  // namespace linksym
