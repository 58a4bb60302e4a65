#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "linksym/cache.hpp"
#include "linksym/json_io.hpp"

using namespace linksym;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("linksym-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("group serialization round trip") {
  FiniteGroup s4 = symmetric_group(4);
  ojson j = group_to_json(s4);
  FiniteGroup back = group_from_json(j);
  CHECK(back.degree() == s4.degree());
  CHECK(back.elements() == s4.elements());
  CHECK(group_to_json(back) == j);
}

TEST_CASE("whitten element serialization uses 1-based slots") {
  WhittenElement s;
  s.eta = Sign::minus();
  s.eps = {Sign::plus(), Sign::minus()};
  s.rho = Perm::from_cycles(2, {{0, 1}});
  ojson j = whitten_to_json(s);
  CHECK(j["rho"] == ojson::array({2, 1}));
  CHECK(j["eta"] == -1);
  CHECK(whitten_from_json(j) == s);
}

TEST_CASE("linking matrix serialization validates") {
  LinkingMatrix m = LinkingMatrix::from_entries({{0, 2}, {2, 0}});
  ojson j = linking_to_json(m);
  CHECK(linking_from_json(j) == m);
  ojson bad = j;
  bad["lk"][0][0] = 1;
  CHECK_THROWS_AS(linking_from_json(bad), std::invalid_argument);
  bad = j;
  bad["n"] = 3;
  CHECK_THROWS_AS(linking_from_json(bad), parse_error);
}

TEST_CASE("tree serialization round trip") {
  LabeledTree t = LabeledTree::make(4, {{0, 1}, {1, 2}, {1, 3}}, {{1, 0}, {2, 2}, {3, 3}});
  ojson j = tree_to_json(t);
  CHECK(tree_from_json(j) == t);
  ojson bad = j;
  bad["edges"].push_back(ojson::array({0, 2}));
  CHECK_THROWS_AS(tree_from_json(bad), std::invalid_argument);
}

TEST_CASE("reports parse as JSON and carry the schema version") {
  A5OnlyReport rep = verify_a5_only(3);
  ojson j = a5only_report_to_json(rep);
  ojson reparsed = ojson::parse(j.dump());
  CHECK(reparsed["schema_version"] == kSchemaVersion);
  CHECK(reparsed["flag"].is_boolean());

  ProjectionReport pr =
      projection_lemma_check(cyclic_group(2), cyclic_group(2), "C2xC2");
  ojson pj = projection_report_to_json(pr);
  CHECK(ojson::parse(pj.dump())["subgroups_checked"] == 5);

  Locus v = 3;
  CHECK(locus_to_json(v)["type"] == "vertex");
  Locus e = std::make_pair(1, 2);
  CHECK(locus_to_json(e)["edge"] == ojson::array({1, 2}));
}

TEST_CASE("serialization is deterministic") {
  FiniteGroup g2 = gamma_group(2);
  auto classes1 = conjugacy_classes_of_subgroups(g2);
  auto classes2 = conjugacy_classes_of_subgroups(g2);
  ojson a = ojson::array(), b = ojson::array();
  for (const auto& cls : classes1) a.push_back(subgroup_list_to_json(cls));
  for (const auto& cls : classes2) b.push_back(subgroup_list_to_json(cls));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("cache stores and reloads byte-identical payloads") {
  TempDir tmp;
  Cache cache(tmp.path);
  FiniteGroup s4 = symmetric_group(4);
  std::string key = Cache::key_for(s4.descriptor_hash()) + "-subgroups";

  ojson payload;
  payload["subgroup_count"] = all_subgroups(s4).size();
  payload["subgroups"] = subgroup_list_to_json(all_subgroups(s4));

  CHECK_FALSE(cache.load(key).has_value());
  cache.store(key, payload);
  auto hit = cache.load(key);
  REQUIRE(hit.has_value());
  CHECK(hit->dump() == payload.dump());
}

TEST_CASE("tampered cache entries are treated as misses") {
  TempDir tmp;
  Cache cache(tmp.path);
  ojson payload;
  payload["value"] = 42;
  cache.store("deadbeef", payload);
  REQUIRE(cache.load("deadbeef").has_value());

  // Corrupt the stored payload without fixing the checksum.
  std::filesystem::path file = tmp.path / "deadbeef.json";
  std::ifstream in(file);
  ojson entry = ojson::parse(in);
  in.close();
  entry["payload"]["value"] = 43;
  std::ofstream out(file, std::ios::trunc);
  out << entry.dump();
  out.close();
  CHECK_FALSE(cache.load("deadbeef").has_value());

  // Unparsable entries are also misses.
  std::ofstream garbage(file, std::ios::trunc);
  garbage << "{not json";
  garbage.close();
  CHECK_FALSE(cache.load("deadbeef").has_value());
}

TEST_CASE("a disabled cache never hits") {
  Cache cache;
  CHECK_FALSE(cache.enabled());
  ojson payload;
  payload["x"] = 1;
  cache.store("key", payload);
  CHECK_FALSE(cache.load("key").has_value());
}
