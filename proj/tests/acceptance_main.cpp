// Acceptance suite: every headline claim the library is responsible for,
// one pass/fail line each, wall-clock budgets enforced.  Exit 0 only if
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linksym/json_io.hpp"
#include "linksym/linking.hpp"
#include "linksym/rotation.hpp"
#include "linksym/seifert.hpp"
#include "linksym/tree.hpp"
#include "linksym/whitten.hpp"

using namespace linksym;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t acceptance_seed() {
  if (const char* env = std::getenv("LINKSYM_TEST_SEED"); env && *env)
    return std::strtoull(env, nullptr, 10);
  return 20250810ULL;
}

WhittenElement random_whitten(const FiniteGroup& gamma, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, gamma.order() - 1);
  return whitten_from_perm(gamma.element(pick(rng)));
}

Outcome criterion_gamma1_subgroups() {
  std::size_t count = all_subgroups(gamma_group(1)).size();
  return {count == 5, "subgroup count = " + std::to_string(count)};
}

Outcome criterion_gamma2_classes() {
  FiniteGroup g2 = gamma_group(2);
  std::size_t classes = conjugacy_classes_of_subgroups(g2).size();
  std::ostringstream os;
  os << "|Gamma_2| = " << g2.order() << ", classes = " << classes;
  return {g2.order() == 16 && classes == 27, os.str()};
}

Outcome criterion_s4_classes() {
  std::size_t classes = conjugacy_classes_of_subgroups(symmetric_group(4)).size();
  return {classes == 11, "classes = " + std::to_string(classes)};
}

Outcome criterion_gamma_orders() {
  std::ostringstream os;
  bool ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t expected = (std::size_t{1} << (n + 1));
    for (std::size_t k = 2; k <= n; ++k) expected *= k;
    std::size_t got = gamma_group(n).order();
    if (got != expected) ok = false;
    os << "n=" << n << ":" << got << (n < 5 ? " " : "");
  }
  return {ok, os.str()};
}

Outcome criterion_gamma2_missing() {
  FiniteGroup g2 = gamma_group(2);
  // Construction verifies isomorphism types (Z4, Z2^2, Z2^2, D4, Z2^3).
  auto entries = gamma2_missing_subgroups(g2);
  std::vector<std::size_t> orders;
  for (const auto& e : entries) orders.push_back(e.record.order);
  bool ok = entries.size() == 5 &&
            orders == std::vector<std::size_t>{4, 4, 4, 8, 8} &&
            entries[0].iso_name == "Z4" && entries[1].iso_name == "Z2xZ2" &&
            entries[2].iso_name == "Z2xZ2" && entries[3].iso_name == "D4" &&
            entries[4].iso_name == "Z2xZ2xZ2";
  std::ostringstream os;
  os << "orders";
  for (auto o : orders) os << " " << o;
  os << "; types verified (the dihedral entry is the order-8 dihedral group:"
        " its generator (1,(-1,1),tau) already has order 4)";
  return {ok, os.str()};
}

Outcome criterion_a5_only() {
  A5OnlyReport rep = verify_a5_only(30);
  std::ostringstream os;
  os << "flag=" << (rep.flag ? "true" : "false") << ", union={";
  for (std::size_t i = 0; i < rep.union_quotients.size(); ++i)
    os << (i ? "," : "") << rep.union_quotients[i];
  os << "}, cells=" << rep.cells.size();
  return {rep.flag && rep.union_quotients == std::vector<std::string>{"A5"}, os.str()};
}

Outcome criterion_so4_quotients() {
  auto catalog = binary_catalog(1);
  const GroupSpec* bt = nullptr;
  const GroupSpec* bi = nullptr;
  for (const auto& s : catalog) {
    if (s.kind == RotationKind::BinaryTetrahedral) bt = &s;
    if (s.kind == RotationKind::BinaryIcosahedral) bi = &s;
  }
  auto qi = simple_nonabelian_quotients(so4_model(*bi, *bi));
  auto qt = simple_nonabelian_quotients(so4_model(*bt, *bt));
  bool ok = qi.size() == 1 && qi[0].display_name() == "A5" && qt.empty();
  std::ostringstream os;
  os << "(2I,2I) -> {" << (qi.empty() ? "" : qi[0].display_name()) << "}, (2T,2T) -> {";
  for (const auto& q : qt) os << q.display_name();
  os << "}";
  return {ok, os.str()};
}

Outcome criterion_projection_pairs() {
  std::vector<std::pair<std::string, FiniteGroup>> pool = {
      {"C2", cyclic_group(2)},    {"S3", symmetric_group(3)},
      {"A4", alternating_group(4)}, {"S4", symmetric_group(4)},
      {"A5", alternating_group(5)}};
  std::size_t checked = 0;
  for (const auto& [n1, g1] : pool)
    for (const auto& [n2, g2] : pool) {
      ProjectionReport rep = projection_lemma_check(g1, g2, n1 + "x" + n2);
      checked += rep.subgroups_checked;
      if (!rep.flag || !rep.mechanism_ok)
        return {false, "failed on " + n1 + "x" + n2};
    }
  return {true, "25 pairs, " + std::to_string(checked) + " subgroups checked"};
}

Outcome criterion_tree_sweep() {
  // Exhaustive: every tree shape with at most 10 vertices whose leaves can
  // carry the n labels bijectively (the spanned-tree hypothesis: a JSJ
  // subtree spanned by the labeled pieces has every leaf labeled), every
  // assignment, for the alternating groups on 4 and 5 labels.  Whenever the
  // whole group acts, the invariant locus must be a vertex, since these
  // groups have no index-two subgroup.
  auto shapes = all_tree_shapes(10);
  std::size_t qualifying = 0;
  for (std::size_t n : {4, 5}) {
    FiniteGroup group = alternating_group(n);
    std::vector<Perm> gens = group.generators();
    for (const auto& shape : shapes) {
      auto adj = shape.adjacency();
      std::vector<int> leaves;
      for (std::size_t v = 0; v < shape.vertex_count; ++v)
        if (adj[v].size() <= 1 && shape.vertex_count > 1)
          leaves.push_back(static_cast<int>(v));
      if (leaves.size() != n) continue;
      std::vector<int> assign(leaves);
      std::sort(assign.begin(), assign.end());
      do {
        LabeledTree t = shape;
        for (std::size_t l = 0; l < n; ++l)
          t.labels[static_cast<int>(l) + 1] = assign[l];
        bool gens_extend = true;
        for (const Perm& g : gens)
          if (!label_extension_exists(t, g)) {
            gens_extend = false;
            break;
          }
        if (!gens_extend) continue;
        auto action = make_tree_action(t, group);
        if (!action) continue;
        ++qualifying;
        if (!requires_vertex(*action))
          return {false, "alternating group unexpectedly has an index-2 subgroup"};
        Locus locus = invariant_locus(t, *action);
        if (!std::holds_alternative<int>(locus)) {
          std::ostringstream os;
          os << "edge locus on a " << shape.vertex_count << "-vertex tree";
          return {false, os.str()};
        }
      } while (std::next_permutation(assign.begin(), assign.end()));
    }
  }
  if (qualifying == 0) return {false, "sweep was vacuous"};
  return {true, std::to_string(qualifying) + " qualifying actions, all vertex loci"};
}

Outcome criterion_branch_structure() {
  for (std::size_t legs = 3; legs <= 6; ++legs)
    for (std::size_t len = 1; len <= 3; ++len) {
      std::vector<std::pair<int, int>> edges;
      std::map<int, int> labels;
      int next = 1;
      for (std::size_t l = 0; l < legs; ++l) {
        int prev = 0;
        for (std::size_t k = 0; k < len; ++k) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
        labels[static_cast<int>(l) + 1] = prev;
      }
      LabeledTree t = LabeledTree::make(1 + legs * len, edges, labels);
      if (!check_branch_structure(t, legs))
        return {false, "rejected a spider"};
    }
  LabeledTree dbl = LabeledTree::make(
      8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}},
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  if (check_branch_structure(dbl, 6)) return {false, "accepted the double star"};
  return {true, "spiders 3..6 x lengths 1..3 accepted, double star rejected"};
}

Outcome criterion_seifert_sweep() {
  std::size_t cases = 0;
  for (long long a = -5; a <= 5; ++a)
    for (long long b = -5; b <= 5; ++b) {
      if (b == 0) continue;
      for (long long d = -5; d <= 5; ++d)
        for (long long c = -5; c <= 5; ++c) {
          long long det = a * c - b * d;
          if (det != 1 && det != -1) continue;
          for (long long w = -5; w <= 5; ++w) {
            ++cases;
            if (!check_transposition(AttachData{a, b, d, c}, w)) {
              std::ostringstream os;
              os << "failed at (" << a << "," << b << "," << d << "," << c
                 << "), w=" << w;
              return {false, os.str()};
            }
          }
        }
    }
  return {true, std::to_string(cases) + " cases, all transpose"};
}

Outcome criterion_action_laws() {
  std::mt19937_64 rng(acceptance_seed());
  FiniteGroup g3 = gamma_group(3);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long long> entry(-3, 3);
  for (int i = 0; i < 1000; ++i) {
    WhittenElement s = random_whitten(g3, rng);
    WhittenElement t = random_whitten(g3, rng);
    LinkRecord l = link_record_identity(3);
    l.ambient = coin(rng) ? Sign::plus() : Sign::minus();
    for (auto& o : l.orients) o = coin(rng) ? Sign::plus() : Sign::minus();
    std::vector<Point> ids{0, 1, 2};
    std::shuffle(ids.begin(), ids.end(), rng);
    l.comp_ids = Perm::from_images(ids);
    if (!(act_on_link(gamma_mul(s, t), l) == act_on_link(s, act_on_link(t, l))))
      return {false, "link action law failed at trial " + std::to_string(i)};
  }
  for (int i = 0; i < 500; ++i) {
    WhittenElement s = random_whitten(g3, rng);
    WhittenElement t = random_whitten(g3, rng);
    LinkingMatrix m = LinkingMatrix::zero(3);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = r + 1; c < 3; ++c)
        m.entries[r][c] = m.entries[c][r] = entry(rng);
    if (!(act_on_linking_matrix(gamma_mul(s, t), m) ==
          act_on_linking_matrix(s, act_on_linking_matrix(t, m))))
      return {false, "matrix action law failed at trial " + std::to_string(i)};
  }
  return {true, "1000 link triples + 500 matrix triples, zero failures"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Gamma_1 has exactly 5 subgroups", 1.0, criterion_gamma1_subgroups},
      {2, "|Gamma_2| = 16 with 27 conjugacy classes of subgroups", 10.0,
       criterion_gamma2_classes},
      {3, "S_4 has 11 conjugacy classes of subgroups", 5.0, criterion_s4_classes},
      {4, "|Gamma_n| = 2^(n+1) n! for n = 1..5", 10.0, criterion_gamma_orders},
      {5, "the five unrealized Gamma_2 subgroups have the published structures",
       5.0, criterion_gamma2_missing},
      {6, "catalog scan up to 30: A5 is the only simple quotient", 60.0,
       criterion_a5_only},
      {7, "SO(4) models: (2I,2I) -> {A5}, (2T,2T) -> {}", 60.0,
       criterion_so4_quotients},
      {8, "projection lemma on all 25 factor pairs", 300.0,
       criterion_projection_pairs},
      {9, "exhaustive tree sweep: no-index-2 actions pin a vertex", 300.0,
       criterion_tree_sweep},
      {10, "branch structure: spiders accepted, double star rejected", 1.0,
       criterion_branch_structure},
      {11, "Seifert transposition sweep (entries <= 5, |w| <= 5)", 30.0,
       criterion_seifert_sweep},
      {12, "action laws on seeded random triples", 10.0, criterion_action_laws},
  };

  bool all_pass = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool timely = elapsed < c.budget_seconds;
    bool pass = out.pass && timely;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %2d: %s (%.2fs%s) — %s\n", pass ? "PASS" : "FAIL",
                c.id, c.title, elapsed,
                timely ? "" : (" > " + std::to_string(c.budget_seconds) + "s").c_str(),
                out.detail.c_str());
  }
  std::printf("%s\n", all_pass ? "ACCEPTANCE: ALL CRITERIA PASS"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
