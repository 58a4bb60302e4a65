// Independent oracles used to cross-check the library's algorithms.  These
// deliberately use the dumbest correct method available and share no code
// with the production paths they validate.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "linksym/group.hpp"
#include "linksym/subgroups.hpp"
#include "linksym/tree.hpp"

namespace oracles {

inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("LINKSYM_TEST_SEED"); env && *env)
    return std::strtoull(env, nullptr, 10);
  return 20250810ULL;
}

// Closure of a member set by repeated pairwise multiplication until stable.
inline std::set<std::uint32_t> naive_close(const linksym::CayleyTable& t,
                                           std::set<std::uint32_t> seed) {
  seed.insert(t.identity);
  for (;;) {
    std::set<std::uint32_t> next = seed;
    for (std::uint32_t a : seed)
      for (std::uint32_t b : seed) next.insert(t.product(a, b));
    if (next == seed) return seed;
    seed = std::move(next);
  }
}

// Every subgroup, found by growing each known subgroup by one element at a
// time.  Exponentially dumber than the production lattice walk but obviously
// complete.
inline std::vector<linksym::IndexVec> naive_all_subgroups(const linksym::FiniteGroup& g) {
  const linksym::CayleyTable& t = g.table();
  std::set<std::set<std::uint32_t>> found;
  std::vector<std::set<std::uint32_t>> queue;
  std::set<std::uint32_t> trivial{t.identity};
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::set<std::uint32_t> cur = queue.back();
    queue.pop_back();
    for (std::uint32_t e = 0; e < t.order; ++e) {
      if (cur.count(e)) continue;
      std::set<std::uint32_t> grown = cur;
      grown.insert(e);
      std::set<std::uint32_t> closed = naive_close(t, std::move(grown));
      if (found.insert(closed).second) queue.push_back(std::move(closed));
    }
  }
  std::vector<linksym::IndexVec> out;
  for (const auto& s : found) out.emplace_back(s.begin(), s.end());
  std::sort(out.begin(), out.end(),
            [](const linksym::IndexVec& a, const linksym::IndexVec& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

inline std::vector<linksym::IndexVec> naive_normal_subgroups(const linksym::FiniteGroup& g) {
  const linksym::CayleyTable& t = g.table();
  std::vector<linksym::IndexVec> out;
  for (const auto& members : naive_all_subgroups(g)) {
    std::set<std::uint32_t> s(members.begin(), members.end());
    bool normal = true;
    for (std::uint32_t x = 0; x < t.order && normal; ++x)
      for (std::uint32_t m : members)
        if (!s.count(t.conjugate(x, m))) {
          normal = false;
          break;
        }
    if (normal) out.push_back(members);
  }
  return out;
}

// All automorphisms of a tree by filtering every vertex permutation
// (factorial; keep vertex counts small).
inline std::vector<std::vector<int>> brute_tree_automorphisms(const linksym::LabeledTree& t) {
  std::set<std::pair<int, int>> edges(t.edges.begin(), t.edges.end());
  std::vector<int> perm(t.vertex_count);
  for (std::size_t i = 0; i < t.vertex_count; ++i) perm[i] = static_cast<int>(i);
  std::vector<std::vector<int>> autos;
  do {
    bool ok = true;
    for (auto [u, v] : t.edges) {
      int a = perm[u], b = perm[v];
      if (!edges.count({std::min(a, b), std::max(a, b)})) {
        ok = false;
        break;
      }
    }
    if (ok) autos.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return autos;
}

// Automorphisms of t inducing g on the labels, via the brute list.
inline std::vector<std::vector<int>> brute_label_extensions(const linksym::LabeledTree& t,
                                                            const linksym::Perm& g) {
  std::vector<std::vector<int>> out;
  for (const auto& a : brute_tree_automorphisms(t)) {
    bool ok = true;
    for (const auto& [lbl, v] : t.labels) {
      auto it = t.labels.find(static_cast<int>(g[static_cast<std::size_t>(lbl - 1)]) + 1);
      if (it == t.labels.end() || a[static_cast<std::size_t>(v)] != it->second) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace oracles
