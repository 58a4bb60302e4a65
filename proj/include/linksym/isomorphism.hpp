#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "linksym/subgroups.hpp"

namespace linksym {

namespace detail {

// Commutator subgroup as member indices (normal closure of generator
// commutators).
inline IndexVec derived_subgroup_set(const FiniteGroup& g) {
  const CayleyTable& t = g.table();
  const IndexVec& gens = g.generator_indices();
  IndexVec comms;
  for (std::uint32_t a : gens)
    for (std::uint32_t b : gens) {
      std::uint32_t c = t.product(t.product(t.inv[a], t.inv[b]), t.product(a, b));
      comms.push_back(c);
    }
  // Close under conjugation by group generators, then generate.
  IndexVec closure_gens = comms;
  for (;;) {
    IndexVec sub = generated_subgroup(t, closure_gens);
    std::vector<char> in_set(t.order, 0);
    for (std::uint32_t m : sub) in_set[m] = 1;
    IndexVec fresh;
    for (std::uint32_t gi : gens)
      for (std::uint32_t m : closure_gens) {
        std::uint32_t c = t.conjugate(gi, m);
        if (!in_set[c]) {
          in_set[c] = 1;
          fresh.push_back(c);
        }
      }
    if (fresh.empty()) return sub;
    closure_gens.insert(closure_gens.end(), fresh.begin(), fresh.end());
  }
}

inline std::size_t center_size(const FiniteGroup& g) {
  const CayleyTable& t = g.table();
  std::size_t n = 0;
  for (std::uint32_t x = 0; x < t.order; ++x) {
    bool central = true;
    for (std::uint32_t gi : g.generator_indices())
      if (t.product(x, gi) != t.product(gi, x)) {
        central = false;
        break;
      }
    if (central) ++n;
  }
  return n;
}

// Extends the generator assignment gens[i] -> images[i] to an injective
// homomorphism on the subgroup the prefix generates; returns the partial
// element map (UINT32_MAX off the subgroup) or empty on inconsistency.
inline IndexVec extend_iso(const FiniteGroup& g, const FiniteGroup& h,
                           const IndexVec& gens, const IndexVec& images) {
  const CayleyTable& tg = g.table();
  const CayleyTable& th = h.table();
  const std::uint32_t UNDEF = UINT32_MAX;
  IndexVec map(tg.order, UNDEF);
  std::vector<char> used(th.order, 0);
  map[tg.identity] = th.identity;
  used[th.identity] = 1;
  std::deque<std::uint32_t> queue{tg.identity};
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::uint32_t xg = tg.product(x, gens[i]);
      std::uint32_t yh = th.product(map[x], images[i]);
      if (map[xg] == UNDEF) {
        if (used[yh]) return {};
        map[xg] = yh;
        used[yh] = 1;
        queue.push_back(xg);
      } else if (map[xg] != yh) {
        return {};
      }
    }
  }
  return map;
}

template <typename Visit>
inline void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                 bool first_image_up_to_conjugacy, Visit visit) {
  if (g.order() != h.order()) return;
  if (g.order_histogram() != h.order_histogram()) return;
  const CayleyTable& tg = g.table();
  const CayleyTable& th = h.table();

  IndexVec gens = greedy_generators(tg, [&] {
    IndexVec all(tg.order);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());
  if (gens.empty()) {  // trivial group
    IndexVec map{th.identity};
    visit(map);
    return;
  }

  // Per-generator candidate image lists, filtered by element order.
  std::vector<IndexVec> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::uint32_t y = 0; y < th.order; ++y)
      if (th.elt_order[y] == tg.elt_order[gens[i]]) candidates[i].push_back(y);
    if (candidates[i].empty()) return;
  }
  if (first_image_up_to_conjugacy) {
    // Any isomorphism can be composed with an inner automorphism of h, so
    // the first image only matters up to conjugacy.
    std::vector<IndexVec> classes = element_classes(th, h.generator_indices());
    std::vector<char> is_rep(th.order, 0);
    for (const auto& cls : classes) is_rep[cls.front()] = 1;
    IndexVec filtered;
    for (std::uint32_t y : candidates[0])
      if (is_rep[y]) filtered.push_back(y);
    candidates[0] = std::move(filtered);
  }

  IndexVec images(gens.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      IndexVec full = extend_iso(g, h, gens, images);
      if (full.empty()) return true;
      // Greedy generators generate all of g, so the extension is total and,
      // with |g| = |h|, bijective.
      return visit(full);
    }
    for (std::uint32_t y : candidates[i]) {
      images[i] = y;
      IndexVec prefix_gens(gens.begin(),
                           gens.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      IndexVec prefix_imgs(images.begin(),
                           images.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      if (extend_iso(g, h, prefix_gens, prefix_imgs).empty()) continue;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

}  // namespace detail

// True iff an isomorphism of abstract groups exists.  Invariant pruning
// (order, element-order histogram, abelianity, center and derived-subgroup
// sizes) runs first; generator-image backtracking decides the rest.
inline bool isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  if (g.order_histogram() != h.order_histogram()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  if (g.order() > 2) {
    if (detail::center_size(g) != detail::center_size(h)) return false;
    if (detail::derived_subgroup_set(g).size() != detail::derived_subgroup_set(h).size())
      return false;
  }
  bool found = false;
  detail::for_each_isomorphism(g, h, /*first_image_up_to_conjugacy=*/true,
                               [&](const IndexVec&) {
                                 found = true;
                                 return false;  // stop
                               });
  return found;
}

// Every isomorphism g -> h as an element-index map, in deterministic order.
inline std::vector<IndexVec> all_isomorphisms(const FiniteGroup& g,
                                              const FiniteGroup& h) {
  std::vector<IndexVec> result;
  detail::for_each_isomorphism(g, h, /*first_image_up_to_conjugacy=*/false,
                               [&](const IndexVec& map) {
                                 result.push_back(map);
                                 return true;
                               });
  return result;
}

}  // namespace linksym
