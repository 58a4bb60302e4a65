#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "linksym/group.hpp"

namespace linksym {

using IndexVec = std::vector<std::uint32_t>;

// A subgroup of a parent group, stored as sorted indices into the parent's
// canonical element list.
struct SubgroupRecord {
  std::uint64_t parent_hash = 0;
  IndexVec members;
  std::size_t order = 0;
  int class_id = -1;

  friend bool operator==(const SubgroupRecord& a, const SubgroupRecord& b) {
    return a.parent_hash == b.parent_hash && a.members == b.members;
  }
};

inline SubgroupRecord make_record(const FiniteGroup& g, IndexVec members) {
  SubgroupRecord r;
  r.parent_hash = g.descriptor_hash();
  r.order = members.size();
  r.members = std::move(members);
  return r;
}

namespace detail {

inline std::uint64_t index_set_hash(const IndexVec& v) {
  return fnv1a(v.data(), v.size() * sizeof(std::uint32_t));
}

// Deduplicating store of index sets, preserving insertion order.
struct IndexSetPool {
  std::vector<IndexVec> sets;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;

  // Returns (index, inserted-new).
  std::pair<std::uint32_t, bool> insert(IndexVec v) {
    std::uint64_t h = index_set_hash(v);
    auto& bucket = buckets[h];
    for (std::uint32_t idx : bucket)
      if (sets[idx] == v) return {idx, false};
    sets.push_back(std::move(v));
    bucket.push_back(static_cast<std::uint32_t>(sets.size() - 1));
    return {static_cast<std::uint32_t>(sets.size() - 1), true};
  }

  std::int64_t find(const IndexVec& v) const {
    auto it = buckets.find(index_set_hash(v));
    if (it == buckets.end()) return -1;
    for (std::uint32_t idx : it->second)
      if (sets[idx] == v) return idx;
    return -1;
  }
};

// Subgroup generated by `gen_indices`, as a sorted index vector.
inline IndexVec generated_subgroup(const CayleyTable& t, const IndexVec& gen_indices) {
  std::vector<char> in_set(t.order, 0);
  IndexVec result{t.identity};
  in_set[t.identity] = 1;
  std::deque<std::uint32_t> queue{t.identity};
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t g : gen_indices) {
      std::uint32_t y = t.product(x, g);
      if (!in_set[y]) {
        in_set[y] = 1;
        result.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

// Small generating sequence for a subgroup given by its member indices.
inline IndexVec greedy_generators(const CayleyTable& t, const IndexVec& members) {
  IndexVec gens;
  std::vector<char> have(t.order, 0);
  have[t.identity] = 1;
  std::size_t have_count = 1;
  for (std::uint32_t m : members) {
    if (have[m]) continue;
    gens.push_back(m);
    IndexVec closed = generated_subgroup(t, gens);
    for (std::uint32_t x : closed)
      if (!have[x]) {
        have[x] = 1;
        ++have_count;
      }
    if (have_count == members.size()) break;
  }
  return gens;
}

inline bool is_closed_subgroup(const CayleyTable& t, const IndexVec& members) {
  if (members.empty()) return false;
  std::vector<char> in_set(t.order, 0);
  for (std::uint32_t m : members) in_set[m] = 1;
  if (!in_set[t.identity]) return false;
  for (std::uint32_t a : members)
    for (std::uint32_t b : members)
      if (!in_set[t.product(a, b)]) return false;
  return true;
}

// Conjugacy classes of elements, each sorted, ordered by least member.
inline std::vector<IndexVec> element_classes(const CayleyTable& t,
                                             const IndexVec& group_gens) {
  std::vector<char> seen(t.order, 0);
  std::vector<IndexVec> classes;
  for (std::uint32_t i = 0; i < t.order; ++i) {
    if (seen[i]) continue;
    IndexVec cls{i};
    seen[i] = 1;
    std::deque<std::uint32_t> queue{i};
    while (!queue.empty()) {
      std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t g : group_gens) {
        std::uint32_t y = t.conjugate(g, x);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline bool is_normal_set(const CayleyTable& t, const IndexVec& members,
                          const IndexVec& group_gens) {
  std::vector<char> in_set(t.order, 0);
  for (std::uint32_t m : members) in_set[m] = 1;
  for (std::uint32_t g : group_gens)
    for (std::uint32_t m : members)
      if (!in_set[t.conjugate(g, m)]) return false;
  return true;
}

inline bool contains_all(const IndexVec& big, const IndexVec& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// All normal subgroups as sorted member vectors, via the join lattice of
// normal closures of element conjugacy classes.
inline std::vector<IndexVec> normal_subgroup_sets(const FiniteGroup& g) {
  const CayleyTable& t = g.table();
  const IndexVec& ggens = g.generator_indices();
  std::vector<IndexVec> class_list = element_classes(t, ggens);

  // Normal closure of each class; the subgroup generated by a full
  // conjugacy class is automatically normal.
  IndexSetPool atoms;
  std::vector<IndexVec> atom_gens;
  for (const auto& cls : class_list) {
    if (cls.size() == 1 && cls[0] == t.identity) continue;
    IndexVec closed = generated_subgroup(t, cls);
    auto [idx, fresh] = atoms.insert(std::move(closed));
    if (fresh) atom_gens.push_back(greedy_generators(t, atoms.sets[idx]));
  }

  IndexSetPool found;
  std::vector<IndexVec> gens_of;
  found.insert(IndexVec{t.identity});
  gens_of.push_back({});
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < atoms.sets.size(); ++a) {
      if (contains_all(found.sets[cur], atoms.sets[a])) continue;
      IndexVec joined_gens = gens_of[cur];
      joined_gens.insert(joined_gens.end(), atom_gens[a].begin(), atom_gens[a].end());
      IndexVec join = generated_subgroup(t, joined_gens);
      auto [idx, fresh] = found.insert(std::move(join));
      if (fresh) {
        gens_of.push_back(std::move(joined_gens));
        queue.push_back(idx);
      }
    }
  }
  std::vector<IndexVec> result = std::move(found.sets);
  std::sort(result.begin(), result.end(), [](const IndexVec& a, const IndexVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

}  // namespace detail

// Every subgroup, each exactly once, sorted by (order, member indices).
// Strategy: seed with the trivial group and extend by prime-power cyclic
// subgroups until the join lattice closes.  This reaches perfect subgroups
// (an A5 inside a catalog group) as joins of their cyclic pieces, which a
// strictly normalizer-based extension pass would miss.
inline std::vector<SubgroupRecord> all_subgroups(const FiniteGroup& g,
                                                 std::size_t max_subgroups = 500000) {
  const CayleyTable& t = g.table();

  auto is_prime_power = [](std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        while (n % p == 0) n /= p;
        return n == 1;
      }
    return true;
  };

  // Atoms: distinct cyclic subgroups of prime-power order, with a generator.
  detail::IndexSetPool atom_pool;
  IndexVec atom_gen;
  for (std::uint32_t e = 0; e < t.order; ++e) {
    if (!is_prime_power(t.elt_order[e])) continue;
    IndexVec cyc;
    std::uint32_t x = e;
    cyc.push_back(t.identity);
    while (x != t.identity) {
      cyc.push_back(x);
      x = t.product(x, e);
    }
    std::sort(cyc.begin(), cyc.end());
    auto [idx, fresh] = atom_pool.insert(std::move(cyc));
    if (fresh) atom_gen.push_back(e);
  }

  detail::IndexSetPool found;
  std::vector<IndexVec> gens_of;
  found.insert(IndexVec{t.identity});
  gens_of.push_back({});
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    for (std::size_t a = 0; a < atom_pool.sets.size(); ++a) {
      if (detail::contains_all(found.sets[cur], atom_pool.sets[a])) continue;
      IndexVec joined_gens = gens_of[cur];
      joined_gens.push_back(atom_gen[a]);
      IndexVec join = detail::generated_subgroup(t, joined_gens);
      auto [idx, fresh] = found.insert(std::move(join));
      if (fresh) {
        if (found.sets.size() > max_subgroups)
          throw enumeration_too_large("all_subgroups: subgroup count exceeds cap");
        gens_of.push_back(std::move(joined_gens));
        queue.push_back(idx);
      }
    }
  }

  std::vector<IndexVec> sets = std::move(found.sets);
  std::sort(sets.begin(), sets.end(), [](const IndexVec& a, const IndexVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupRecord> records;
  records.reserve(sets.size());
  for (auto& s : sets) records.push_back(make_record(g, std::move(s)));
  return records;
}

// Partition of all_subgroups(g) into conjugacy classes.  Classes are ordered
// by their representative (the lexicographically least member record); the
// records carry matching class ids.
inline std::vector<std::vector<SubgroupRecord>> conjugacy_classes_of_subgroups(
    const FiniteGroup& g) {
  std::vector<SubgroupRecord> subs = all_subgroups(g);
  const CayleyTable& t = g.table();

  detail::IndexSetPool pool;
  for (const auto& r : subs) pool.insert(r.members);

  std::vector<int> class_of(subs.size(), -1);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t i = 0; i < subs.size(); ++i) {
    if (class_of[i] >= 0) continue;
    int cid = static_cast<int>(classes.size());
    std::vector<std::uint32_t> orbit{i};
    class_of[i] = cid;
    std::deque<std::uint32_t> queue{i};
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop_front();
      for (std::uint32_t gi : g.generator_indices()) {
        IndexVec img;
        img.reserve(subs[cur].members.size());
        for (std::uint32_t m : subs[cur].members) img.push_back(t.conjugate(gi, m));
        std::sort(img.begin(), img.end());
        std::int64_t at = pool.find(img);
        if (at < 0)
          throw std::logic_error("conjugacy_classes_of_subgroups: conjugate missing");
        if (class_of[at] < 0) {
          class_of[at] = cid;
          orbit.push_back(static_cast<std::uint32_t>(at));
          queue.push_back(static_cast<std::uint32_t>(at));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }

  std::vector<std::vector<SubgroupRecord>> out;
  out.reserve(classes.size());
  for (int cid = 0; cid < static_cast<int>(classes.size()); ++cid) {
    std::vector<SubgroupRecord> cls;
    for (std::uint32_t idx : classes[cid]) {
      SubgroupRecord r = subs[idx];
      r.class_id = cid;
      cls.push_back(std::move(r));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

inline std::vector<SubgroupRecord> normal_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupRecord> records;
  for (auto& s : detail::normal_subgroup_sets(g)) records.push_back(make_record(g, std::move(s)));
  return records;
}

inline void check_record(const FiniteGroup& g, const SubgroupRecord& r) {
  if (r.parent_hash != g.descriptor_hash())
    throw std::invalid_argument("subgroup record does not belong to this group");
  if (!detail::is_closed_subgroup(g.table(), r.members))
    throw std::invalid_argument("subgroup record members are not a subgroup");
}

// Realizes a subgroup as a standalone FiniteGroup on the parent's points.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const IndexVec& members) {
  std::vector<Perm> elems, gens;
  elems.reserve(members.size());
  for (std::uint32_t m : members) elems.push_back(g.element(m));
  for (std::uint32_t gi : detail::greedy_generators(g.table(), members))
    gens.push_back(g.element(gi));
  if (gens.empty()) gens.push_back(Perm(g.degree()));
  return FiniteGroup::from_sorted_elements(g.degree(), std::move(gens),
                                           std::move(elems), g.limits());
}

inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const SubgroupRecord& r) {
  check_record(g, r);
  return subgroup_as_group(g, r.members);
}

// Quotient of g by a normal subgroup, realized as the permutation action on
// left cosets (regular on cosets).  Keeps the coset assignment and the
// quotient homomorphism on element indices.
struct QuotientResult {
  FiniteGroup group;
  IndexVec coset_of;  // parent element index -> coset (point) index
  IndexVec hom;       // parent element index -> quotient element index
};

inline QuotientResult quotient_by(const FiniteGroup& g, const IndexVec& normal_members) {
  // Index arithmetic through the group itself: groups above the table cap
  // (large direct products) still admit quotients by small subgroups.
  const std::uint32_t n = static_cast<std::uint32_t>(g.order());
  {
    std::vector<char> in_set(n, 0);
    for (std::uint32_t m : normal_members) {
      if (m >= n) throw std::invalid_argument("quotient: member index out of range");
      in_set[m] = 1;
    }
    if (!in_set[g.identity_index()])
      throw std::invalid_argument("quotient: N does not contain the identity");
    for (std::uint32_t a : normal_members)
      for (std::uint32_t b : normal_members)
        if (!in_set[g.product_index(a, b)])
          throw std::invalid_argument("quotient: N is not a subgroup");
    for (std::uint32_t gi : g.generator_indices())
      for (std::uint32_t m : normal_members)
        if (!in_set[g.conjugate_index(gi, m)])
          throw std::invalid_argument("quotient: N is not normal");
  }

  IndexVec coset_of(n, UINT32_MAX);
  IndexVec reps;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (std::uint32_t m : normal_members) coset_of[g.product_index(i, m)] = cid;
  }
  const std::size_t index = reps.size();

  std::vector<Perm> qgens;
  for (std::uint32_t gi : g.generator_indices()) {
    std::vector<Point> img(index);
    for (std::uint32_t c = 0; c < index; ++c)
      img[c] = static_cast<Point>(coset_of[g.product_index(gi, reps[c])]);
    qgens.push_back(Perm::from_images(img));
  }
  ClosureLimits lim = g.limits();
  lim.max_order = std::max(lim.max_order, index + 1);
  FiniteGroup q = FiniteGroup::closure(index, std::move(qgens), lim);
  if (q.order() != index)
    throw std::logic_error("quotient: coset action is not regular");

  // In the regular action an element is determined by the image of the
  // identity coset, which gives the homomorphism cheaply.
  std::uint32_t c0 = coset_of[g.identity_index()];
  IndexVec elt_at_point(index, UINT32_MAX);
  for (std::uint32_t e = 0; e < q.order(); ++e) {
    Point p = q.element(e)[c0];
    if (elt_at_point[p] != UINT32_MAX)
      throw std::logic_error("quotient: regular action collision");
    elt_at_point[p] = e;
  }
  IndexVec hom(n);
  for (std::uint32_t i = 0; i < n; ++i) hom[i] = elt_at_point[coset_of[i]];
  return QuotientResult{std::move(q), std::move(coset_of), std::move(hom)};
}

inline QuotientResult quotient_by(const FiniteGroup& g, const SubgroupRecord& r) {
  check_record(g, r);
  return quotient_by(g, r.members);
}

inline FiniteGroup quotient(const FiniteGroup& g, const SubgroupRecord& n) {
  return quotient_by(g, n).group;
}

// Isomorphism-class label (order, sorted element-order histogram).  Enough to
// tell apart all the simple groups this library can reach.
struct IsoLabel {
  std::uint64_t order = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_histogram;

  friend bool operator==(const IsoLabel&, const IsoLabel&) = default;
  friend bool operator<(const IsoLabel& a, const IsoLabel& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.order_histogram < b.order_histogram;
  }

  std::string to_string() const {
    std::string s = std::to_string(order) + "[";
    for (std::size_t i = 0; i < order_histogram.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(order_histogram[i].first) + ":" +
           std::to_string(order_histogram[i].second);
    }
    return s + "]";
  }

  // Friendly name for the labels that actually show up in reports.
  std::string display_name() const {
    static const IsoLabel a5{60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}};
    if (*this == a5) return "A5";
    return "simple:" + to_string();
  }
};

inline IsoLabel iso_label(const FiniteGroup& g) {
  return IsoLabel{g.order(), g.order_histogram()};
}

// Isomorphism-class labels of the nonabelian simple quotients of g.  G/N is
// simple exactly when N is a maximal proper normal subgroup, so only those
// quotients are materialized.
inline std::vector<IsoLabel> simple_nonabelian_quotients(const FiniteGroup& g) {
  std::vector<IndexVec> normals = detail::normal_subgroup_sets(g);
  std::vector<IsoLabel> labels;
  for (const auto& n : normals) {
    if (n.size() == g.order()) continue;
    bool maximal = true;
    for (const auto& m : normals) {
      if (m.size() <= n.size() || m.size() == g.order()) continue;
      if (detail::contains_all(m, n)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if ((g.order() / n.size()) <= 3) continue;  // prime-order quotient, abelian
    FiniteGroup q = quotient_by(g, n).group;
    if (q.is_abelian()) continue;
    labels.push_back(iso_label(q));
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

}  // namespace linksym
