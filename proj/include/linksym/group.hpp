#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "linksym/perm.hpp"

namespace linksym {

struct ClosureLimits {
  std::size_t max_order = 10000;   // element-enumeration cap
  std::size_t max_table = 8192;    // multiplication-table cap (order, not degree)
};

// Index-based multiplication table of a finite group; all subgroup-lattice
// machinery runs on this instead of composing permutations.
struct CayleyTable {
  std::uint32_t order = 0;
  std::vector<std::uint16_t> mul;        // row-major: mul[i*order + j] = index of e_i * e_j
  std::vector<std::uint16_t> inv;        // index of inverse
  std::vector<std::uint32_t> elt_order;  // multiplicative order per element
  std::uint32_t identity = 0;

  std::uint32_t product(std::uint32_t i, std::uint32_t j) const {
    return mul[static_cast<std::size_t>(i) * order + j];
  }
  std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const {
    return product(product(g, x), inv[g]);
  }
};

// A finite group given as permutations of {0..degree-1}, with generators and
// the full element list in canonical (lexicographic) order.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Generates the group from `generators` by breadth-first closure.
  // Deterministic: the element list is sorted lexicographically.
  static FiniteGroup closure(std::size_t degree, std::vector<Perm> generators,
                             ClosureLimits limits = {}) {
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw std::invalid_argument("closure: generator degree mismatch");
    if (degree > 0xffff) throw enumeration_too_large("closure: degree exceeds 65535");

    std::vector<Perm> elems;
    ElementIndexMap map;
    elems.push_back(Perm(degree));
    map.insert(elems[0], 0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      Perm cur = elems[queue.front()];
      queue.pop_front();
      for (const auto& g : generators) {
        Perm next = cur * g;
        if (map.find(next, elems)) continue;
        if (elems.size() >= limits.max_order)
          throw enumeration_too_large("closure: group order exceeds cap " +
                                      std::to_string(limits.max_order));
        map.insert(next, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(std::move(next));
        queue.push_back(static_cast<std::uint32_t>(elems.size() - 1));
      }
    }
    std::sort(elems.begin(), elems.end(),
              [](const Perm& a, const Perm& b) { return (a <=> b) < 0; });
    return FiniteGroup(degree, std::move(generators), std::move(elems), limits);
  }

  // Wraps an element list already known to be closed (e.g. a verified
  // subgroup of another group).  `elements` must be sorted and closed.
  static FiniteGroup from_sorted_elements(std::size_t degree,
                                          std::vector<Perm> generators,
                                          std::vector<Perm> elements,
                                          ClosureLimits limits = {}) {
    return FiniteGroup(degree, std::move(generators), std::move(elements), limits);
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }
  const ClosureLimits& limits() const { return limits_; }

  std::optional<std::uint32_t> index_of(const Perm& p) const {
    return index_.find(p, elements_);
  }

  std::uint32_t identity_index() const { return identity_index_; }

  // Generator indices into the element list (deduplicated, identity dropped).
  const std::vector<std::uint32_t>& generator_indices() const {
    return generator_indices_;
  }

  const CayleyTable& table() const {
    static std::mutex build_mutex;
    std::lock_guard<std::mutex> lock(build_mutex);
    if (!table_) build_table();
    return *table_;
  }

  bool table_allowed() const { return elements_.size() <= limits_.max_table; }

  // Index arithmetic that works above the table cap by falling back to
  // permutation composition.
  std::uint32_t product_index(std::uint32_t i, std::uint32_t j) const {
    if (table_allowed()) return table().product(i, j);
    auto idx = index_.find(elements_[i] * elements_[j], elements_);
    if (!idx) throw std::logic_error("product_index: group not closed");
    return *idx;
  }

  std::uint32_t inverse_index(std::uint32_t i) const {
    if (table_allowed()) return table().inv[i];
    auto idx = index_.find(elements_[i].inverse(), elements_);
    if (!idx) throw std::logic_error("inverse_index: group not closed");
    return *idx;
  }

  std::uint32_t conjugate_index(std::uint32_t g, std::uint32_t x) const {
    return product_index(product_index(g, x), inverse_index(g));
  }

  // Orders of all elements, sorted histogram as (order, count) pairs.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> order_histogram() const {
    std::unordered_map<std::uint32_t, std::uint32_t> counts;
    for (const auto& e : elements_) counts[static_cast<std::uint32_t>(e.order())]++;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> hist(counts.begin(),
                                                              counts.end());
    std::sort(hist.begin(), hist.end());
    return hist;
  }

  bool is_abelian() const {
    const auto& t = table();
    for (std::uint32_t g : generator_indices_)
      for (std::uint32_t h : generator_indices_)
        if (t.product(g, h) != t.product(h, g)) return false;
    return true;
  }

  // Stable 64-bit descriptor of the group as a permutation group: degree plus
  // the canonical element sequence.  Equal groups hash equally across runs.
  std::uint64_t descriptor_hash() const {
    std::uint64_t h = fnv1a(&degree_, sizeof(degree_));
    for (const auto& e : elements_)
      h = fnv1a(e.images().data(), e.images().size() * sizeof(Point), h);
    return h;
  }

 private:
  // Hash map from permutation to element index that stores only indices; the
  // permutations themselves live in the element vector.
  struct ElementIndexMap {
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;

    void insert(const Perm& p, std::uint32_t idx) { buckets[p.hash()].push_back(idx); }

    std::optional<std::uint32_t> find(const Perm& p,
                                      const std::vector<Perm>& elems) const {
      auto it = buckets.find(p.hash());
      if (it == buckets.end()) return std::nullopt;
      for (std::uint32_t idx : it->second)
        if (elems[idx] == p) return idx;
      return std::nullopt;
    }
  };

  FiniteGroup(std::size_t degree, std::vector<Perm> generators,
              std::vector<Perm> elements, ClosureLimits limits)
      : degree_(degree),
        generators_(std::move(generators)),
        elements_(std::move(elements)),
        limits_(limits) {
    if (!std::is_sorted(elements_.begin(), elements_.end(),
                        [](const Perm& a, const Perm& b) { return (a <=> b) < 0; }))
      throw std::invalid_argument("FiniteGroup: element list not canonically sorted");
    for (std::uint32_t i = 0; i < elements_.size(); ++i)
      index_.insert(elements_[i], i);
    auto id = index_.find(Perm(degree_), elements_);
    if (!id) throw std::invalid_argument("FiniteGroup: identity missing from elements");
    identity_index_ = *id;
    for (const auto& g : generators_) {
      auto idx = index_.find(g, elements_);
      if (!idx) throw std::logic_error("FiniteGroup: generator not in element list");
      if (*idx == identity_index_) continue;
      if (std::find(generator_indices_.begin(), generator_indices_.end(), *idx) ==
          generator_indices_.end())
        generator_indices_.push_back(*idx);
    }
    // A group needs at least one generator index for orbit walks.
    if (generator_indices_.empty()) generator_indices_.push_back(identity_index_);
  }

  void build_table() const {
    const std::size_t n = elements_.size();
    if (n > limits_.max_table)
      throw enumeration_too_large("multiplication table: order " + std::to_string(n) +
                                  " exceeds table cap " +
                                  std::to_string(limits_.max_table));
    auto t = std::make_unique<CayleyTable>();
    t->order = static_cast<std::uint32_t>(n);
    t->identity = identity_index_;
    t->mul.assign(n * n, 0);

    // Rows for generators by direct composition, remaining rows by composing
    // index rows along a breadth-first walk from the identity.
    auto row = [&](std::uint32_t i) { return t->mul.begin() + static_cast<std::ptrdiff_t>(i) * static_cast<std::ptrdiff_t>(n); };
    for (std::size_t j = 0; j < n; ++j) row(identity_index_)[j] = static_cast<std::uint16_t>(j);
    std::vector<char> have_row(n, 0);
    have_row[identity_index_] = 1;
    for (std::uint32_t g : generator_indices_) {
      if (have_row[g]) continue;
      for (std::size_t j = 0; j < n; ++j)
        row(g)[j] = static_cast<std::uint16_t>(*index_.find(elements_[g] * elements_[j], elements_));
      have_row[g] = 1;
    }
    std::deque<std::uint32_t> queue{identity_index_};
    std::vector<char> visited(n, 0);
    visited[identity_index_] = 1;
    while (!queue.empty()) {
      std::uint32_t m = queue.front();
      queue.pop_front();
      for (std::uint32_t g : generator_indices_) {
        std::uint32_t k = row(g)[m];  // index of g * m
        if (!visited[k]) {
          if (!have_row[k]) {
            for (std::size_t j = 0; j < n; ++j) row(k)[j] = row(g)[row(m)[j]];
            have_row[k] = 1;
          }
          visited[k] = 1;
          queue.push_back(k);
        }
      }
    }

    t->inv.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (t->product(i, j) == identity_index_) {
          t->inv[i] = static_cast<std::uint16_t>(j);
          break;
        }
    t->elt_order.assign(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint32_t k = i, ord = 1;
      while (k != identity_index_) {
        k = t->product(k, i);
        ++ord;
      }
      t->elt_order[i] = ord;
    }
    table_ = std::shared_ptr<const CayleyTable>(std::move(t));
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  ClosureLimits limits_;
  ElementIndexMap index_;
  std::uint32_t identity_index_ = 0;
  std::vector<std::uint32_t> generator_indices_;
  mutable std::shared_ptr<const CayleyTable> table_;
};

// Greedy small generating sequence for a closed element set, computed by
// permutation hashing alone (no multiplication table needed).
inline std::vector<Perm> small_generating_set(const std::vector<Perm>& elements) {
  if (elements.empty()) throw std::invalid_argument("small_generating_set: empty set");
  const std::size_t degree = elements[0].degree();
  std::vector<Perm> gens;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> closed;
  std::vector<Perm> closed_list;
  auto contains = [&](const Perm& p) {
    auto it = closed.find(p.hash());
    if (it == closed.end()) return false;
    for (std::uint32_t i : it->second)
      if (closed_list[i] == p) return true;
    return false;
  };
  auto rebuild = [&]() {
    closed.clear();
    closed_list.clear();
    closed_list.push_back(Perm(degree));
    closed[closed_list[0].hash()].push_back(0);
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      Perm cur = closed_list[queue.front()];
      queue.pop_front();
      for (const auto& g : gens) {
        Perm next = cur * g;
        if (contains(next)) continue;
        closed[next.hash()].push_back(static_cast<std::uint32_t>(closed_list.size()));
        closed_list.push_back(std::move(next));
        queue.push_back(static_cast<std::uint32_t>(closed_list.size() - 1));
      }
    }
  };
  rebuild();
  for (const auto& e : elements) {
    if (contains(e)) continue;
    gens.push_back(e);
    rebuild();
    if (closed_list.size() == elements.size()) break;
  }
  if (gens.empty()) gens.push_back(Perm(degree));
  return gens;
}

}  // namespace linksym
