#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linksym/isomorphism.hpp"
#include "linksym/named_groups.hpp"
#include "linksym/products.hpp"
#include "linksym/subgroups.hpp"

namespace linksym {

enum class RotationKind {
  Cyclic,
  Dihedral,
  Tetrahedral,
  Octahedral,
  Icosahedral,
  BinaryCyclic,
  BinaryDihedral,
  BinaryTetrahedral,
  BinaryOctahedral,
  BinaryIcosahedral,
};

// A finite rotation group (or its binary cover) as an abstract permutation
// group.  Binary kinds carry their central involution.
struct GroupSpec {
  RotationKind kind;
  std::size_t param = 0;  // n for the cyclic/dihedral families
  std::string name;
  FiniteGroup realization;
  std::optional<Perm> center_involution;
};

namespace detail {

// Dicyclic group of order 4n: <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>,
// in its left-regular action on the normal forms a^k b^t.
inline FiniteGroup dicyclic_group(std::size_t n) {
  const std::size_t m = 2 * n;
  auto idx = [m](std::size_t k, std::size_t t) { return static_cast<Point>(k + m * t); };
  std::vector<Point> a_img(2 * m), b_img(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    a_img[idx(k, 0)] = idx((k + 1) % m, 0);
    a_img[idx(k, 1)] = idx((k + 1) % m, 1);
    b_img[idx(k, 0)] = idx((m - k) % m, 1);
    b_img[idx(k, 1)] = idx((n + m - k) % m, 0);
  }
  return FiniteGroup::closure(2 * m,
                              {Perm::from_images(a_img), Perm::from_images(b_img)});
}

inline Perm dicyclic_center_involution(std::size_t n) {
  const std::size_t m = 2 * n;
  std::vector<Point> img(2 * m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t t = 0; t < 2; ++t)
      img[k + m * t] = static_cast<Point>((k + n) % m + m * t);
  return Perm::from_images(img);
}

// The binary octahedral group as 2x2 matrices over F_7 acting on the 48
// nonzero vectors: the quaternion units i, j, the order-3 unit
// (-1+i+j+k)/2 and the order-8 unit (1+i)/sqrt(2), all reduced mod 7.
inline FiniteGroup binary_octahedral_group() {
  const std::uint32_t p = 7;
  auto mat_perm = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                      std::uint32_t d) {
    std::vector<Point> img(p * p - 1);
    for (std::uint32_t y = 0; y < p; ++y)
      for (std::uint32_t x = 0; x < p; ++x) {
        if (x == 0 && y == 0) continue;
        std::uint32_t nx = (a * x + b * y) % p;
        std::uint32_t ny = (c * x + d * y) % p;
        img[y * p + x - 1] = static_cast<Point>(ny * p + nx - 1);
      }
    return Perm::from_images(img);
  };
  return FiniteGroup::closure(p * p - 1, {
                                             mat_perm(0, 1, 6, 0),  // i
                                             mat_perm(2, 3, 3, 5),  // j
                                             mat_perm(2, 1, 0, 4),  // (-1+i+j+k)/2
                                             mat_perm(5, 5, 2, 5),  // (1+i)/sqrt(2)
                                         });
}

inline void verify_spec(const GroupSpec& spec, std::size_t expected_order,
                        const FiniteGroup* so3_model) {
  if (spec.realization.order() != expected_order)
    throw std::logic_error("rotation catalog: wrong order for " + spec.name);
  if (spec.center_involution) {
    const Perm& z = *spec.center_involution;
    if (!spec.realization.index_of(z) || (z * z != Perm(z.degree())) || z.is_identity())
      throw std::logic_error("rotation catalog: bad center involution for " + spec.name);
    for (const auto& g : spec.realization.generators())
      if (!(g * z == z * g))
        throw std::logic_error("rotation catalog: involution not central for " + spec.name);
    if (so3_model) {
      FiniteGroup q = central_quotient(spec.realization, z);
      if (!isomorphic(q, *so3_model))
        throw std::logic_error("rotation catalog: central quotient mismatch for " +
                               spec.name);
    }
  }
}

}  // namespace detail

// The finite subgroups of SO(3): cyclic and dihedral families up to maxN plus
// the tetrahedral, octahedral and icosahedral groups.
inline std::vector<GroupSpec> so3_catalog(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("so3_catalog: maxN must be >= 1");
  std::vector<GroupSpec> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    out.push_back({RotationKind::Cyclic, n, "C" + std::to_string(n), cyclic_group(n),
                   std::nullopt});
  for (std::size_t n = 2; n <= max_n; ++n)
    out.push_back({RotationKind::Dihedral, n, "D" + std::to_string(n),
                   dihedral_group(n), std::nullopt});
  out.push_back({RotationKind::Tetrahedral, 0, "T", alternating_group(4), std::nullopt});
  out.push_back({RotationKind::Octahedral, 0, "O", symmetric_group(4), std::nullopt});
  out.push_back({RotationKind::Icosahedral, 0, "I", alternating_group(5), std::nullopt});
  for (auto& spec : out) {
    std::size_t expected = spec.kind == RotationKind::Cyclic      ? spec.param
                           : spec.kind == RotationKind::Dihedral  ? 2 * spec.param
                           : spec.kind == RotationKind::Tetrahedral ? 12
                           : spec.kind == RotationKind::Octahedral  ? 24
                                                                    : 60;
    detail::verify_spec(spec, expected, nullptr);
  }
  return out;
}

// Binary covers: C_2n, the dicyclic groups, and the binary tetrahedral,
// octahedral and icosahedral groups (SL(2,3), the F_7 model, SL(2,5)).
// Each central quotient is checked against its SO(3) counterpart.
inline std::vector<GroupSpec> binary_catalog(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("binary_catalog: maxN must be >= 1");
  std::vector<GroupSpec> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    FiniteGroup c = cyclic_group(2 * n);
    std::vector<Point> img(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) img[k] = static_cast<Point>((k + n) % (2 * n));
    out.push_back({RotationKind::BinaryCyclic, n, "2C" + std::to_string(n), std::move(c),
                   Perm::from_images(img)});
  }
  for (std::size_t n = 2; n <= max_n; ++n)
    out.push_back({RotationKind::BinaryDihedral, n, "2D" + std::to_string(n),
                   detail::dicyclic_group(n), detail::dicyclic_center_involution(n)});
  out.push_back({RotationKind::BinaryTetrahedral, 0, "2T", special_linear_2(3),
                 sl2_negation(3)});
  {
    FiniteGroup bo = detail::binary_octahedral_group();
    out.push_back({RotationKind::BinaryOctahedral, 0, "2O", std::move(bo), sl2_negation(7)});
  }
  out.push_back({RotationKind::BinaryIcosahedral, 0, "2I", special_linear_2(5),
                 sl2_negation(5)});

  for (auto& spec : out) {
    std::size_t expected = 0;
    FiniteGroup model;
    switch (spec.kind) {
      case RotationKind::BinaryCyclic:
        expected = 2 * spec.param;
        model = cyclic_group(spec.param);
        break;
      case RotationKind::BinaryDihedral:
        expected = 4 * spec.param;
        model = dihedral_group(spec.param);
        break;
      case RotationKind::BinaryTetrahedral:
        expected = 24;
        model = alternating_group(4);
        break;
      case RotationKind::BinaryOctahedral:
        expected = 48;
        model = symmetric_group(4);
        break;
      case RotationKind::BinaryIcosahedral:
        expected = 120;
        model = alternating_group(5);
        break;
      default:
        throw std::logic_error("binary_catalog: unexpected kind");
    }
    detail::verify_spec(spec, expected, &model);
  }
  return out;
}

// (H1 x H2) / <(z1, z2)>: the abstract model of a finite subgroup of SO(4)
// assembled from two binary covers.
inline FiniteGroup so4_model(const GroupSpec& h1, const GroupSpec& h2) {
  if (!h1.center_involution || !h2.center_involution)
    throw std::invalid_argument("so4_model: both specs must be binary covers");
  FiniteGroup prod = direct_product(h1.realization, h2.realization);
  Perm z = detail::combine_disjoint(*h1.center_involution, *h2.center_involution);
  FiniteGroup q = central_quotient(prod, z);
  if (q.order() * 2 != h1.realization.order() * h2.realization.order())
    throw std::logic_error("so4_model: unexpected quotient order");
  return q;
}

// --- catalog scan: which simple groups arise as quotients -------------------

struct A5OnlyCell {
  std::string group;
  int class_id = 0;
  std::size_t subgroup_order = 0;
  std::vector<std::string> quotients;  // display names of simple quotients
};

struct A5OnlyReport {
  std::size_t max_n = 0;
  bool flag = false;  // every simple quotient that appears is A5
  std::vector<A5OnlyCell> cells;
  std::vector<std::string> union_quotients;
};

inline A5OnlyReport verify_catalog_a5_only(const std::vector<GroupSpec>& catalog,
                                           std::size_t max_n) {
  static const IsoLabel a5_label{60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}};
  A5OnlyReport rep;
  rep.max_n = max_n;
  rep.flag = true;
  std::vector<IsoLabel> seen;
  for (const auto& spec : catalog) {
    auto classes = conjugacy_classes_of_subgroups(spec.realization);
    for (const auto& cls : classes) {
      const SubgroupRecord& r = cls.front();
      FiniteGroup sub = subgroup_as_group(spec.realization, r.members);
      std::vector<IsoLabel> quots = simple_nonabelian_quotients(sub);
      A5OnlyCell cell;
      cell.group = spec.name;
      cell.class_id = r.class_id;
      cell.subgroup_order = r.order;
      for (const auto& q : quots) {
        cell.quotients.push_back(q.display_name());
        if (!(q == a5_label)) rep.flag = false;
        if (std::find(seen.begin(), seen.end(), q) == seen.end()) seen.push_back(q);
      }
      rep.cells.push_back(std::move(cell));
    }
  }
  std::sort(seen.begin(), seen.end());
  for (const auto& q : seen) rep.union_quotients.push_back(q.display_name());
  return rep;
}

// For every subgroup of every SO(3) catalog group up to maxN: the only
// nonabelian simple quotient that can appear is A5.
inline A5OnlyReport verify_a5_only(std::size_t max_n) {
  if (max_n > 60) throw std::invalid_argument("verify_a5_only: maxN must be <= 60");
  return verify_catalog_a5_only(so3_catalog(max_n), max_n);
}

// --- projection check for subgroups of a direct product ---------------------

struct ProjectionCell {
  int class_id = 0;
  std::size_t class_size = 0;
  std::size_t subgroup_order = 0;
  std::vector<std::string> quotients;
  std::string witness_factor;     // "G1", "G2" or "none"
  bool intersection_normal = false;  // F = H cap (G1 x 1) normal in H
};

struct ProjectionReport {
  std::string pair_name;
  std::size_t subgroups_checked = 0;
  bool flag = false;          // every simple quotient witnessed in a factor
  bool mechanism_ok = false;  // F normal in H for every witness subgroup
  std::vector<ProjectionCell> cells;
};

// Checks, over every subgroup H of G1 x G2 (streamed via Goursat data), that
// each nonabelian simple quotient of H is already a quotient of a subgroup
// of G1 or of G2, and that H cap (G1 x 1) is normal in H.
inline ProjectionReport projection_lemma_check(const FiniteGroup& g1,
                                               const FiniteGroup& g2,
                                               const std::string& pair_name = "",
                                               std::size_t product_cap = 1000000) {
  auto factor_labels = [](const FiniteGroup& g) {
    std::vector<IsoLabel> labels;
    for (const auto& rec : all_subgroups(g)) {
      FiniteGroup sub = subgroup_as_group(g, rec.members);
      for (auto& q : simple_nonabelian_quotients(sub))
        if (std::find(labels.begin(), labels.end(), q) == labels.end())
          labels.push_back(q);
    }
    return labels;
  };
  std::vector<IsoLabel> labels1 = factor_labels(g1);
  std::vector<IsoLabel> labels2 = factor_labels(g2);

  ProjectionReport rep;
  rep.pair_name = pair_name;
  rep.flag = true;
  rep.mechanism_ok = true;

  const std::size_t ord2 = g2.order();
  struct Hit {
    IndexVec members;
    std::vector<IsoLabel> quots;
    bool intersection_normal;
    std::string witness;
  };
  std::vector<Hit> hits;

  goursat_subgroups(
      g1, g2,
      [&](const SubgroupRecord& rec) {
        ++rep.subgroups_checked;
        // Materialize H on the disjoint union of the factor point sets.
        std::vector<Perm> elems;
        elems.reserve(rec.members.size());
        for (std::uint32_t m : rec.members)
          elems.push_back(detail::combine_disjoint(g1.element(m / ord2),
                                                   g2.element(m % ord2)));
        std::vector<Perm> gens = small_generating_set(elems);
        FiniteGroup h = FiniteGroup::from_sorted_elements(
            g1.degree() + g2.degree(), std::move(gens), std::move(elems), g1.limits());
        std::vector<IsoLabel> quots = simple_nonabelian_quotients(h);
        if (quots.empty()) return true;

        // The proof mechanism: F = H cap (G1 x 1) is normal in H.
        IndexVec f_local;
        for (std::uint32_t i = 0; i < rec.members.size(); ++i)
          if (rec.members[i] % ord2 == g2.identity_index()) f_local.push_back(i);
        bool f_normal = detail::is_normal_set(h.table(), f_local, h.generator_indices());
        if (!f_normal) rep.mechanism_ok = false;

        std::string witness = "none";
        for (const auto& q : quots) {
          bool in1 = std::find(labels1.begin(), labels1.end(), q) != labels1.end();
          bool in2 = std::find(labels2.begin(), labels2.end(), q) != labels2.end();
          if (!in1 && !in2) {
            rep.flag = false;
            witness = "none";
            break;
          }
          witness = in1 ? "G1" : "G2";
        }
        hits.push_back(Hit{rec.members, std::move(quots), f_normal, witness});
        return true;
      },
      product_cap);

  // Group the contributing subgroups into conjugacy classes of G1 x G2.
  // Conjugation acts factorwise, so the factor tables suffice.
  detail::IndexSetPool pool;
  for (const auto& hit : hits) pool.insert(hit.members);
  const CayleyTable& t1 = g1.table();
  const CayleyTable& t2 = g2.table();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> conj_gens;
  for (std::uint32_t a : g1.generator_indices()) conj_gens.emplace_back(a, g2.identity_index());
  for (std::uint32_t b : g2.generator_indices()) conj_gens.emplace_back(g1.identity_index(), b);

  std::vector<int> class_of(hits.size(), -1);
  int next_class = 0;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (class_of[i] >= 0) continue;
    int cid = next_class++;
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(i)};
    class_of[i] = cid;
    while (!queue.empty()) {
      std::uint32_t cur = queue.front();
      queue.pop_front();
      for (auto [a, b] : conj_gens) {
        IndexVec img;
        img.reserve(hits[cur].members.size());
        for (std::uint32_t m : hits[cur].members)
          img.push_back(t1.conjugate(a, m / ord2) * static_cast<std::uint32_t>(ord2) +
                        t2.conjugate(b, m % ord2));
        std::sort(img.begin(), img.end());
        std::int64_t at = pool.find(img);
        if (at < 0) throw std::logic_error("projection_lemma_check: conjugate missing");
        if (class_of[at] < 0) {
          class_of[at] = cid;
          queue.push_back(static_cast<std::uint32_t>(at));
        }
      }
    }
  }
  std::vector<ProjectionCell> cells(static_cast<std::size_t>(next_class));
  for (std::size_t i = 0; i < hits.size(); ++i) {
    ProjectionCell& c = cells[static_cast<std::size_t>(class_of[i])];
    if (c.class_size == 0) {
      c.class_id = class_of[i];
      c.subgroup_order = hits[i].members.size();
      for (const auto& q : hits[i].quots) c.quotients.push_back(q.display_name());
      c.witness_factor = hits[i].witness;
      c.intersection_normal = hits[i].intersection_normal;
    }
    c.class_size++;
  }
  rep.cells = std::move(cells);
  return rep;
}

}  // namespace linksym
