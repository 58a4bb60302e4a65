#pragma once

#include <cstdint>
#include <vector>

#include "linksym/isomorphism.hpp"
#include "linksym/subgroups.hpp"

namespace linksym {

namespace detail {

inline Perm combine_disjoint(const Perm& a, const Perm& b) {
  std::vector<Point> img(a.degree() + b.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) img[i] = a[i];
  for (std::size_t i = 0; i < b.degree(); ++i)
    img[a.degree() + i] = static_cast<Point>(b[i] + a.degree());
  return Perm::from_images(img);
}

}  // namespace detail

// G x H on the disjoint union of the point sets.  The canonical element list
// is exactly the pairs (g_i, h_j) in lexicographic (i, j) order, so the
// element index of a pair is i * |H| + j.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<Perm> gens;
  for (const auto& p : g.generators()) gens.push_back(detail::combine_disjoint(p, Perm(h.degree())));
  for (const auto& p : h.generators()) gens.push_back(detail::combine_disjoint(Perm(g.degree()), p));
  std::vector<Perm> elems;
  elems.reserve(g.order() * h.order());
  for (const auto& a : g.elements())
    for (const auto& b : h.elements()) elems.push_back(detail::combine_disjoint(a, b));
  ClosureLimits lim = g.limits();
  lim.max_order = std::max(lim.max_order, elems.size());
  if (gens.empty()) gens.push_back(Perm(g.degree() + h.degree()));
  return FiniteGroup::from_sorted_elements(g.degree() + h.degree(), std::move(gens),
                                           std::move(elems), lim);
}

// Quotient by the order-2 central subgroup generated by z.
inline FiniteGroup central_quotient(const FiniteGroup& g, const Perm& z) {
  auto zi = g.index_of(z);
  if (!zi) throw std::invalid_argument("central_quotient: z is not in the group");
  if (*zi == g.identity_index() || !(z * z).is_identity())
    throw std::invalid_argument("central_quotient: z is not an involution");
  for (const auto& p : g.generators())
    if (!(p * z == z * p))
      throw std::invalid_argument("central_quotient: z is not central");
  IndexVec n{g.identity_index(), *zi};
  std::sort(n.begin(), n.end());
  return quotient_by(g, n).group;
}

// Descriptor hash of direct_product(g, h) computed without materializing it.
inline std::uint64_t product_descriptor_hash(const FiniteGroup& g,
                                             const FiniteGroup& h) {
  std::size_t degree = g.degree() + h.degree();
  std::uint64_t acc = fnv1a(&degree, sizeof(degree));
  std::vector<std::vector<Point>> shifted;
  shifted.reserve(h.order());
  for (const auto& b : h.elements()) {
    std::vector<Point> s(b.images());
    for (auto& p : s) p = static_cast<Point>(p + g.degree());
    shifted.push_back(std::move(s));
  }
  for (const auto& a : g.elements())
    for (const auto& s : shifted) {
      acc = fnv1a(a.images().data(), a.images().size() * sizeof(Point), acc);
      acc = fnv1a(s.data(), s.size() * sizeof(Point), acc);
    }
  return acc;
}

// Streams every subgroup of G1 x G2 exactly once via its Goursat data
// (A <= G1, A0 normal in A, B <= G2, B0 normal in B, isomorphism
// A/A0 -> B/B0), in a fixed deterministic order.  Member indices refer to
// the canonical pair indexing i * |G2| + j; the visitor returns false to
// stop early.
template <typename Visit>
inline void goursat_subgroups(const FiniteGroup& g1, const FiniteGroup& g2,
                              Visit visit,
                              std::size_t product_cap = 1000000) {
  if (g1.order() * g2.order() > product_cap)
    throw enumeration_too_large("goursat_subgroups: |G1|*|G2| exceeds cap");
  const std::uint64_t parent_hash = product_descriptor_hash(g1, g2);

  struct Section {
    IndexVec sub_members;   // parent-factor element indices
    IndexVec normal_local;  // indices local to the subgroup's element list
    FiniteGroup quotient_group;
    IndexVec hom;           // local index -> quotient element index
  };
  auto make_sections = [](const FiniteGroup& g) {
    std::vector<Section> sections;
    for (const auto& rec : all_subgroups(g)) {
      FiniteGroup sub = subgroup_as_group(g, rec.members);
      for (auto& nloc : detail::normal_subgroup_sets(sub)) {
        QuotientResult q = quotient_by(sub, nloc);
        sections.push_back(Section{rec.members, std::move(nloc), std::move(q.group),
                                   std::move(q.hom)});
      }
    }
    return sections;
  };
  std::vector<Section> sec1 = make_sections(g1);
  std::vector<Section> sec2 = make_sections(g2);

  for (const auto& sa : sec1) {
    for (const auto& sb : sec2) {
      if (sa.quotient_group.order() != sb.quotient_group.order()) continue;
      std::vector<IndexVec> isos = all_isomorphisms(sa.quotient_group, sb.quotient_group);
      if (isos.empty()) continue;
      // Bucket the B-side members by their quotient image.
      std::vector<IndexVec> bucket(sb.quotient_group.order());
      for (std::size_t bl = 0; bl < sb.sub_members.size(); ++bl)
        bucket[sb.hom[bl]].push_back(sb.sub_members[bl]);
      for (const auto& iso : isos) {
        IndexVec members;
        members.reserve(sa.sub_members.size() * sb.normal_local.size());
        for (std::size_t al = 0; al < sa.sub_members.size(); ++al) {
          std::uint64_t base =
              static_cast<std::uint64_t>(sa.sub_members[al]) * g2.order();
          for (std::uint32_t bp : bucket[iso[sa.hom[al]]])
            members.push_back(static_cast<std::uint32_t>(base + bp));
        }
        SubgroupRecord rec;
        rec.parent_hash = parent_hash;
        rec.order = members.size();
        rec.members = std::move(members);
        if (!visit(rec)) return;
      }
    }
  }
}

inline std::vector<SubgroupRecord> collect_goursat_subgroups(
    const FiniteGroup& g1, const FiniteGroup& g2, std::size_t product_cap = 1000000) {
  std::vector<SubgroupRecord> out;
  goursat_subgroups(g1, g2,
                    [&](const SubgroupRecord& r) {
                      out.push_back(r);
                      return true;
                    },
                    product_cap);
  return out;
}

}  // namespace linksym
