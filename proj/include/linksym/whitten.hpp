#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linksym/isomorphism.hpp"
#include "linksym/named_groups.hpp"
#include "linksym/products.hpp"
#include "linksym/subgroups.hpp"

namespace linksym {

// Multiplicative sign, the {1, -1} coefficient group.
class Sign {
 public:
  constexpr Sign() = default;
  static Sign from_int(int v) {
    if (v != 1 && v != -1) throw std::invalid_argument("Sign: value must be +1 or -1");
    Sign s;
    s.neg_ = (v == -1);
    return s;
  }
  static constexpr Sign plus() { return Sign(); }
  static constexpr Sign minus() {
    Sign s;
    s.neg_ = true;
    return s;
  }
  int value() const { return neg_ ? -1 : 1; }
  friend Sign operator*(Sign a, Sign b) {
    Sign s;
    s.neg_ = (a.neg_ != b.neg_);
    return s;
  }
  friend bool operator==(Sign, Sign) = default;

 private:
  bool neg_ = false;
};

// Element (eta, (eps_1..eps_n), rho) of the Whitten group on n components:
// eta mirrors the ambient sphere, eps_i reverses the component landing in
// slot i, rho permutes slots (0-based internally).
struct WhittenElement {
  Sign eta;
  std::vector<Sign> eps;
  Perm rho;

  std::size_t n() const { return eps.size(); }

  void check() const {
    if (eps.size() != rho.degree() || eps.empty())
      throw std::invalid_argument("WhittenElement: eps length must equal rho degree");
  }

  friend bool operator==(const WhittenElement&, const WhittenElement&) = default;
};

inline WhittenElement whitten_identity(std::size_t n) {
  return WhittenElement{Sign::plus(), std::vector<Sign>(n, Sign::plus()), Perm(n)};
}

// Product law: (eta, eps, rho) * (eta', eps', sigma) =
// (eta*eta', (eps_i * eps'_{rho(i)})_i, sigma o rho).
// This is the unique law making the slot-wise action formula a left action;
// note the permutation parts compose in reversed order.
inline WhittenElement gamma_mul(const WhittenElement& s, const WhittenElement& t) {
  s.check();
  t.check();
  if (s.n() != t.n()) throw std::invalid_argument("gamma_mul: component counts differ");
  WhittenElement r;
  r.eta = s.eta * t.eta;
  r.eps.resize(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) r.eps[i] = s.eps[i] * t.eps[s.rho[i]];
  r.rho = t.rho * s.rho;
  return r;
}

inline WhittenElement gamma_inv(const WhittenElement& s) {
  s.check();
  WhittenElement r;
  r.eta = s.eta;
  r.rho = s.rho.inverse();
  r.eps.resize(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) r.eps[i] = s.eps[r.rho[i]];
  return r;
}

// Faithful permutation model on 2 + 2n points: 0/1 are the mirror pair and
// 2+2j / 2+2j+1 track component j with its orientation.
inline Perm whitten_to_perm(const WhittenElement& s) {
  s.check();
  const std::size_t n = s.n();
  Perm rho_inv = s.rho.inverse();
  std::vector<Point> img(2 + 2 * n);
  bool mirror = (s.eta == Sign::minus());
  img[0] = static_cast<Point>(mirror ? 1 : 0);
  img[1] = static_cast<Point>(mirror ? 0 : 1);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t k = rho_inv[j];
    bool flip = (s.eps[k] == Sign::minus());
    img[2 + 2 * j] = static_cast<Point>(2 + 2 * k + (flip ? 1 : 0));
    img[2 + 2 * j + 1] = static_cast<Point>(2 + 2 * k + (flip ? 0 : 1));
  }
  return Perm::from_images(img);
}

inline WhittenElement whitten_from_perm(const Perm& p) {
  if (p.degree() < 4 || p.degree() % 2 != 0)
    throw std::invalid_argument("whitten_from_perm: bad degree");
  const std::size_t n = (p.degree() - 2) / 2;
  WhittenElement s;
  s.eta = (p[0] == 0) ? Sign::plus() : Sign::minus();
  if (p[1] != (p[0] == 0 ? 1 : 0))
    throw std::invalid_argument("whitten_from_perm: malformed mirror pair");
  std::vector<Point> rho_img(n);
  s.eps.assign(n, Sign::plus());
  for (std::size_t j = 0; j < n; ++j) {
    Point q = p[2 + 2 * j];
    std::size_t k = (q - 2) / 2;
    bool flip = ((q - 2) % 2) != 0;
    if (p[2 + 2 * j + 1] != static_cast<Point>(2 + 2 * k + (flip ? 0 : 1)))
      throw std::invalid_argument("whitten_from_perm: malformed component pair");
    rho_img[k] = static_cast<Point>(j);  // rho_inv(j) = k
    s.eps[k] = flip ? Sign::minus() : Sign::plus();
  }
  s.rho = Perm::from_images(rho_img);
  return s;
}

// The Whitten group of an n-component link as a permutation group of order
// 2^(n+1) * n!.  The product-law/permutation-model agreement is spot-checked
// at construction.
inline FiniteGroup gamma_group(std::size_t n) {
  if (n < 1 || n > 5) throw std::invalid_argument("gamma_group: n out of range 1..5");
  std::vector<WhittenElement> wgens;
  WhittenElement mirror = whitten_identity(n);
  mirror.eta = Sign::minus();
  wgens.push_back(mirror);
  WhittenElement flip = whitten_identity(n);
  flip.eps[0] = Sign::minus();
  wgens.push_back(flip);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    WhittenElement tr = whitten_identity(n);
    tr.rho = Perm::from_cycles(n, {{static_cast<int>(i), static_cast<int>(i + 1)}});
    wgens.push_back(tr);
  }
  std::vector<Perm> gens;
  for (const auto& w : wgens) gens.push_back(whitten_to_perm(w));
  FiniteGroup g = FiniteGroup::closure(2 + 2 * n, std::move(gens));

  std::uint64_t expected = (1ULL << (n + 1));
  for (std::size_t k = 2; k <= n; ++k) expected *= k;
  if (g.order() != expected)
    throw std::logic_error("gamma_group: unexpected order");
  // Homomorphism check: exhaustive for n <= 2, a fixed pseudorandom sample above.
  const std::size_t m = g.order();
  std::uint64_t state = 0x243f6a8885a308d3ULL;
  std::size_t checks = (n <= 2) ? m * m : 2000;
  for (std::size_t c = 0; c < checks; ++c) {
    std::size_t i, j;
    if (n <= 2) {
      i = c / m;
      j = c % m;
    } else {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      i = static_cast<std::size_t>((state >> 20) % m);
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      j = static_cast<std::size_t>((state >> 20) % m);
    }
    WhittenElement a = whitten_from_perm(g.element(i));
    WhittenElement b = whitten_from_perm(g.element(j));
    if (whitten_to_perm(gamma_mul(a, b)) != g.element(i) * g.element(j))
      throw std::logic_error("gamma_group: product law disagrees with the model");
  }
  return g;
}

// An ordered link's bookkeeping: ambient orientation, per-slot component
// orientation, and which original component sits in each slot.
struct LinkRecord {
  Sign ambient;
  std::vector<Sign> orients;
  Perm comp_ids;

  std::size_t n() const { return orients.size(); }

  void check() const {
    if (orients.size() != comp_ids.degree() || orients.empty())
      throw std::invalid_argument("LinkRecord: orientation/id length mismatch");
  }

  friend bool operator==(const LinkRecord&, const LinkRecord&) = default;
};

inline LinkRecord link_record_identity(std::size_t n) {
  return LinkRecord{Sign::plus(), std::vector<Sign>(n, Sign::plus()), Perm(n)};
}

// s.L = (eta S, eps_1 L_{rho(1)}, ..., eps_n L_{rho(n)}): slot i receives the
// component of slot rho(i), reoriented by eps_i.
inline LinkRecord act_on_link(const WhittenElement& s, const LinkRecord& l) {
  s.check();
  l.check();
  if (s.n() != l.n()) throw std::invalid_argument("act_on_link: component counts differ");
  LinkRecord r;
  r.ambient = s.eta * l.ambient;
  r.orients.resize(l.n());
  std::vector<Point> ids(l.n());
  for (std::size_t i = 0; i < l.n(); ++i) {
    r.orients[i] = s.eps[i] * l.orients[s.rho[i]];
    ids[i] = l.comp_ids[s.rho[i]];
  }
  r.comp_ids = Perm::from_images(ids);
  return r;
}

// The canonical index-two subgroup with eta = +1.
inline SubgroupRecord bar_gamma(const FiniteGroup& gamma) {
  IndexVec members;
  for (std::uint32_t i = 0; i < gamma.order(); ++i)
    if (gamma.element(i)[0] == 0) members.push_back(i);
  if (members.size() * 2 != gamma.order())
    throw std::logic_error("bar_gamma: subgroup is not index two");
  return make_record(gamma, members);
}

// Image of H intersected with the eta = +1 subgroup under the permutation
// projection: the computable model of S(L) given Sigma(L).
inline FiniteGroup sym_image(const FiniteGroup& gamma, const SubgroupRecord& h) {
  check_record(gamma, h);
  const std::size_t n = (gamma.degree() - 2) / 2;
  std::vector<Perm> rhos;
  for (std::uint32_t idx : h.members) {
    const Perm& p = gamma.element(idx);
    if (p[0] != 0) continue;  // eta = -1
    rhos.push_back(whitten_from_perm(p).rho);
  }
  return FiniteGroup::closure(n, std::move(rhos));
}

// The five subgroups of Gamma_2 with no known realizing link, given by their
// published generator lists.  Orders and isomorphism types are verified at
// construction; the dihedral entry has order eight (its generator
// (1,(-1,1),tau) already has order four).
struct MissingSubgroupEntry {
  std::string iso_name;
  std::vector<WhittenElement> generators;
  SubgroupRecord record;
};

inline std::vector<MissingSubgroupEntry> gamma2_missing_subgroups(
    const FiniteGroup& gamma2) {
  auto w = [](int eta, int e1, int e2, bool tau) {
    WhittenElement s;
    s.eta = Sign::from_int(eta);
    s.eps = {Sign::from_int(e1), Sign::from_int(e2)};
    s.rho = tau ? Perm::from_cycles(2, {{0, 1}}) : Perm(2);
    return s;
  };
  struct Spec {
    std::string iso_name;
    std::vector<WhittenElement> gens;
    std::size_t order;
  };
  const std::vector<Spec> specs = {
      {"Z4", {w(1, -1, 1, true)}, 4},
      {"Z2xZ2", {w(1, -1, 1, false), w(-1, 1, 1, false)}, 4},
      {"Z2xZ2", {w(1, 1, -1, false), w(-1, -1, 1, false)}, 4},
      {"D4", {w(-1, -1, 1, false), w(1, -1, 1, true)}, 8},
      {"Z2xZ2xZ2", {w(1, 1, -1, false), w(1, -1, 1, false), w(-1, 1, 1, false)}, 8},
  };

  std::vector<MissingSubgroupEntry> out;
  for (const auto& spec : specs) {
    IndexVec gen_idx;
    for (const auto& s : spec.gens) {
      auto idx = gamma2.index_of(whitten_to_perm(s));
      if (!idx) throw std::logic_error("gamma2_missing_subgroups: generator not found");
      gen_idx.push_back(*idx);
    }
    IndexVec members = detail::generated_subgroup(gamma2.table(), gen_idx);
    if (members.size() != spec.order)
      throw std::logic_error("gamma2_missing_subgroups: unexpected order for " +
                             spec.iso_name);
    FiniteGroup sub = subgroup_as_group(gamma2, members);
    FiniteGroup model = spec.iso_name == "Z4"          ? cyclic_group(4)
                        : spec.iso_name == "Z2xZ2"     ? klein_four_group()
                        : spec.iso_name == "D4"        ? dihedral_group(4)
                                                       : elementary_abelian_2(3);
    if (!isomorphic(sub, model))
      throw std::logic_error("gamma2_missing_subgroups: isomorphism type mismatch for " +
                             spec.iso_name);
    out.push_back(MissingSubgroupEntry{spec.iso_name, spec.gens,
                                       make_record(gamma2, std::move(members))});
  }
  return out;
}

// The classical symmetry taxonomy for knots (n = 1): each subgroup of
// Gamma_1 with its name and a witness knot.
struct KnotSymmetryType {
  std::string name;
  std::string witness_knot;
  std::vector<WhittenElement> generators;
};

inline std::vector<KnotSymmetryType> gamma1_symmetry_types() {
  auto w = [](int eta, int e1) {
    WhittenElement s;
    s.eta = Sign::from_int(eta);
    s.eps = {Sign::from_int(e1)};
    s.rho = Perm(1);
    return s;
  };
  return {
      {"chiral", "9_32", {}},
      {"reversible", "3_1", {w(1, -1)}},
      {"positive amphicheiral", "12a_147", {w(-1, 1)}},
      {"negative amphicheiral", "8_17", {w(-1, -1)}},
      {"fully amphicheiral", "4_1", {w(1, -1), w(-1, 1)}},
  };
}

// A four-component link whose orientation-preserving component action
// realizes the alternating group A4 (found via SnapPy census search).
struct CensusLinkNote {
  std::string census_name;
  std::size_t components;
  std::string permutation_image;
};

inline CensusLinkNote a4_census_link() { return CensusLinkNote{"L12a2007", 4, "A4"}; }

// Direct-product model C2 x (C2 wr S_n) built on an unrelated point layout;
// used to cross-check the faithful slot model abstractly.
inline FiniteGroup abstract_whitten_model(std::size_t n) {
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(2 * n, {{0, 1}}));
  for (std::size_t i = 0; i + 1 < n; ++i)
    gens.push_back(Perm::from_cycles(
        2 * n, {{static_cast<int>(2 * i), static_cast<int>(2 * i + 2)},
                {static_cast<int>(2 * i + 1), static_cast<int>(2 * i + 3)}}));
  FiniteGroup hyperoct = FiniteGroup::closure(2 * n, std::move(gens));
  return direct_product(cyclic_group(2), hyperoct);
}

}  // namespace linksym
