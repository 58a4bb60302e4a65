#pragma once

#include <cstdint>
#include <vector>

#include "linksym/whitten.hpp"

namespace linksym {

// Symmetric integer matrix of pairwise linking numbers, zero diagonal.
struct LinkingMatrix {
  std::size_t n = 0;
  std::vector<std::vector<long long>> entries;

  static LinkingMatrix from_entries(std::vector<std::vector<long long>> m) {
    LinkingMatrix lk;
    lk.n = m.size();
    for (const auto& row : m)
      if (row.size() != lk.n)
        throw std::invalid_argument("LinkingMatrix: matrix is not square");
    for (std::size_t i = 0; i < lk.n; ++i) {
      if (m[i][i] != 0)
        throw std::invalid_argument("LinkingMatrix: diagonal must be zero");
      for (std::size_t j = 0; j < lk.n; ++j)
        if (m[i][j] != m[j][i])
          throw std::invalid_argument("LinkingMatrix: matrix must be symmetric");
    }
    lk.entries = std::move(m);
    return lk;
  }

  static LinkingMatrix zero(std::size_t n) {
    LinkingMatrix lk;
    lk.n = n;
    lk.entries.assign(n, std::vector<long long>(n, 0));
    return lk;
  }

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

// (s.M)_{ij} = eta * eps_i * eps_j * M_{rho(i) rho(j)}.
inline LinkingMatrix act_on_linking_matrix(const WhittenElement& s,
                                           const LinkingMatrix& m) {
  s.check();
  if (s.n() != m.n)
    throw std::invalid_argument("act_on_linking_matrix: size mismatch");
  LinkingMatrix r = LinkingMatrix::zero(m.n);
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j)
      r.entries[i][j] = s.eta.value() * s.eps[i].value() * s.eps[j].value() *
                        m.entries[s.rho[i]][s.rho[j]];
  return r;
}

inline bool stabilizes(const WhittenElement& s, const LinkingMatrix& m) {
  return act_on_linking_matrix(s, m) == m;
}

// Elementwise stabilizer {s in Gamma_n : s.M = M}; contains the intrinsic
// symmetry group of any link with this linking matrix.  `gamma` must be
// gamma_group(m.n).
inline SubgroupRecord stabilizer(const FiniteGroup& gamma, const LinkingMatrix& m) {
  if (gamma.degree() != 2 + 2 * m.n)
    throw std::invalid_argument("stabilizer: gamma group does not match matrix size");
  if (m.n < 1 || m.n > 5)
    throw std::invalid_argument("stabilizer: n out of range 1..5");
  IndexVec members;
  for (std::uint32_t i = 0; i < gamma.order(); ++i)
    if (stabilizes(whitten_from_perm(gamma.element(i)), m)) members.push_back(i);
  return make_record(gamma, members);
}

// Upper bound for the unoriented permutation symmetry group S(L) of any link
// realizing this linking matrix.
inline FiniteGroup sym_upper_bound(const FiniteGroup& gamma, const LinkingMatrix& m) {
  return sym_image(gamma, stabilizer(gamma, m));
}

}  // namespace linksym
