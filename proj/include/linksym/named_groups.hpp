#pragma once

#include "linksym/group.hpp"

namespace linksym {

inline FiniteGroup trivial_group() { return FiniteGroup::closure(1, {}); }

// C_n on n points (C_1 on a single point).
inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  if (n == 1) return trivial_group();
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return FiniteGroup::closure(n, {Perm::from_images(img)});
}

// Dihedral group of order 2n.  n >= 3 acts on the n-gon vertices; n = 1, 2
// take degenerate models (C_2 and the Klein group on four points).
inline FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dihedral_group: n must be positive");
  if (n == 1) return cyclic_group(2);
  if (n == 2)
    return FiniteGroup::closure(
        4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{2, 3}})});
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return FiniteGroup::closure(n, {Perm::from_images(rot), Perm::from_images(refl)});
}

inline FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric_group: n must be positive");
  if (n == 1) return trivial_group();
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}})};
  if (n > 2) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return FiniteGroup::closure(n, std::move(gens));
}

inline FiniteGroup alternating_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("alternating_group: n must be positive");
  if (n <= 2) return FiniteGroup::closure(n, {});
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<int> cyc;
    if (n % 2 == 1) {
      cyc.resize(n);
      std::iota(cyc.begin(), cyc.end(), 0);
    } else {
      cyc.resize(n - 1);
      std::iota(cyc.begin(), cyc.end(), 1);
    }
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return FiniteGroup::closure(n, std::move(gens));
}

// (C_2)^k as coordinate flips on 2k points.
inline FiniteGroup elementary_abelian_2(std::size_t k) {
  if (k == 0) return trivial_group();
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(Perm::from_cycles(2 * k, {{static_cast<int>(2 * i),
                                              static_cast<int>(2 * i + 1)}}));
  return FiniteGroup::closure(2 * k, std::move(gens));
}

inline FiniteGroup klein_four_group() { return elementary_abelian_2(2); }

// SL(2,p) acting on the p^2 - 1 nonzero column vectors over F_p,
// generated by the two elementary transvections.
inline FiniteGroup special_linear_2(std::uint32_t p,
                                    ClosureLimits limits = {}) {
  if (p < 2) throw std::invalid_argument("special_linear_2: p must be a prime >= 2");
  const std::uint32_t npts = p * p - 1;
  auto vec_index = [p](std::uint32_t x, std::uint32_t y) -> std::uint32_t {
    return y * p + x - 1;  // (0,0) excluded
  };
  auto matrix_perm = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                         std::uint32_t d) {
    std::vector<Point> img(npts);
    for (std::uint32_t y = 0; y < p; ++y)
      for (std::uint32_t x = 0; x < p; ++x) {
        if (x == 0 && y == 0) continue;
        std::uint32_t nx = (a * x + b * y) % p;
        std::uint32_t ny = (c * x + d * y) % p;
        img[vec_index(x, y)] = static_cast<Point>(vec_index(nx, ny));
      }
    return Perm::from_images(img);
  };
  return FiniteGroup::closure(
      npts, {matrix_perm(1, 1, 0, 1), matrix_perm(1, 0, 1, 1)}, limits);
}

// Small-group lookup by conventional name: C<k>, D<k> (order 2k), S2..S5,
// A3..A5, V4, 1.
inline FiniteGroup group_from_name(const std::string& name) {
  auto parse_suffix = [&](std::size_t from) -> std::size_t {
    std::size_t n = std::stoul(name.substr(from));
    if (n == 0 || n > 64) throw std::invalid_argument("group_from_name: bad index");
    return n;
  };
  if (name == "1") return trivial_group();
  if (name == "V4") return klein_four_group();
  if (name.size() >= 2 && name[0] == 'C') return cyclic_group(parse_suffix(1));
  if (name.size() >= 2 && name[0] == 'D') return dihedral_group(parse_suffix(1));
  if (name.size() >= 2 && name[0] == 'S') {
    std::size_t n = parse_suffix(1);
    if (n > 5) throw std::invalid_argument("group_from_name: symmetric degree > 5");
    return symmetric_group(n);
  }
  if (name.size() >= 2 && name[0] == 'A') {
    std::size_t n = parse_suffix(1);
    if (n > 5) throw std::invalid_argument("group_from_name: alternating degree > 5");
    return alternating_group(n);
  }
  throw std::invalid_argument("group_from_name: unknown name " + name);
}

// The negation map v -> -v on nonzero vectors of F_p^2 (the matrix -I).
inline Perm sl2_negation(std::uint32_t p) {
  const std::uint32_t npts = p * p - 1;
  std::vector<Point> img(npts);
  for (std::uint32_t y = 0; y < p; ++y)
    for (std::uint32_t x = 0; x < p; ++x) {
      if (x == 0 && y == 0) continue;
      std::uint32_t nx = (p - x) % p, ny = (p - y) % p;
      img[y * p + x - 1] = static_cast<Point>(ny * p + nx - 1);
    }
  return Perm::from_images(img);
}

}  // namespace linksym
