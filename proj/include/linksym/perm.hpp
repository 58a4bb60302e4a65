#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace linksym {

// Point of a permutation domain {0..degree-1}.  16 bits is enough for every
// enumeration this library allows (caps keep degrees well below 65536).
using Point = std::uint16_t;

struct enumeration_too_large : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

// A permutation of {0..k-1} in one-line notation: i maps to images[i].
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  static Perm from_images(std::vector<Point> images) {
    std::vector<bool> seen(images.size(), false);
    for (Point p : images) {
      if (p >= images.size() || seen[p])
        throw std::invalid_argument("Perm: images are not a bijection");
      seen[p] = true;
    }
    Perm g;
    g.images_ = std::move(images);
    return g;
  }

  static Perm from_ints(const std::vector<int>& images) {
    std::vector<Point> v;
    v.reserve(images.size());
    for (int x : images) {
      if (x < 0 || x > 0xffff) throw std::invalid_argument("Perm: point out of range");
      v.push_back(static_cast<Point>(x));
    }
    return from_images(std::move(v));
  }

  // Cycle input, e.g. {{0,1,2},{3,4}} on the given degree.
  static Perm from_cycles(std::size_t degree,
                          const std::vector<std::vector<int>>& cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || static_cast<std::size_t>(from) >= degree)
          throw std::invalid_argument("Perm: cycle point out of range");
        images[static_cast<std::size_t>(from)] = static_cast<Point>(to);
      }
    }
    return from_images(std::move(images));
  }

  std::size_t degree() const { return images_.size(); }

  Point operator[](std::size_t i) const { return images_[i]; }

  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // Composition acts right-to-left: (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree())
      throw std::invalid_argument("Perm: degree mismatch in composition");
    Perm r;
    r.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i)
      r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  // Multiplicative order, via lcm of cycle lengths.
  std::uint64_t order() const {
    std::vector<bool> seen(degree(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Perm& a, const Perm& b) = default;

  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return std::lexicographical_compare_three_way(
        a.images_.begin(), a.images_.end(), b.images_.begin(), b.images_.end());
  }

  std::uint64_t hash() const {
    return fnv1a(images_.data(), images_.size() * sizeof(Point));
  }

  // Cycle notation, fixed points omitted; identity prints as "()".
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::size_t i = 0; i < degree(); ++i) {
      if (seen[i] || images_[i] == i) {
        seen[i] = true;
        continue;
      }
      out += '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (!first) out += ' ';
        out += std::to_string(j);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<Point> images_;
};

}  // namespace linksym
