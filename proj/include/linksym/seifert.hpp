#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace linksym {

// Column-vector convention: (a, b) stands for a*f + b*g in the fiber/meridian
// basis of a boundary torus.
struct Curve {
  long long f = 0;
  long long g = 0;
  friend bool operator==(const Curve&, const Curve&) = default;
};

struct Mat2 {
  // Columns are the images of f and g.
  long long a = 1, b = 0;  // row (f-coefficients)
  long long c = 0, d = 1;  // row (g-coefficients)

  long long det() const { return a * d - b * c; }

  Curve apply(const Curve& v) const { return Curve{a * v.f + b * v.g, c * v.f + d * v.g}; }

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// Attaching constants for one boundary torus: lambda = alpha f + beta g,
// mu = delta f + gamma g.  The pair must be a basis (det +-1) and lambda must
// meet the fiber (beta != 0).
struct AttachData {
  long long alpha = 0, beta = 0, delta = 0, gamma = 0;

  long long det() const { return alpha * gamma - beta * delta; }

  void check() const {
    if (det() != 1 && det() != -1)
      throw std::invalid_argument("AttachData: (lambda, mu) is not a basis");
    if (beta == 0)
      throw std::invalid_argument("AttachData: lambda must meet the fiber (beta != 0)");
  }

  Curve lambda() const { return Curve{alpha, beta}; }
  Curve mu() const { return Curve{delta, gamma}; }
};

// Geometric intersection number of lambda with the fiber, |det(lambda, f)|.
inline long long fiber_intersection(const AttachData& a) {
  return a.beta >= 0 ? a.beta : -a.beta;
}

// A boundary-coordinate map between the two tori: which torus each side lands
// on and the 2x2 matrix in (f, g) coordinates.
struct BoundaryMap {
  bool swaps = false;  // T1 <-> T2 when true
  Mat2 on_t1;          // coordinates of the image of a T1 curve
  Mat2 on_t2;          // coordinates of the image of a T2 curve

  friend BoundaryMap operator*(const BoundaryMap& m, const BoundaryMap& n) {
    BoundaryMap r;
    r.swaps = (m.swaps != n.swaps);
    if (n.swaps) {
      r.on_t1 = m.on_t2 * n.on_t1;
      r.on_t2 = m.on_t1 * n.on_t2;
    } else {
      r.on_t1 = m.on_t1 * n.on_t1;
      r.on_t2 = m.on_t2 * n.on_t2;
    }
    return r;
  }
  friend bool operator==(const BoundaryMap&, const BoundaryMap&) = default;

  void check() const {
    long long d1 = on_t1.det(), d2 = on_t2.det();
    if ((d1 != 1 && d1 != -1) || (d2 != 1 && d2 != -1))
      throw std::invalid_argument("BoundaryMap: matrices must be unimodular");
  }
};

// The fiber-preserving swap of the two tori: f1 -> f2, f2 -> f1 with both
// meridians preserved.
inline BoundaryMap build_pure_swap() { return BoundaryMap{true, Mat2{}, Mat2{}}; }

// The w-fold twist along a vertical annulus joining the fibers: no swap,
// g1 -> g1 - w f1 and g2 -> g2 + w f2.
inline BoundaryMap build_twist(long long w) {
  return BoundaryMap{false, Mat2{1, -w, 0, 1}, Mat2{1, w, 0, 1}};
}

// Swap composed with the twist: f1 -> f2, g1 -> g2 + w f2 and
// f2 -> f1, g2 -> g1 - w f1.
inline BoundaryMap build_swap(long long w) {
  BoundaryMap m = build_twist(w) * build_pure_swap();
  m.check();
  return m;
}

// The attaching data on T2 in the convention where T2 carries the image of
// the T1 frame under a map sending g1 to g2 + w f2.
inline AttachData transported_attach_data(const AttachData& a, long long w) {
  return AttachData{a.alpha + a.beta * w, a.beta, a.delta + a.gamma * w, a.gamma};
}

// build_swap(w) carries (lambda1, mu1) to (lambda2, mu2) and back, so the
// solid-torus attachments to T1 and T2 are interchanged.
inline bool check_transposition(const AttachData& a, long long w) {
  a.check();
  AttachData a2 = transported_attach_data(a, w);
  a2.check();
  BoundaryMap g = build_swap(w);
  Curve l1_image = g.on_t1.apply(a.lambda());
  Curve m1_image = g.on_t1.apply(a.mu());
  Curve l2_image = g.on_t2.apply(a2.lambda());
  Curve m2_image = g.on_t2.apply(a2.mu());
  return l1_image == a2.lambda() && m1_image == a2.mu() &&
         l2_image == a.lambda() && m2_image == a.mu();
}

}  // namespace linksym
