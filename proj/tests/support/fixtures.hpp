#pragma once

// Shared polynomials and a seeded generator for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "coquat/coquat.hpp"

namespace fixtures {

using coquat::Coquaternion;
using coquat::CoqPolynomial;

// x^2 + (1+i+j+k) x + (2-i-j+k)
inline CoqPolynomial isolated_quadratic() { return {{2, -1, -1, 1}, {1, 1, 1, 1}, 1.0}; }

// x^2 - (3+j) x + (2+j)
inline CoqPolynomial two_line_quadratic() { return {{2, 0, 1, 0}, {-3, 0, -1, 0}, 1.0}; }

// Cubic with six admissible classes; times (x - 1) it has six linear zeros.
inline CoqPolynomial seed_cubic() {
  return {{2, -2, 2, 3}, {-4, -5, 1, 1}, {-1, 0, -5, -1}, {2, 2, -1, 0}};
}
inline CoqPolynomial six_line_quartic() { return coquat::adjoin_real_factor(seed_cubic(), 1.0); }

// x^2 + (-5-j) x + (11/2 + 5/2 j): companion roots 1, 2, 3, 4.
inline CoqPolynomial four_real_roots_quadratic() { return {{5.5, 0, 2.5, 0}, {-5, 0, -1, 0}, 1.0}; }

// Three quadratics sharing the companion (x-1)^4.
inline CoqPolynomial hyperboloidal_quadratic() { return {1.0, -2.0, 1.0}; }
inline CoqPolynomial linear_quadratic() { return {{1, 1, 1, 0}, {-2, -1, -1, 0}, 1.0}; }
inline CoqPolynomial isolated_double_quadratic() { return {{0, 3, 2, 2}, {-2, -6, -5, -3}, 1.0}; }

// Quintic with the maximal number of isolated zeros.
inline CoqPolynomial maximal_quintic() {
  return {{-9, -12, -18, 9},
          {-51, 40.5, -28.5, -52},
          {-23.5, -32, -18, 16.5},
          {24, 6.5, 5.5, -6},
          {0.5, 1, 7, 6.5},
          1.0};
}

// Small property-test generator: fixed seed, uniform components.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double real(double lo = -2.0, double hi = 2.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Coquaternion coq(double scale = 2.0) {
    return {real(-scale, scale), real(-scale, scale), real(-scale, scale), real(-scale, scale)};
  }
  // Invertible with |dt| bounded away from zero.
  Coquaternion invertible(double scale = 2.0) {
    for (;;) {
      const Coquaternion q = coq(scale);
      if (std::abs(coquat::determinant(q)) > 0.25) return q;
    }
  }
  CoqPolynomial poly(int degree, bool monic = false) {
    std::vector<Coquaternion> c;
    for (int i = 0; i < degree; ++i) c.push_back(coq());
    c.push_back(monic ? Coquaternion(1.0) : invertible());
    return CoqPolynomial(std::move(c));
  }
  coquat::RealPolynomial real_poly(int degree) {
    std::vector<double> c;
    for (int i = 0; i < degree; ++i) c.push_back(real());
    c.push_back(1.0 + real(0.0, 1.0));
    return coquat::RealPolynomial(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

// 2x2 real matrix image of a coquaternion under i -> [[0,-1],[1,0]],
// j -> [[0,1],[1,0]], k -> [[-1,0],[0,1]]. An algebra isomorphism onto
// M2(R), used as an independent product and determinant oracle.
struct Mat2 {
  double a, b, c, d;  // [[a, b], [c, d]]
};

inline Mat2 to_mat(const Coquaternion& q) {
  return {q.q0 - q.q3, -q.q1 + q.q2, q.q1 + q.q2, q.q0 + q.q3};
}
inline Coquaternion from_mat(const Mat2& m) {
  return {(m.a + m.d) / 2, (m.c - m.b) / 2, (m.b + m.c) / 2, (m.d - m.a) / 2};
}
inline Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
inline double mat_det(const Mat2& m) { return m.a * m.d - m.b * m.c; }

inline Coquaternion oracle_product(const Coquaternion& p, const Coquaternion& q) {
  return from_mat(mat_mul(to_mat(p), to_mat(q)));
}

// Whether z lies in a zero set of the report, up to `eps`.
inline bool report_contains(const coquat::RootReport& report, const Coquaternion& z, double eps) {
  for (const auto& d : report.classes) {
    if (const auto* iso = std::get_if<coquat::IsolatedZero>(&d.kind)) {
      if (coquat::distance(iso->z, z) <= eps) return true;
    } else if (const auto* line = std::get_if<coquat::LinearZero>(&d.kind)) {
      if (coquat::distance(line->at(z.q1), z) <= eps) return true;
    } else if (d.is_hyperboloidal()) {
      if (std::abs(z.q0 - d.cls.q0) <= eps && std::abs(coquat::vector_determinant(z) - d.cls.dv) <= eps) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace fixtures
