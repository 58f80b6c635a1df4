#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "coquat/tolerances.hpp"

namespace coquat {

/// An element q0 + q1 i + q2 j + q3 k of the real split-quaternion algebra,
/// where i^2 = -1, j^2 = k^2 = 1 and ij = -ji = k.
struct Coquaternion {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q3 = 0.0;

  constexpr Coquaternion() = default;
  constexpr Coquaternion(double real) : q0(real) {}  // NOLINT: reals embed implicitly
  constexpr Coquaternion(double a, double b, double c, double d)
      : q0(a), q1(b), q2(c), q3(d) {}

  static constexpr Coquaternion i() { return {0, 1, 0, 0}; }
  static constexpr Coquaternion j() { return {0, 0, 1, 0}; }
  static constexpr Coquaternion k() { return {0, 0, 0, 1}; }

  [[nodiscard]] constexpr double re() const { return q0; }
  [[nodiscard]] constexpr Coquaternion vec() const { return {0, q1, q2, q3}; }
  [[nodiscard]] constexpr std::array<double, 4> as_array() const {
    return {q0, q1, q2, q3};
  }

  constexpr Coquaternion& operator+=(const Coquaternion& o) {
    q0 += o.q0; q1 += o.q1; q2 += o.q2; q3 += o.q3;
    return *this;
  }
  constexpr Coquaternion& operator-=(const Coquaternion& o) {
    q0 -= o.q0; q1 -= o.q1; q2 -= o.q2; q3 -= o.q3;
    return *this;
  }
  constexpr Coquaternion& operator*=(double s) {
    q0 *= s; q1 *= s; q2 *= s; q3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Coquaternion&, const Coquaternion&) = default;
};

constexpr Coquaternion operator+(Coquaternion a, const Coquaternion& b) { return a += b; }
constexpr Coquaternion operator-(Coquaternion a, const Coquaternion& b) { return a -= b; }
constexpr Coquaternion operator-(const Coquaternion& a) { return {-a.q0, -a.q1, -a.q2, -a.q3}; }
constexpr Coquaternion operator*(Coquaternion a, double s) { return a *= s; }
constexpr Coquaternion operator*(double s, Coquaternion a) { return a *= s; }
constexpr Coquaternion operator/(Coquaternion a, double s) { return a *= (1.0 / s); }

/// The algebra product.
constexpr Coquaternion multiply(const Coquaternion& p, const Coquaternion& q) {
  return {p.q0 * q.q0 - p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3,
          p.q0 * q.q1 + p.q1 * q.q0 - p.q2 * q.q3 + p.q3 * q.q2,
          p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
          p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0};
}

constexpr Coquaternion operator*(const Coquaternion& p, const Coquaternion& q) {
  return multiply(p, q);
}

constexpr Coquaternion conjugate(const Coquaternion& q) { return {q.q0, -q.q1, -q.q2, -q.q3}; }

/// dt(q) = q q-bar = q0^2 + q1^2 - q2^2 - q3^2. Multiplicative, indefinite.
constexpr double determinant(const Coquaternion& q) {
  return q.q0 * q.q0 + q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3;
}

/// dv(q) = dt(V(q)) = q1^2 - q2^2 - q3^2.
constexpr double vector_determinant(const Coquaternion& q) {
  return q.q1 * q.q1 - q.q2 * q.q2 - q.q3 * q.q3;
}

/// Euclidean norm of the 4-vector. Used for every magnitude test since the
/// determinant is not a norm.
double norm(const Coquaternion& q);
double distance(const Coquaternion& a, const Coquaternion& b);

/// True when |dt(q)| <= eps * (1 + |q|^2).
bool is_singular(const Coquaternion& q, double eps = Tolerances{}.singular);

/// q-bar / dt(q). Throws SingularElement for zero divisors.
Coquaternion inverse(const Coquaternion& q, double eps = Tolerances{}.singular);

/// 4x4 row-major matrix of left multiplication: M_p * vec(q) = vec(p q).
using MulMatrix = std::array<std::array<double, 4>, 4>;

MulMatrix mul_matrix(const Coquaternion& p);
Coquaternion apply(const MulMatrix& m, const Coquaternion& q);

enum class ClassType { Type1, Type2, Type3 };

std::string_view to_string(ClassType t);

/// The sign of dv with a relative dead band: Type1 for dv > 0, Type2 for
/// dv < 0, Type3 inside the band.
ClassType classify_dv(double dv, double scale, double eps = Tolerances{}.type);

/// Canonical similarity data of a coquaternion.
struct ClassRep {
  double q0 = 0.0;
  double dv = 0.0;
  ClassType type = ClassType::Type3;
  // q0 + sqrt(dv) i, q0 + sqrt(-dv) j, q0 + i + j, or q0 itself when real.
  Coquaternion representative;
  // h with h^-1 q h == representative; absent for real q.
  std::optional<Coquaternion> witness;
};

ClassRep canonicalize(const Coquaternion& q, const Tolerances& tol = {});

/// re(p) == re(q) and dv(p) == dv(q) up to a relative tolerance.
bool quasi_similar(const Coquaternion& p, const Coquaternion& q,
                   double eps = Tolerances{}.type);

std::ostream& operator<<(std::ostream& os, const Coquaternion& q);

}  // namespace coquat
