#include "coquat/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "coquat/errors.hpp"

namespace coquat {

double norm(const Coquaternion& q) {
  return std::sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3);
}

double distance(const Coquaternion& a, const Coquaternion& b) { return norm(a - b); }

bool is_singular(const Coquaternion& q, double eps) {
  const double n = norm(q);
  return std::abs(determinant(q)) <= eps * (1.0 + n * n);
}

Coquaternion inverse(const Coquaternion& q, double eps) {
  if (is_singular(q, eps)) {
    throw SingularElement("coquaternion with determinant " + std::to_string(determinant(q)) +
                          " is a zero divisor and has no inverse");
  }
  return conjugate(q) / determinant(q);
}

MulMatrix mul_matrix(const Coquaternion& p) {
  return {{{p.q0, -p.q1, p.q2, p.q3},
           {p.q1, p.q0, p.q3, -p.q2},
           {p.q2, p.q3, p.q0, -p.q1},
           {p.q3, -p.q2, p.q1, p.q0}}};
}

Coquaternion apply(const MulMatrix& m, const Coquaternion& q) {
  const auto v = q.as_array();
  std::array<double, 4> out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
  }
  return {out[0], out[1], out[2], out[3]};
}

std::string_view to_string(ClassType t) {
  switch (t) {
    case ClassType::Type1: return "type1";
    case ClassType::Type2: return "type2";
    case ClassType::Type3: return "type3";
  }
  return "unknown";
}

ClassType classify_dv(double dv, double scale, double eps) {
  if (std::abs(dv) <= eps * scale) return ClassType::Type3;
  return dv > 0 ? ClassType::Type1 : ClassType::Type2;
}

namespace {

// Similarity witnesses for the three canonical forms. Each branch mirrors
// the classical construction, including the degenerate sub-cases where the
// general formula would produce a zero divisor.
Coquaternion witness_type1(const Coquaternion& q, double root_dv) {
  if (q.q2 * q.q2 + q.q3 * q.q3 != 0.0) {
    return {q.q1 + root_dv, 0.0, -q.q3, q.q2};
  }
  if (q.q1 < 0) return Coquaternion::j();
  return 1.0;
}

Coquaternion witness_type2(const Coquaternion& q, double root_mdv) {
  if (q.q1 * q.q1 + q.q3 * q.q3 != 0.0) {
    if (q.q2 <= 0) return {q.q1, 0.0, -q.q3, q.q2 - root_mdv};
    return {q.q2 + root_mdv, q.q3, 0.0, q.q1};
  }
  if (q.q2 < 0) return Coquaternion::i();
  return 1.0;
}

Coquaternion witness_type3(const Coquaternion& q) {
  if (q.q1 + q.q2 != 0.0) return {1.0 + q.q1, 0.0, -q.q3, -(1.0 - q.q2)};
  return {0.0, 1.0 + q.q1, 1.0 - q.q1, 0.0};
}

}  // namespace

ClassRep canonicalize(const Coquaternion& q, const Tolerances& tol) {
  ClassRep rep;
  rep.q0 = q.q0;
  rep.dv = vector_determinant(q);
  const double n = norm(q);
  const double scale = 1.0 + n * n;
  rep.type = classify_dv(rep.dv, scale, tol.type);

  const double vnorm = norm(q.vec());
  const bool real = vnorm <= tol.type * (1.0 + n);

  switch (rep.type) {
    case ClassType::Type1: {
      const double r = std::sqrt(rep.dv);
      rep.representative = {q.q0, r, 0.0, 0.0};
      rep.witness = witness_type1(q, r);
      break;
    }
    case ClassType::Type2: {
      const double r = std::sqrt(-rep.dv);
      rep.representative = {q.q0, 0.0, r, 0.0};
      rep.witness = witness_type2(q, r);
      break;
    }
    case ClassType::Type3:
      if (real) {
        rep.representative = q.q0;
      } else {
        rep.representative = {q.q0, 1.0, 1.0, 0.0};
        rep.witness = witness_type3(q);
      }
      break;
  }
  return rep;
}

bool quasi_similar(const Coquaternion& p, const Coquaternion& q, double eps) {
  const double m = std::max(norm(p), norm(q));
  return std::abs(p.q0 - q.q0) <= eps * (1.0 + m) &&
         std::abs(vector_determinant(p) - vector_determinant(q)) <= eps * (1.0 + m * m);
}

std::ostream& operator<<(std::ostream& os, const Coquaternion& q) {
  return os << '(' << q.q0 << ", " << q.q1 << ", " << q.q2 << ", " << q.q3 << ')';
}

}  // namespace coquat
