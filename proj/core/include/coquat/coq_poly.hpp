#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "coquat/algebra.hpp"
#include "coquat/real_poly.hpp"
#include "coquat/tolerances.hpp"

namespace coquat {

/// Left unilateral polynomial c_n x^n + ... + c_1 x + c_0 with coquaternion
/// coefficients stored in ascending degree. Trailing exact zeros are trimmed.
class CoqPolynomial {
 public:
  CoqPolynomial() = default;
  explicit CoqPolynomial(std::vector<Coquaternion> coefficients);
  CoqPolynomial(std::initializer_list<Coquaternion> coefficients);
  explicit CoqPolynomial(const RealPolynomial& p);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const Coquaternion> coefficients() const { return coeffs_; }
  [[nodiscard]] Coquaternion operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Coquaternion{};
  }
  [[nodiscard]] Coquaternion leading() const { return coeffs_.empty() ? Coquaternion{} : coeffs_.back(); }
  [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Coquaternion(1.0); }

  // Largest Euclidean norm among the coefficients.
  [[nodiscard]] double norm() const;

  friend bool operator==(const CoqPolynomial&, const CoqPolynomial&) = default;

 private:
  std::vector<Coquaternion> coeffs_;
};

CoqPolynomial operator+(const CoqPolynomial& p, const CoqPolynomial& q);
CoqPolynomial operator-(const CoqPolynomial& p, const CoqPolynomial& q);

/// Product with the indeterminate commuting with coefficients:
/// the x^k coefficient is sum over i+j=k of p_i q_j.
CoqPolynomial poly_multiply(const CoqPolynomial& p, const CoqPolynomial& q);
inline CoqPolynomial operator*(const CoqPolynomial& p, const CoqPolynomial& q) {
  return poly_multiply(p, q);
}

/// c_n q^n + ... + c_0. Not multiplicative over poly_multiply in general.
Coquaternion evaluate(const CoqPolynomial& p, const Coquaternion& q);

CoqPolynomial conjugate_poly(const CoqPolynomial& p);

/// Left-multiplies every coefficient by c_n^-1 so the result is monic with
/// the same zero set. Throws SingularLeadingCoefficient when c_n is a zero
/// divisor.
CoqPolynomial monicize(const CoqPolynomial& p, const Tolerances& tol = {});

/// P-bar * P as a real polynomial of degree 2n. Throws NonRealCompanion if a
/// coefficient carries a vector part beyond rounding level.
RealPolynomial companion(const CoqPolynomial& p, const Tolerances& tol = {});

/// max_k |p_k - q_k| <= eps * (1 + max(|p|, |q|)).
bool approx_equal(const CoqPolynomial& p, const CoqPolynomial& q, double eps);

/// Characteristic polynomial x^2 - re2 x + det of a quasi-similarity class.
struct CharPoly {
  double re2 = 0.0;
  double det = 0.0;

  [[nodiscard]] double discriminant() const { return re2 * re2 - 4.0 * det; }
  [[nodiscard]] RealPolynomial as_real() const { return RealPolynomial{det, -re2, 1.0}; }
  [[nodiscard]] Coquaternion operator()(const Coquaternion& z) const {
    return z * z - re2 * z + Coquaternion(det);
  }
};

/// Characteristic polynomial of the class containing q: (x - q)(x - q-bar).
CharPoly char_poly_of(const Coquaternion& q);

/// Remainder A + B x of dividing by a characteristic polynomial.
struct LinearRemainder {
  Coquaternion A;
  Coquaternion B;
};

struct CharDivision {
  CoqPolynomial quotient;
  LinearRemainder remainder;
};

/// P = Q * psi + B x + A via the backward synthetic-division recurrence.
/// Dividends of degree < 2 are their own remainder with a zero quotient.
CharDivision divide_by_char(const CoqPolynomial& p, const CharPoly& psi);

}  // namespace coquat
