#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "coquat/tolerances.hpp"

namespace coquat {

/// Real polynomial, coefficients in ascending degree. Trailing exact zeros
/// are trimmed so the leading coefficient is nonzero; the zero polynomial has
/// no coefficients and degree -1.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coefficients);
  RealPolynomial(std::initializer_list<double> coefficients);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::span<const double> coefficients() const { return coeffs_; }
  [[nodiscard]] double operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0.0;
  }
  [[nodiscard]] double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  [[nodiscard]] double operator()(double x) const;
  [[nodiscard]] std::complex<double> operator()(std::complex<double> x) const;

  [[nodiscard]] RealPolynomial derivative() const;
  // Sum of absolute coefficient values.
  [[nodiscard]] double norm1() const;
  [[nodiscard]] double max_abs() const;

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  std::vector<double> coeffs_;
};

RealPolynomial mul_real(const RealPolynomial& p, const RealPolynomial& q);

/// Long division by a polynomial with nonzero leading coefficient.
/// Returns {quotient, remainder}.
std::pair<RealPolynomial, RealPolynomial> divide(const RealPolynomial& p,
                                                 const RealPolynomial& divisor);

/// Taylor coefficients p^(j)(x)/j!, j = 0..degree.
std::vector<std::complex<double>> taylor_coefficients(const RealPolynomial& p,
                                                      std::complex<double> x);

/// A group of numerically coincident roots.
struct RootCluster {
  std::complex<double> value;
  int multiplicity = 1;
  bool is_real = false;
};

/// All complex roots of p grouped into clusters with multiplicities.
///
/// Roots come from the eigenvalues of the balanced Frobenius companion
/// matrix. Clustering runs on the raw eigenvalues, top-down over a
/// single-linkage dendrogram: a group of m roots is accepted when its radius
/// stays within max(cluster, multiple^(1/m)) * (1 + |value|) and, if wider
/// than the base radius, its Taylor coefficients of order < m vanish at the
/// group mean. Simple roots are reported after Newton polishing, multiple
/// roots after Newton on the (m-1)-th derivative. Non-real clusters come in
/// conjugate pairs of equal multiplicity; the result is sorted by (Re, Im).
///
/// Throws DegenerateInput for constant polynomials.
std::vector<RootCluster> real_roots(const RealPolynomial& p, const Tolerances& tol = {});

}  // namespace coquat
