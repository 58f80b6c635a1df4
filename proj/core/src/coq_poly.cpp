#include "coquat/coq_poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "coquat/errors.hpp"

namespace coquat {

CoqPolynomial::CoqPolynomial(std::vector<Coquaternion> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == Coquaternion{}) coeffs_.pop_back();
}

CoqPolynomial::CoqPolynomial(std::initializer_list<Coquaternion> coefficients)
    : CoqPolynomial(std::vector<Coquaternion>(coefficients)) {}

CoqPolynomial::CoqPolynomial(const RealPolynomial& p) {
  for (double c : p.coefficients()) coeffs_.emplace_back(c);
}

double CoqPolynomial::norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, coquat::norm(c));
  return m;
}

CoqPolynomial operator+(const CoqPolynomial& p, const CoqPolynomial& q) {
  const std::size_t n = std::max(p.coefficients().size(), q.coefficients().size());
  std::vector<Coquaternion> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = p[i] + q[i];
  return CoqPolynomial(std::move(out));
}

CoqPolynomial operator-(const CoqPolynomial& p, const CoqPolynomial& q) {
  const std::size_t n = std::max(p.coefficients().size(), q.coefficients().size());
  std::vector<Coquaternion> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = p[i] - q[i];
  return CoqPolynomial(std::move(out));
}

CoqPolynomial poly_multiply(const CoqPolynomial& p, const CoqPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<Coquaternion> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return CoqPolynomial(std::move(out));
}

Coquaternion evaluate(const CoqPolynomial& p, const Coquaternion& q) {
  // Horner with q acting on the right keeps every coefficient on the left.
  Coquaternion acc;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
  return acc;
}

CoqPolynomial conjugate_poly(const CoqPolynomial& p) {
  std::vector<Coquaternion> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(conjugate(c));
  return CoqPolynomial(std::move(out));
}

CoqPolynomial monicize(const CoqPolynomial& p, const Tolerances& tol) {
  if (p.is_zero()) throw SingularLeadingCoefficient("the zero polynomial has no leading coefficient");
  const Coquaternion lead = p.leading();
  if (is_singular(lead, tol.singular)) {
    std::ostringstream msg;
    msg << "leading coefficient " << lead << " has determinant " << determinant(lead)
        << " and cannot be inverted";
    throw SingularLeadingCoefficient(msg.str());
  }
  if (p.is_monic()) return p;
  const Coquaternion inv = inverse(lead, tol.singular);
  std::vector<Coquaternion> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(inv * c);
  out.back() = 1.0;
  return CoqPolynomial(std::move(out));
}

RealPolynomial companion(const CoqPolynomial& p, const Tolerances& tol) {
  if (p.is_zero()) return {};
  const auto c = p.coefficients();
  const std::size_t n = c.size();
  std::vector<double> out(2 * n - 1, 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    Coquaternion acc;
    double scale = 0.0;
    const std::size_t lo = k >= n ? k - n + 1 : 0;
    const std::size_t hi = std::min(k, n - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      acc += conjugate(c[i]) * c[k - i];
      scale += norm(c[i]) * norm(c[k - i]);
    }
    const double residue = norm(acc.vec());
    if (residue > tol.poly_zero * (1.0 + scale)) {
      std::ostringstream msg;
      msg << "companion coefficient of degree " << k << " has vector part of norm " << residue;
      throw NonRealCompanion(msg.str());
    }
    out[k] = acc.q0;
  }
  return RealPolynomial(std::move(out));
}

bool approx_equal(const CoqPolynomial& p, const CoqPolynomial& q, double eps) {
  const double scale = 1.0 + std::max(p.norm(), q.norm());
  const std::size_t n = std::max(p.coefficients().size(), q.coefficients().size());
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(p[i], q[i]) > eps * scale) return false;
  }
  return true;
}

CharPoly char_poly_of(const Coquaternion& q) { return {2.0 * q.q0, determinant(q)}; }

CharDivision divide_by_char(const CoqPolynomial& p, const CharPoly& psi) {
  const int n = p.degree();
  if (n < 2) return {CoqPolynomial{}, {p[0], p[1]}};

  // alpha_k is the x^k coefficient of the quotient; alpha_{n-1} = 0 and
  // alpha_{n-2} = c_n (one for monic dividends).
  const auto c = p.coefficients();
  std::vector<Coquaternion> alpha(static_cast<std::size_t>(n + 1));
  alpha[static_cast<std::size_t>(n - 1)] = Coquaternion{};
  alpha[static_cast<std::size_t>(n - 2)] = c[static_cast<std::size_t>(n)];
  for (int k = n - 3; k >= 0; --k) {
    const auto uk = static_cast<std::size_t>(k);
    alpha[uk] = c[uk + 2] + psi.re2 * alpha[uk + 1] - psi.det * alpha[uk + 2];
  }
  LinearRemainder rem;
  rem.A = c[0] - psi.det * alpha[0];
  rem.B = c[1] + psi.re2 * alpha[0] - psi.det * alpha[1];
  alpha.resize(static_cast<std::size_t>(n - 1));
  return {CoqPolynomial(std::move(alpha)), rem};
}

}  // namespace coquat
