#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coquat/algebra.hpp"
#include "coquat/coq_poly.hpp"
#include "coquat/real_poly.hpp"
#include "coquat/tolerances.hpp"

namespace coquat {

/// Which companion roots produced an admissible class.
struct Provenance {
  enum class Source { ConjugatePair, RealPair, RepeatedReal };
  Source source = Source::RepeatedReal;
  // ConjugatePair: first = w (Im > 0). RealPair: first < second.
  // RepeatedReal: first = second = r.
  std::complex<double> first;
  std::complex<double> second;
};

/// A quasi-similarity class whose characteristic polynomial divides the
/// companion polynomial.
struct AdmissibleClass {
  double q0 = 0.0;
  double dv = 0.0;
  ClassType type = ClassType::Type3;
  Coquaternion representative;
  Provenance provenance;
};

CharPoly char_poly_of(const AdmissibleClass& cls);

/// Enumerates admissible classes from clustered companion roots: one per
/// conjugate pair, one per unordered pair of distinct real roots and one per
/// repeated real root. Sorted by (q0, dv) with numerical duplicates merged.
std::vector<AdmissibleClass> admissible_classes(std::span<const RootCluster> roots,
                                                const Tolerances& tol = {});

/// No solution of B z = -A exists.
struct Inconsistent {
  double residual = 0.0;
};

/// Solutions of B z = -A are gamma + u with gamma = gamma0 + gamma1 i and
/// u = (a, b, k1 a + k2 b, k2 a - k1 b) spanning the kernel of M_B.
struct NormalizedSolution {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  double residual = 0.0;
};

using SingularSolve = std::variant<Inconsistent, NormalizedSolution>;

/// Solves M_B z = -A for a nonzero singular B by rank-2 truncated least
/// squares, then shifts the particular solution along the kernel so its j
/// and k components vanish. Throws PreconditionViolation when B is zero or
/// invertible.
SingularSolve solve_singular_remainder(const Coquaternion& A, const Coquaternion& B,
                                       const Tolerances& tol = {});

enum class Branch { Case1, Case2a, Case2b, Case3a, Case3bi, Case3bii, Case3c };

std::string_view to_string(Branch b);

struct EmptyZero {};
struct IsolatedZero {
  Coquaternion z;
};
/// The line {q0 + t i + (k2 t + k1 (q0 - gamma0)) j + (-k1 t + k2 (q0 - gamma0)) k}.
struct LinearZero {
  double q0 = 0.0;
  double gamma0 = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;

  [[nodiscard]] Coquaternion at(double t) const {
    const double s = q0 - gamma0;
    return {q0, t, k2 * t + k1 * s, -k1 * t + k2 * s};
  }
};
struct HyperboloidalZero {};

using ZeroKind = std::variant<EmptyZero, IsolatedZero, LinearZero, HyperboloidalZero>;

std::string_view kind_name(const ZeroKind& kind);

struct Diagnostics {
  Coquaternion A;
  Coquaternion B;
  double det_B = 0.0;
  Branch branch = Branch::Case2a;
  // Decisions that landed close to a threshold.
  std::vector<std::string> notes;
};

struct ZeroDescriptor {
  AdmissibleClass cls;
  ZeroKind kind;
  Diagnostics diagnostics;

  [[nodiscard]] bool is_empty() const { return std::holds_alternative<EmptyZero>(kind); }
  [[nodiscard]] bool is_isolated() const { return std::holds_alternative<IsolatedZero>(kind); }
  [[nodiscard]] bool is_linear() const { return std::holds_alternative<LinearZero>(kind); }
  [[nodiscard]] bool is_hyperboloidal() const { return std::holds_alternative<HyperboloidalZero>(kind); }
};

/// Zeros of a monic polynomial inside one admissible class, decided from
/// the remainder A + B x of division by the class's characteristic
/// polynomial.
ZeroDescriptor zeros_in_class(const CoqPolynomial& monic, const AdmissibleClass& cls,
                              const Tolerances& tol = {});

struct RootReport {
  CoqPolynomial polynomial;
  CoqPolynomial monic;
  RealPolynomial companion;
  std::vector<RootCluster> companion_roots;
  // Every admissible class, including those that hold no zero.
  std::vector<ZeroDescriptor> classes;

  [[nodiscard]] std::vector<Coquaternion> isolated() const;
  [[nodiscard]] std::vector<LinearZero> linear() const;
  // Representatives of hyperboloidal classes.
  [[nodiscard]] std::vector<Coquaternion> hyperboloidal() const;
};

/// The full pipeline: monicize, companion polynomial, companion roots,
/// admissible classes, per-class analysis. Throws
/// SingularLeadingCoefficient when the leading coefficient is a zero divisor.
RootReport find_all_zeros(const CoqPolynomial& p, const Tolerances& tol = {});

/// P(x) (x - r). When r is not a real companion root of P, each simple real
/// companion root of P yields a linear zero of the product.
CoqPolynomial adjoin_real_factor(const CoqPolynomial& p, double r);

}  // namespace coquat
