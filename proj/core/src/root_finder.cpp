#include "coquat/root_finder.hpp"

#include <Eigen/Core>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "coquat/errors.hpp"

namespace coquat {

CharPoly char_poly_of(const AdmissibleClass& cls) {
  return {2.0 * cls.q0, cls.q0 * cls.q0 + cls.dv};
}

std::vector<AdmissibleClass> admissible_classes(std::span<const RootCluster> roots,
                                                const Tolerances& tol) {
  std::vector<AdmissibleClass> found;
  std::vector<const RootCluster*> reals;
  for (const RootCluster& c : roots) {
    if (c.is_real) {
      reals.push_back(&c);
    } else if (c.value.imag() > 0.0) {
      const double b = c.value.imag();
      AdmissibleClass cls;
      cls.q0 = c.value.real();
      cls.dv = b * b;
      cls.type = ClassType::Type1;
      cls.representative = {cls.q0, b, 0.0, 0.0};
      cls.provenance = {Provenance::Source::ConjugatePair, c.value, std::conj(c.value)};
      found.push_back(cls);
    }
  }
  std::sort(reals.begin(), reals.end(),
            [](const RootCluster* a, const RootCluster* b) { return a->value.real() < b->value.real(); });

  for (std::size_t a = 0; a < reals.size(); ++a) {
    const double ra = reals[a]->value.real();
    if (reals[a]->multiplicity >= 2) {
      AdmissibleClass cls;
      cls.q0 = ra;
      cls.dv = 0.0;
      cls.type = ClassType::Type3;
      cls.representative = ra;
      cls.provenance = {Provenance::Source::RepeatedReal, ra, ra};
      found.push_back(cls);
    }
    for (std::size_t b = a + 1; b < reals.size(); ++b) {
      const double rb = reals[b]->value.real();
      const double half = 0.5 * (rb - ra);
      AdmissibleClass cls;
      cls.q0 = 0.5 * (ra + rb);
      cls.dv = -half * half;
      cls.type = ClassType::Type2;
      cls.representative = {cls.q0, 0.0, half, 0.0};
      cls.provenance = {Provenance::Source::RealPair, ra, rb};
      found.push_back(cls);
    }
  }

  std::sort(found.begin(), found.end(), [](const AdmissibleClass& x, const AdmissibleClass& y) {
    if (x.q0 != y.q0) return x.q0 < y.q0;
    return x.dv < y.dv;
  });
  std::vector<AdmissibleClass> unique;
  for (const AdmissibleClass& cls : found) {
    const bool dup = std::any_of(unique.begin(), unique.end(), [&](const AdmissibleClass& u) {
      return std::abs(u.q0 - cls.q0) <= tol.cluster * (1.0 + std::abs(cls.q0)) &&
             std::abs(u.dv - cls.dv) <= tol.cluster * (1.0 + std::abs(cls.dv));
    });
    if (!dup) unique.push_back(cls);
  }
  return unique;
}

SingularSolve solve_singular_remainder(const Coquaternion& A, const Coquaternion& B,
                                       const Tolerances& tol) {
  const double b01 = B.q0 * B.q0 + B.q1 * B.q1;
  if (b01 == 0.0 || norm(B) == 0.0) {
    throw PreconditionViolation("singular remainder solve needs a nonzero B");
  }
  if (!is_singular(B, tol.singular)) {
    throw PreconditionViolation("singular remainder solve needs a singular B");
  }

  const MulMatrix mb = mul_matrix(B);
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = mb[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  const Eigen::Vector4d rhs(-A.q0, -A.q1, -A.q2, -A.q3);

  // Left multiplication by a nonzero zero divisor has rank exactly two, so
  // the two trailing singular directions are dropped.
  Eigen::JacobiSVD<Eigen::Matrix4d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Vector4d delta = Eigen::Vector4d::Zero();
  for (int i = 0; i < 2; ++i) {
    delta += svd.matrixV().col(i) * (svd.matrixU().col(i).dot(rhs) / sv(i));
  }
  const double residual = (m * delta - rhs).norm();
  if (residual > tol.consistency * (1.0 + norm(A))) return Inconsistent{residual};

  const double k1 = -(B.q0 * B.q2 + B.q1 * B.q3) / b01;
  const double k2 = (B.q1 * B.q2 - B.q0 * B.q3) / b01;
  // Shift along the kernel to zero the j and k components.
  const double a = -k1 * delta(2) - k2 * delta(3);
  const double b = -k2 * delta(2) + k1 * delta(3);
  return NormalizedSolution{delta(0) + a, delta(1) + b, k1, k2, residual};
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Case1: return "1";
    case Branch::Case2a: return "2a";
    case Branch::Case2b: return "2b";
    case Branch::Case3a: return "3a";
    case Branch::Case3bi: return "3b-i";
    case Branch::Case3bii: return "3b-ii";
    case Branch::Case3c: return "3c";
  }
  return "?";
}

std::string_view kind_name(const ZeroKind& kind) {
  struct Visitor {
    std::string_view operator()(const EmptyZero&) const { return "empty"; }
    std::string_view operator()(const IsolatedZero&) const { return "isolated"; }
    std::string_view operator()(const LinearZero&) const { return "linear"; }
    std::string_view operator()(const HyperboloidalZero&) const { return "hyperboloidal"; }
  };
  return std::visit(Visitor{}, kind);
}

namespace {

// Records a decision whose deciding quantity fell within two orders of
// magnitude of its threshold.
void note_if_close(Diagnostics& d, std::string_view what, double value, double threshold) {
  if (threshold <= 0.0) return;
  const double ratio = std::abs(value) / threshold;
  if (ratio > 1e-2 && ratio < 1e2) {
    std::ostringstream msg;
    msg << what << " = " << value << " is within 100x of threshold " << threshold;
    d.notes.push_back(msg.str());
  }
}

}  // namespace

ZeroDescriptor zeros_in_class(const CoqPolynomial& monic, const AdmissibleClass& cls,
                              const Tolerances& tol) {
  ZeroDescriptor out{cls, EmptyZero{}, {}};
  Diagnostics& diag = out.diagnostics;

  const CharDivision div = divide_by_char(monic, char_poly_of(cls));
  const Coquaternion& A = div.remainder.A;
  const Coquaternion& B = div.remainder.B;
  diag.A = A;
  diag.B = B;
  diag.det_B = determinant(B);

  const double scale = 1.0 + monic.norm();
  const double zero_threshold = tol.zero_remainder * scale;

  note_if_close(diag, "|B|", norm(B), zero_threshold);
  if (norm(B) <= zero_threshold) {
    note_if_close(diag, "|A|", norm(A), zero_threshold);
    if (norm(A) <= zero_threshold) {
      diag.branch = Branch::Case2b;
      out.kind = HyperboloidalZero{};
    } else {
      diag.branch = Branch::Case2a;
    }
    return out;
  }

  const double nb = norm(B);
  const double singular_threshold = tol.singular * (1.0 + nb * nb);
  note_if_close(diag, "det(B)", diag.det_B, singular_threshold);
  if (std::abs(diag.det_B) > singular_threshold) {
    diag.branch = Branch::Case1;
    out.kind = IsolatedZero{-(conjugate(B) * A) / diag.det_B};
    return out;
  }

  const SingularSolve solve = solve_singular_remainder(A, B, tol);
  if (const auto* bad = std::get_if<Inconsistent>(&solve)) {
    note_if_close(diag, "consistency residual", bad->residual, tol.consistency * (1.0 + norm(A)));
    diag.branch = Branch::Case3a;
    return out;
  }
  const auto& sol = std::get<NormalizedSolution>(solve);
  const double q0 = cls.q0;
  const double dv = cls.dv;
  const double shift = q0 - sol.gamma0;

  const double gamma1_threshold = tol.zero_remainder * (1.0 + std::abs(sol.gamma0));
  note_if_close(diag, "gamma1", sol.gamma1, gamma1_threshold);
  if (std::abs(sol.gamma1) <= gamma1_threshold) {
    if (sol.gamma1 != 0.0) diag.notes.emplace_back("gamma1 treated as zero; routed to the real-gamma branch");
    const double mismatch = shift * shift + dv;
    const double line_threshold = tol.linear * (1.0 + q0 * q0 + std::abs(dv));
    note_if_close(diag, "(q0-gamma0)^2 + dv", mismatch, line_threshold);
    // A two-sheeted hyperboloid holds no line, whatever the rounding.
    if (cls.type != ClassType::Type1 && std::abs(mismatch) <= line_threshold) {
      diag.branch = Branch::Case3bi;
      out.kind = LinearZero{q0, sol.gamma0, sol.k1, sol.k2};
    } else {
      diag.branch = Branch::Case3bii;
    }
    return out;
  }

  diag.branch = Branch::Case3c;
  const double beta = (dv + shift * shift - sol.gamma1 * sol.gamma1) / (2.0 * sol.gamma1);
  out.kind = IsolatedZero{{q0, beta + sol.gamma1, sol.k2 * beta + sol.k1 * shift,
                           -sol.k1 * beta + sol.k2 * shift}};
  return out;
}

std::vector<Coquaternion> RootReport::isolated() const {
  std::vector<Coquaternion> out;
  for (const auto& d : classes) {
    if (const auto* z = std::get_if<IsolatedZero>(&d.kind)) out.push_back(z->z);
  }
  return out;
}

std::vector<LinearZero> RootReport::linear() const {
  std::vector<LinearZero> out;
  for (const auto& d : classes) {
    if (const auto* l = std::get_if<LinearZero>(&d.kind)) out.push_back(*l);
  }
  return out;
}

std::vector<Coquaternion> RootReport::hyperboloidal() const {
  std::vector<Coquaternion> out;
  for (const auto& d : classes) {
    if (d.is_hyperboloidal()) out.push_back(d.cls.representative);
  }
  return out;
}

RootReport find_all_zeros(const CoqPolynomial& p, const Tolerances& tol) {
  if (p.degree() < 1) throw DegenerateInput("a constant polynomial has no zero set to classify");
  RootReport report;
  report.polynomial = p;
  report.monic = monicize(p, tol);
  report.companion = companion(report.monic, tol);
  report.companion_roots = real_roots(report.companion, tol);
  for (const AdmissibleClass& cls : admissible_classes(report.companion_roots, tol)) {
    report.classes.push_back(zeros_in_class(report.monic, cls, tol));
  }
  return report;
}

CoqPolynomial adjoin_real_factor(const CoqPolynomial& p, double r) {
  return p * CoqPolynomial{Coquaternion(-r), Coquaternion(1.0)};
}

}  // namespace coquat
