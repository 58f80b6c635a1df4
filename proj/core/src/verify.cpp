#include "coquat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "coquat/errors.hpp"

namespace coquat {

ClassSample sample_class(const AdmissibleClass& cls, int count, std::uint64_t seed) {
  if (count < 1) throw PreconditionViolation("sample_class needs count >= 1");
  ClassSample out;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  const double spread = 1.0 + std::sqrt(std::abs(cls.dv));
  std::uniform_real_distribution<double> draw(-spread, spread);

  int produced = 0;
  if (cls.type == ClassType::Type3) {
    out.points.emplace_back(cls.q0);
    ++produced;
  }
  for (; produced < count; ++produced) {
    double p2 = 0.0;
    double p3 = 0.0;
    do {
      p2 = draw(rng);
      p3 = draw(rng);
    } while (cls.dv + p2 * p2 + p3 * p3 < 0.0);
    const double p1 = std::sqrt(cls.dv + p2 * p2 + p3 * p3);
    out.points.emplace_back(cls.q0, produced % 2 == 0 ? p1 : -p1, p2, p3);
  }
  return out;
}

std::vector<Coquaternion> sample_line(const ZeroDescriptor& descriptor, std::span<const double> betas) {
  const auto* line = std::get_if<LinearZero>(&descriptor.kind);
  if (line == nullptr) throw PreconditionViolation("sample_line needs a linear descriptor");
  const double s = line->q0 - line->gamma0;
  std::vector<Coquaternion> out;
  out.reserve(betas.size());
  for (double b : betas) {
    out.emplace_back(line->q0, b, line->k2 * b + line->k1 * s, -line->k1 * b + line->k2 * s);
  }
  return out;
}

double scaled_residual(const CoqPolynomial& p, const Coquaternion& z) {
  const double nz = norm(z);
  double scale = 1.0;
  double power = 1.0;
  for (const auto& c : p.coefficients()) {
    scale += norm(c) * power;
    power *= nz;
  }
  return norm(evaluate(p, z)) / scale;
}

namespace {

// Remainder of the companion polynomial modulo the characteristic
// polynomial of z, relative to the companion's magnitude near z.
double divisor_defect(const RealPolynomial& comp, const Coquaternion& z) {
  const RealPolynomial psi{determinant(z), -2.0 * z.q0, 1.0};
  const auto rem = divide(comp, psi).second;
  const double radius = std::max(1.0, norm(z));
  double scale = 0.0;
  double power = 1.0;
  for (double c : comp.coefficients()) {
    scale += std::abs(c) * power;
    power *= radius;
  }
  double worst = 0.0;
  for (double c : rem.coefficients()) worst = std::max(worst, std::abs(c));
  return worst / (1.0 + scale);
}

bool in_class(const AdmissibleClass& cls, const Coquaternion& z, double tolerance) {
  const double n = norm(z);
  return std::abs(z.q0 - cls.q0) <= tolerance * (1.0 + std::abs(cls.q0)) &&
         std::abs(vector_determinant(z) - cls.dv) <= tolerance * (1.0 + n * n);
}

}  // namespace

CertificationResult certify(const RootReport& report, double tolerance, const CertifyOptions& options) {
  CertificationResult result;
  for (std::size_t idx = 0; idx < report.classes.size(); ++idx) {
    const ZeroDescriptor& d = report.classes[idx];
    std::vector<Coquaternion> points;
    if (const auto* iso = std::get_if<IsolatedZero>(&d.kind)) {
      points.push_back(iso->z);
    } else if (d.is_linear()) {
      points = sample_line(d, options.betas);
    } else if (d.is_hyperboloidal()) {
      points = sample_class(d.cls, options.hyperboloid_samples, options.seed + idx).points;
    } else {
      continue;
    }

    DescriptorCertificate cert;
    cert.index = idx;
    Coquaternion worst_point;
    for (const auto& z : points) {
      const double r = scaled_residual(report.polynomial, z);
      if (r > cert.worst_residual) {
        cert.worst_residual = r;
        worst_point = z;
      }
      if (!in_class(d.cls, z, tolerance)) cert.membership_ok = false;
      if (divisor_defect(report.companion, z) > tolerance) cert.divisor_ok = false;
    }
    cert.residual_ok = cert.worst_residual <= tolerance;

    std::ostringstream msg;
    msg << "class #" << idx << " (q0=" << d.cls.q0 << ", dv=" << d.cls.dv << ", " << kind_name(d.kind) << ")";
    if (!cert.residual_ok) msg << ": residual " << cert.worst_residual << " at " << worst_point;
    if (!cert.membership_ok) msg << ": point outside its class";
    if (!cert.divisor_ok) msg << ": characteristic polynomial does not divide the companion";
    if (cert.passed()) msg << ": ok";
    cert.message = msg.str();

    result.worst_residual = std::max(result.worst_residual, cert.worst_residual);
    result.passed = result.passed && cert.passed();
    result.descriptors.push_back(std::move(cert));
  }
  return result;
}

}  // namespace coquat
