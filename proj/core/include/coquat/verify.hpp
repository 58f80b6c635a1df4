#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coquat/algebra.hpp"
#include "coquat/coq_poly.hpp"
#include "coquat/root_finder.hpp"

namespace coquat {

/// Points of a quasi-similarity class, built analytically on the
/// hyperboloid p0 = q0, p1^2 - p2^2 - p3^2 = dv.
struct ClassSample {
  std::vector<Coquaternion> points;
  std::uint64_t seed = 0;
};

/// Draws (p2, p3) from a seeded stream and solves for p1, alternating its
/// sign. Type 3 samples start at the cone's vertex q0. Throws
/// PreconditionViolation for count < 1.
ClassSample sample_class(const AdmissibleClass& cls, int count, std::uint64_t seed);

/// Points of a linear zero at the given line parameters. Throws
/// PreconditionViolation when the descriptor is not linear.
std::vector<Coquaternion> sample_line(const ZeroDescriptor& descriptor, std::span<const double> betas);

inline constexpr double kDefaultBetas[] = {-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0};

/// |P(z)| / (1 + sum |c_i| |z|^i).
double scaled_residual(const CoqPolynomial& p, const Coquaternion& z);

struct DescriptorCertificate {
  std::size_t index = 0;
  double worst_residual = 0.0;
  bool residual_ok = true;
  bool membership_ok = true;
  bool divisor_ok = true;
  [[nodiscard]] bool passed() const { return residual_ok && membership_ok && divisor_ok; }
  std::string message;
};

struct CertificationResult {
  bool passed = true;
  double worst_residual = 0.0;
  std::vector<DescriptorCertificate> descriptors;
};

struct CertifyOptions {
  std::uint64_t seed = 0;
  int hyperboloid_samples = 16;
  std::vector<double> betas{std::begin(kDefaultBetas), std::end(kDefaultBetas)};
};

/// Re-checks every non-empty descriptor against the input polynomial:
/// residuals at isolated zeros, sampled line points and sampled class
/// points; class membership; and that the characteristic polynomial of each
/// zero divides the companion polynomial.
CertificationResult certify(const RootReport& report, double tolerance,
                            const CertifyOptions& options = {});

}  // namespace coquat
