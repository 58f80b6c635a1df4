#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"

using namespace coquat;
using fixtures::Gen;

namespace {

AdmissibleClass make_class(double q0, double dv) {
  AdmissibleClass c;
  c.q0 = q0;
  c.dv = dv;
  c.type = dv > 0 ? ClassType::Type1 : (dv < 0 ? ClassType::Type2 : ClassType::Type3);
  return c;
}

const ZeroDescriptor& first_linear(const RootReport& r, double q0) {
  for (const auto& d : r.classes) {
    if (d.is_linear() && std::abs(d.cls.q0 - q0) < 1e-8) return d;
  }
  throw std::runtime_error("no linear descriptor");
}

}  // namespace

TEST(SampleClass, PointsLieOnHyperboloid) {
  for (const auto& [q0, dv] : {std::pair{0.0, 1.0}, std::pair{2.0, -1.0}, std::pair{-3.0, 5.0}}) {
    const auto s = sample_class(make_class(q0, dv), 16, 7);
    ASSERT_EQ(s.points.size(), 16u);
    for (const auto& p : s.points) {
      EXPECT_EQ(p.q0, q0);
      EXPECT_NEAR(vector_determinant(p), dv, 1e-10 * (1 + norm(p) * norm(p)));
    }
  }
}

TEST(SampleClass, ConeIncludesVertex) {
  const auto s = sample_class(make_class(1.0, 0.0), 8, 3);
  EXPECT_EQ(s.points.front(), Coquaternion(1.0));
  bool non_real = false;
  for (const auto& p : s.points) {
    EXPECT_NEAR(vector_determinant(p), 0.0, 1e-10 * (1 + norm(p) * norm(p)));
    non_real = non_real || norm(p.vec()) > 0.1;
  }
  EXPECT_TRUE(non_real);
}

TEST(SampleClass, DeterministicPerSeed) {
  const auto c = make_class(0.5, -2.0);
  EXPECT_EQ(sample_class(c, 10, 99).points, sample_class(c, 10, 99).points);
  EXPECT_NE(sample_class(c, 10, 99).points, sample_class(c, 10, 100).points);
  EXPECT_THROW(sample_class(c, 0, 1), PreconditionViolation);
}

TEST(SampleClass, CharPolyVanishesOnSamples) {
  Gen g(51);
  for (int n = 0; n < 50; ++n) {
    const auto c = make_class(g.real(), g.real(-4, 4));
    const auto psi = char_poly_of(c);
    for (const auto& z : sample_class(c, 16, n).points) {
      EXPECT_LE(norm(psi(z)), 1e-10 * (1 + norm(z) * norm(z)));
    }
  }
}

TEST(SampleLine, TwoLineQuadratic) {
  const auto r = find_all_zeros(fixtures::two_line_quadratic());
  const auto& d = first_linear(r, 1.0);
  const double betas[] = {0.0, 2.0};
  const auto pts = sample_line(d, betas);
  EXPECT_LE(distance(pts[0], 1.0), 1e-10);
  EXPECT_LE(distance(pts[1], {1, 2, 0, 2}), 1e-10);
}

TEST(SampleLine, SixLineQuartic) {
  const auto r = find_all_zeros(fixtures::six_line_quartic());
  const auto& d = first_linear(r, 0.0);
  const double betas[] = {0.0};
  const auto pts = sample_line(d, betas);
  EXPECT_LE(distance(pts[0], {0, 0, -0.8, 0.6}), 1e-8);
}

TEST(SampleLine, RejectsNonLinear) {
  const auto r = find_all_zeros(fixtures::isolated_quadratic());
  EXPECT_THROW(sample_line(r.classes.front(), kDefaultBetas), PreconditionViolation);
}

TEST(ScaledResidual, ZeroAtRoot) {
  EXPECT_EQ(scaled_residual(fixtures::isolated_quadratic(), Coquaternion::i()), 0.0);
  EXPECT_GT(scaled_residual(fixtures::isolated_quadratic(), 1.0), 0.1);
}

TEST(Certify, MaximalQuinticPasses) {
  const auto r = find_all_zeros(fixtures::maximal_quintic());
  const auto c = certify(r, 1e-8);
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.worst_residual, 1e-8);
  EXPECT_EQ(c.descriptors.size(), 45u);
}

TEST(Certify, HyperboloidSamplesVanish) {
  const auto r = find_all_zeros(fixtures::hyperboloidal_quadratic());
  const auto c = certify(r, 1e-8);
  EXPECT_TRUE(c.passed);
  EXPECT_LE(c.worst_residual, 1e-14);
}

TEST(Certify, PerturbedIsolatedZeroFails) {
  auto r = find_all_zeros(fixtures::maximal_quintic());
  auto& target = std::get<IsolatedZero>(r.classes[17].kind).z;
  target.q2 += 1e-2;
  const auto c = certify(r, 1e-8);
  EXPECT_FALSE(c.passed);
  int failing = 0;
  for (const auto& d : c.descriptors) {
    if (!d.passed()) {
      ++failing;
      EXPECT_EQ(d.index, 17u);
      EXPECT_FALSE(d.message.empty());
    }
  }
  EXPECT_EQ(failing, 1);
}

TEST(Certify, PerturbedLineFails) {
  auto r = find_all_zeros(fixtures::two_line_quadratic());
  for (auto& d : r.classes) {
    if (auto* line = std::get_if<LinearZero>(&d.kind)) line->k1 += 1e-4;
  }
  EXPECT_FALSE(certify(r, 1e-8).passed);
}

TEST(Certify, WrongHyperboloidFails) {
  auto r = find_all_zeros(fixtures::hyperboloidal_quadratic());
  r.classes[0].cls.q0 += 1e-3;
  EXPECT_FALSE(certify(r, 1e-8).passed);
}

TEST(Certify, RandomNegativeControls) {
  Gen g(52);
  int flipped = 0;
  for (int n = 0; n < 50; ++n) {
    auto r = find_all_zeros(g.poly(g.integer(1, 4), true));
    ASSERT_TRUE(certify(r, 1e-8).passed) << "trial " << n;
    bool perturbed = false;
    for (auto& d : r.classes) {
      if (auto* iso = std::get_if<IsolatedZero>(&d.kind)) {
        iso->z.q1 += 1e-3;  // far beyond 1e3 * tolerance
        perturbed = true;
        break;
      }
    }
    if (!perturbed) continue;
    EXPECT_FALSE(certify(r, 1e-8).passed) << "trial " << n;
    ++flipped;
  }
  EXPECT_GT(flipped, 20);
}
