#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "fixtures.hpp"

using namespace coquat;
using cplx = std::complex<double>;
using fixtures::Gen;

namespace {

RealPolynomial from_roots(const std::vector<double>& roots) {
  RealPolynomial p{1.0};
  for (double r : roots) p = mul_real(p, RealPolynomial{-r, 1.0});
  return p;
}

int total_multiplicity(const std::vector<RootCluster>& cs) {
  int m = 0;
  for (const auto& c : cs) m += c.multiplicity;
  return m;
}

}  // namespace

TEST(RealPolynomial, TrimsAndEvaluates) {
  const RealPolynomial p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_DOUBLE_EQ(p(3.0), 7.0);
  EXPECT_EQ(RealPolynomial{}.degree(), -1);
  EXPECT_EQ((RealPolynomial{1, 2, 3}.derivative()), (RealPolynomial{2, 6}));
}

TEST(MulReal, Examples) {
  EXPECT_EQ(mul_real({-1, 1}, {-1, 1}), (RealPolynomial{1, -2, 1}));
  // (x^2 + 1)(x^2 + 2x + 3) = x^4 + 2x^3 + 4x^2 + 2x + 3
  EXPECT_EQ(mul_real({1, 0, 1}, {3, 2, 1}), (RealPolynomial{3, 2, 4, 2, 1}));
  const RealPolynomial p{4, -1, 0.5};
  EXPECT_EQ(mul_real(p, {1.0}), p);
}

TEST(MulReal, EvaluationIsMultiplicative) {
  Gen g(21);
  for (int n = 0; n < 100; ++n) {
    const auto p = g.real_poly(g.integer(0, 6));
    const auto q = g.real_poly(g.integer(0, 6));
    const double x = g.real();
    EXPECT_NEAR(mul_real(p, q)(x), p(x) * q(x), 1e-9 * (1 + std::abs(p(x) * q(x))));
  }
}

TEST(Divide, Identity) {
  Gen g(22);
  for (int n = 0; n < 100; ++n) {
    const auto p = g.real_poly(g.integer(2, 9));
    const auto d = g.real_poly(g.integer(1, 3));
    const auto [q, r] = divide(p, d);
    EXPECT_LT(r.degree(), d.degree());
    const auto back = mul_real(q, d);
    for (int i = 0; i <= p.degree(); ++i) {
      EXPECT_NEAR(back[i] + r[i], p[i], 1e-9 * (1 + p.max_abs()));
    }
  }
}

TEST(TaylorCoefficients, MatchDerivatives) {
  const RealPolynomial p{1, -3, 0, 2};  // 2x^3 - 3x + 1
  const auto t = taylor_coefficients(p, cplx(2.0, 0.0));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_NEAR(t[0].real(), 11.0, 1e-12);
  EXPECT_NEAR(t[1].real(), 21.0, 1e-12);  // 6x^2 - 3
  EXPECT_NEAR(t[2].real(), 12.0, 1e-12);  // 12x / 2
  EXPECT_NEAR(t[3].real(), 2.0, 1e-12);
}

TEST(RealRoots, UnitCircle) {
  const auto roots = real_roots({1, 0, 1});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(std::abs(roots[0].value - cplx(0, -1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(roots[1].value - cplx(0, 1)), 0.0, 1e-12);
  EXPECT_EQ(roots[0].multiplicity, 1);
  EXPECT_FALSE(roots[0].is_real);
}

TEST(RealRoots, FourSimpleRealRoots) {
  const auto roots = real_roots(companion(fixtures::four_real_roots_quadratic()));
  ASSERT_EQ(roots.size(), 4u);
  for (int r = 1; r <= 4; ++r) {
    EXPECT_NEAR(roots[r - 1].value.real(), r, 1e-10);
    EXPECT_EQ(roots[r - 1].value.imag(), 0.0);
    EXPECT_EQ(roots[r - 1].multiplicity, 1);
    EXPECT_TRUE(roots[r - 1].is_real);
  }
}

TEST(RealRoots, QuadrupleRoot) {
  const auto roots = real_roots(from_roots({1, 1, 1, 1}));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_EQ(roots[0].multiplicity, 4);
  EXPECT_TRUE(roots[0].is_real);
  EXPECT_NEAR(roots[0].value.real(), 1.0, 1e-10);
}

TEST(RealRoots, MixedMultiplicities) {
  // (x-1)^3 (x-3) (x^2+1)^2
  auto p = mul_real(from_roots({1, 1, 1, 3}), mul_real({1, 0, 1}, {1, 0, 1}));
  const auto roots = real_roots(p);
  EXPECT_EQ(total_multiplicity(roots), 8);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_NEAR(std::abs(roots[0].value - cplx(0, -1)), 0.0, 1e-8);
  EXPECT_EQ(roots[0].multiplicity, 2);
  EXPECT_EQ(roots[2].multiplicity, 3);
  EXPECT_NEAR(roots[2].value.real(), 1.0, 1e-10);
  EXPECT_EQ(roots[3].multiplicity, 1);
}

TEST(RealRoots, ZeroRootsArePeeled) {
  const auto roots = real_roots({0, 0, -1, 1});  // x^2 (x - 1)
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].value, cplx(0, 0));
  EXPECT_EQ(roots[0].multiplicity, 2);
}

TEST(RealRoots, ConstantIsDegenerate) {
  EXPECT_THROW(real_roots({3.0}), DegenerateInput);
  EXPECT_THROW(real_roots(RealPolynomial{}), DegenerateInput);
}

TEST(RealRoots, RandomPolynomialsRecovered) {
  Gen g(23);
  for (int n = 0; n < 100; ++n) {
    std::vector<double> rs;
    const int deg = g.integer(1, 10);
    for (int i = 0; i < deg; ++i) rs.push_back(g.real(-5.0, 5.0));
    const auto roots = real_roots(from_roots(rs));
    EXPECT_EQ(total_multiplicity(roots), deg);
    for (const auto& c : roots) {
      const double nearest = *std::min_element(rs.begin(), rs.end(), [&](double a, double b) {
        return std::abs(a - c.value.real()) < std::abs(b - c.value.real());
      });
      EXPECT_NEAR(std::abs(c.value - cplx(nearest, 0)), 0.0, 1e-5);
    }
  }
}

TEST(RealRoots, ConjugateSymmetry) {
  Gen g(24);
  for (int n = 0; n < 100; ++n) {
    const auto p = g.real_poly(g.integer(1, 12));
    const auto roots = real_roots(p);
    EXPECT_EQ(total_multiplicity(roots), p.degree());
    for (const auto& c : roots) {
      if (c.is_real) {
        EXPECT_EQ(c.value.imag(), 0.0);
        continue;
      }
      const bool has_partner = std::any_of(roots.begin(), roots.end(), [&](const RootCluster& o) {
        return o.multiplicity == c.multiplicity && o.value == std::conj(c.value);
      });
      EXPECT_TRUE(has_partner);
      EXPECT_LE(std::abs(p(c.value)), 1e-8 * (1 + p.norm1() * std::pow(std::abs(c.value), p.degree())));
    }
  }
}
