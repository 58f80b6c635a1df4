#pragma once

namespace coquat {

// Every numerical threshold used by the pipeline. The case analysis that
// classifies zeros is discontinuous in its inputs, so none of these are
// hidden constants.
struct Tolerances {
  // |dt(q)| <= singular * (1 + |q|^2) marks q as a zero divisor.
  double singular = 1e-10;
  // |dv(q)| <= type * (1 + |q|^2) classifies q as Type 3.
  double type = 1e-9;
  // Base radius for merging numerically coincident companion roots.
  double cluster = 1e-6;
  // Radius growth for clusters of multiplicity m >= 3: the merge radius is
  // max(cluster, multiple^(1/m)) * (1 + |value|).
  double multiple = 1e-12;
  // Taylor-coefficient test for validating loose multiple-root clusters.
  double multiplicity_check = 1e-9;
  // |B| <= zero_remainder * (1 + |P|) treats B (and A) as zero.
  double zero_remainder = 1e-8;
  // Line condition (q0 - gamma0)^2 = -dv.
  double linear = 1e-8;
  // Least-squares residual of M_B z = -A.
  double consistency = 1e-8;
  // Coefficientwise polynomial comparisons.
  double poly_zero = 1e-10;

  // Every threshold multiplied by `factor`.
  [[nodiscard]] Tolerances scaled(double factor) const {
    Tolerances t = *this;
    t.singular *= factor;
    t.type *= factor;
    t.cluster *= factor;
    t.multiple *= factor;
    t.multiplicity_check *= factor;
    t.zero_remainder *= factor;
    t.linear *= factor;
    t.consistency *= factor;
    t.poly_zero *= factor;
    return t;
  }
};

}  // namespace coquat
