#include "coquat/real_poly.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>

#include "coquat/errors.hpp"

namespace coquat {

using cplx = std::complex<double>;

RealPolynomial::RealPolynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

RealPolynomial::RealPolynomial(std::initializer_list<double> coefficients)
    : RealPolynomial(std::vector<double>(coefficients)) {}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx RealPolynomial::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return RealPolynomial(std::move(d));
}

double RealPolynomial::norm1() const {
  return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0,
                         [](double acc, double c) { return acc + std::abs(c); });
}

double RealPolynomial::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

RealPolynomial mul_real(const RealPolynomial& p, const RealPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coefficients();
  const auto b = q.coefficients();
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return RealPolynomial(std::move(out));
}

std::pair<RealPolynomial, RealPolynomial> divide(const RealPolynomial& p,
                                                 const RealPolynomial& divisor) {
  if (divisor.is_zero()) throw DegenerateInput("division by the zero polynomial");
  const int n = p.degree();
  const int d = divisor.degree();
  if (n < d) return {RealPolynomial{}, p};
  std::vector<double> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<double> quot(static_cast<std::size_t>(n - d + 1), 0.0);
  const double lead = divisor.leading();
  for (int k = n - d; k >= 0; --k) {
    const double c = rem[static_cast<std::size_t>(k + d)] / lead;
    quot[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= d; ++i) rem[static_cast<std::size_t>(k + i)] -= c * divisor[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(d));
  return {RealPolynomial(std::move(quot)), RealPolynomial(std::move(rem))};
}

std::vector<cplx> taylor_coefficients(const RealPolynomial& p, cplx x) {
  // Repeated synthetic division by (t - x).
  std::vector<cplx> work(p.coefficients().begin(), p.coefficients().end());
  std::vector<cplx> out;
  out.reserve(work.size());
  for (std::size_t len = work.size(); len > 0; --len) {
    for (std::size_t i = len - 1; i-- > 0;) work[i] += x * work[i + 1];
    out.push_back(work[0]);
    work.erase(work.begin());
  }
  return out;
}

namespace {

// Parlett-Reinsch style balancing restricted to powers of two so the
// scaling itself is exact.
void balance(Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  constexpr double kGamma = 0.9;
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      double row = 0.0;
      double col = 0.0;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == i) continue;
        row += std::abs(m(i, k));
        col += std::abs(m(k, i));
      }
      if (row == 0.0 || col == 0.0) continue;
      int exponent = 0;
      std::frexp(row / col, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col, exponent);
      const double scaled_row = std::ldexp(row, -exponent);
      if (scaled_col + scaled_row < kGamma * (col + row)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

std::vector<cplx> companion_eigenvalues(const std::vector<double>& monic) {
  const auto n = static_cast<Eigen::Index>(monic.size() - 1);
  if (n == 1) return {cplx(-monic[0], 0.0)};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -monic[static_cast<std::size_t>(i)];
  balance(c);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw DegenerateInput("companion matrix eigenvalue iteration did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// A few Newton steps; a step is kept only when it lowers |p|.
cplx polish(const RealPolynomial& p, const RealPolynomial& dp, cplx z) {
  cplx best = z;
  double best_res = std::abs(p(z));
  for (int it = 0; it < 8 && best_res > 0.0; ++it) {
    const cplx d = dp(best);
    if (d == 0.0) break;
    const cplx next = best - p(best) / d;
    const double res = std::abs(p(next));
    if (!(res < best_res)) break;
    best = next;
    best_res = res;
  }
  return best;
}

// A computed root in the closed upper half plane. `pair` roots stand for
// themselves and their conjugate.
// `z` is the raw eigenvalue, used for clustering: polishing the members of a
// multiple root separately scatters them, while the raw cluster mean stays
// close to the trace-determined sum. `polished` is reported for simple roots.
struct Point {
  cplx z;
  bool pair = false;
  cplx polished;
};

struct Group {
  bool real = false;
  cplx value;
  std::size_t first_member = 0;
  int multiplicity = 0;  // for complex groups: multiplicity of each of z, conj(z)
  double radius = 0.0;
};

class Clusterer {
 public:
  Clusterer(const RealPolynomial& monic, std::vector<Point> points, const Tolerances& tol)
      : p_(monic), points_(std::move(points)), tol_(tol) {
    abs_coeffs_.reserve(p_.coefficients().size());
    for (double c : p_.coefficients()) abs_coeffs_.push_back(std::abs(c));
  }

  std::vector<Group> run() {
    const std::size_t n = points_.size();
    if (n == 0) return {};
    // Single-linkage dendrogram via Kruskal over all pairwise distances.
    struct Edge {
      double d;
      std::size_t a, b;
    };
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) edges.push_back({std::abs(points_[a].z - points_[b].z), a, b});
    }
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.d < y.d; });

    // Nodes 0..n-1 are leaves; merges append internal nodes.
    children_.assign(n, {kNone, kNone});
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> node_of(n);
    std::iota(node_of.begin(), node_of.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : edges) {
      const std::size_t ra = find(e.a);
      const std::size_t rb = find(e.b);
      if (ra == rb) continue;
      children_.push_back({node_of[ra], node_of[rb]});
      parent[rb] = ra;
      node_of[ra] = children_.size() - 1;
    }
    std::vector<Group> out;
    accept(node_of[find(0)], out);
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void leaves(std::size_t node, std::vector<std::size_t>& acc) const {
    if (children_[node].first == kNone) {
      acc.push_back(node);
      return;
    }
    leaves(children_[node].first, acc);
    leaves(children_[node].second, acc);
  }

  void accept(std::size_t node, std::vector<Group>& out) {
    std::vector<std::size_t> members;
    leaves(node, members);
    if (auto g = evaluate(members)) {
      out.push_back(*g);
      return;
    }
    // Leaves always form a valid group, so recursion terminates.
    accept(children_[node].first, out);
    accept(children_[node].second, out);
  }

  [[nodiscard]] double radius_limit(int m, double magnitude) const {
    return std::max(tol_.cluster, std::pow(tol_.multiple, 1.0 / m)) * (1.0 + magnitude);
  }

  // p^(j)(x)/j! ~ 0 for all j < m, each measured against the same sum
  // taken over absolute coefficients.
  [[nodiscard]] bool taylor_vanishes(cplx x, int m) const {
    const auto t = taylor_coefficients(p_, x);
    const auto s = taylor_coefficients(RealPolynomial(abs_coeffs_), cplx(std::abs(x), 0.0));
    for (int j = 0; j < m && j < static_cast<int>(t.size()); ++j) {
      if (std::abs(t[static_cast<std::size_t>(j)]) > tol_.multiplicity_check * std::abs(s[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
    return true;
  }

  std::optional<Group> evaluate(const std::vector<std::size_t>& members) const {
    int count = 0;
    int pairs = 0;
    double re_sum = 0.0;
    cplx upper_sum = 0.0;
    for (std::size_t i : members) {
      const Point& pt = points_[i];
      const int w = pt.pair ? 2 : 1;
      count += w;
      pairs += pt.pair ? 1 : 0;
      re_sum += w * pt.z.real();
      upper_sum += pt.z;
    }

    // Real form: the full conjugate-closed multiset collapses to one point.
    {
      const double v = re_sum / count;
      double r = 0.0;
      for (std::size_t i : members) r = std::max(r, std::abs(points_[i].z - v));
      const double base = tol_.cluster * (1.0 + std::abs(v));
      if (r <= base || (r <= radius_limit(count, std::abs(v)) && taylor_vanishes(v, count))) {
        return Group{true, cplx(v, 0.0), members.front(), count, r};
      }
    }
    // Complex form: only conjugate pairs, clustered in the upper half plane.
    if (pairs == static_cast<int>(members.size())) {
      const cplx w = upper_sum / static_cast<double>(pairs);
      double r = 0.0;
      for (std::size_t i : members) r = std::max(r, std::abs(points_[i].z - w));
      const double base = tol_.cluster * (1.0 + std::abs(w));
      if (w.imag() > base &&
          (r <= base || (r <= radius_limit(pairs, std::abs(w)) && taylor_vanishes(w, pairs)))) {
        return Group{false, w, members.front(), pairs, r};
      }
    }
    return std::nullopt;
  }

  const RealPolynomial& p_;
  std::vector<Point> points_;
  Tolerances tol_;
  std::vector<double> abs_coeffs_;
  std::vector<std::pair<std::size_t, std::size_t>> children_;
};

// An m-fold root of p is a simple root of p^(m-1); Newton on that
// derivative sharpens the cluster mean.
cplx refine_multiple(const RealPolynomial& p, cplx v, int m, double max_shift) {
  RealPolynomial d = p;
  for (int k = 1; k < m; ++k) d = d.derivative();
  const RealPolynomial dd = d.derivative();
  cplx z = v;
  double res = std::abs(d(z));
  for (int it = 0; it < 8 && res > 0.0; ++it) {
    const cplx slope = dd(z);
    if (slope == 0.0) break;
    const cplx next = z - d(z) / slope;
    const double next_res = std::abs(d(next));
    if (!(next_res < res) || std::abs(next - v) > max_shift) break;
    z = next;
    res = next_res;
  }
  return z;
}

}  // namespace

std::vector<RootCluster> real_roots(const RealPolynomial& p, const Tolerances& tol) {
  if (p.degree() < 1) throw DegenerateInput("cannot extract roots of a constant polynomial");

  std::vector<double> monic(p.coefficients().begin(), p.coefficients().end());
  const double lead = monic.back();
  for (double& c : monic) c /= lead;

  // Exact zero roots are peeled off before the eigenvalue solve.
  std::size_t zeros = 0;
  while (zeros < monic.size() - 1 && monic[zeros] == 0.0) ++zeros;
  std::vector<double> reduced(monic.begin() + static_cast<std::ptrdiff_t>(zeros), monic.end());

  const RealPolynomial mp(monic);
  const RealPolynomial dmp = mp.derivative();

  std::vector<Point> points;
  for (std::size_t i = 0; i < zeros; ++i) points.push_back({cplx(0.0, 0.0), false, cplx(0.0, 0.0)});
  if (reduced.size() > 1) {
    for (const cplx& ev : companion_eigenvalues(reduced)) {
      if (ev.imag() < 0.0) continue;  // represented by its conjugate partner
      cplx z = polish(mp, dmp, ev);
      z = ev.imag() == 0.0 ? cplx(z.real(), 0.0) : cplx(z.real(), std::abs(z.imag()));
      points.push_back({ev, ev.imag() > 0.0, z});
    }
  }

  Clusterer clusterer(mp, points, tol);
  std::vector<RootCluster> out;
  for (const Group& g : clusterer.run()) {
    cplx v = g.value;
    if (g.multiplicity > 1) {
      const double shift = std::max(g.radius, tol.cluster * (1.0 + std::abs(v)));
      v = refine_multiple(mp, v, g.multiplicity, shift);
    } else {
      v = points[g.first_member].polished;
    }
    if (g.real) {
      out.push_back({cplx(v.real(), 0.0), g.multiplicity, true});
    } else {
      out.push_back({v, g.multiplicity, false});
      out.push_back({std::conj(v), g.multiplicity, false});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace coquat
