#include "fracprop/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace fracprop {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric Jacobi matrix built
// from the three-term recurrence, weights mu0 * (first eigenvector entry)^2.
QuadRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                      double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = diag[i];
    if (i + 1 < n) {
      J(i, i + 1) = offdiag[i];
      J(i + 1, i) = offdiag[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> diag(n, 0.0), off(n > 1 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  auto rule = golub_welsch(diag, off, 2.0);
  return cache.emplace(n, std::move(rule)).first->second;
}

QuadRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  if (a <= -1.0 || b <= -1.0)
    throw std::invalid_argument("gauss_jacobi: weight exponents must exceed -1");

  // recurrence coefficients for Jacobi polynomials P_k^{(a,b)}
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    diag[k] = (b * b - a * a) / den;
    double num;
    if (k == 1) {
      num = 4.0 * 1.0 * (1.0 + a) * (1.0 + b) /
            ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      num = 4.0 * k * (k + a) * (k + b) * (k + ab) /
            ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
             (2.0 * k + ab - 1.0));
    }
    off[k - 1] = std::sqrt(num);
  }
  // mu0 = int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
  const double mu0 =
      std::pow(2.0, ab + 1.0) *
      std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
  return golub_welsch(diag, off, mu0);
}

namespace {

template <typename T>
T pairwise_impl(std::span<const T> v, size_t lo, size_t hi) {
  const size_t n = hi - lo;
  if (n == 0) return T{};
  if (n <= 8) {
    T acc = v[lo];
    for (size_t i = lo + 1; i < hi; ++i) acc += v[i];
    return acc;
  }
  const size_t mid = lo + n / 2;
  return pairwise_impl(v, lo, mid) + pairwise_impl(v, mid, hi);
}

}  // namespace

std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms) {
  return pairwise_impl(terms, 0, terms.size());
}

double pairwise_sum(std::span<const double> terms) {
  return pairwise_impl(terms, 0, terms.size());
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;  // skip exact zeros
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("fit_loglog_slope: not enough positive data");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double rgamma(double x) {
  if (x > 0.0) {
    if (x > 170.0) return std::exp(-std::lgamma(x));
    return 1.0 / std::tgamma(x);
  }
  // poles at 0, -1, -2, ...
  const double r = x - std::round(x);
  if (x == std::round(x)) return 0.0;
  // 1/Gamma(x) = Gamma(1-x) sin(pi x)/pi; sin via the reduced argument
  const double s = std::sin(std::numbers::pi * r) * (std::fmod(std::round(x), 2.0) == 0.0 ? 1.0 : -1.0);
  const double lg = std::lgamma(1.0 - x);
  if (lg > 700.0) {
    // magnitude overflows only together with s ~ 0; combine in log space
    return std::copysign(std::exp(lg + std::log(std::abs(s) / std::numbers::pi)), s);
  }
  return std::exp(lg) * s / std::numbers::pi;
}

double lgamma_pos(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("lgamma_pos: argument must be positive");
  return std::lgamma(x);
}

std::vector<double> geometric_breakpoints(double a, double b, double h0, double ratio) {
  if (!(b > a)) throw std::invalid_argument("geometric_breakpoints: empty interval");
  std::vector<double> pts{a};
  double h = h0;
  double p = a;
  while (p + h < b) {
    p += h;
    pts.push_back(p);
    h *= ratio;
    if (pts.size() > 4096) throw std::invalid_argument("geometric_breakpoints: too many panels");
  }
  pts.push_back(b);
  return pts;
}

}  // namespace fracprop
