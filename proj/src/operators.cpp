#include "fracprop/operators.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fracprop {

namespace {

// Sector declaration for a known finite spectrum: vertex just below the
// smallest real part, half-angle covering every eigenvalue's argument with
// margin, M measured from the normal-operator resolvent formula.
SpectralSector declare_sector(const StateVector& lambda) {
  double min_re = 1e300;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (!(lambda[i].real() > 0.0))
      throw std::invalid_argument("eigenvalue with non-positive real part cannot sit in a sector");
    min_re = std::min(min_re, lambda[i].real());
  }
  const double rho = 0.95 * min_re;
  double phi = 0.05;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    const Complex w = lambda[i] - rho;
    phi = std::max(phi, std::abs(std::arg(w)) + 0.02);
  }
  if (phi >= 1.45) throw std::invalid_argument("spectrum too wide for a declarable sector");
  // for normal operators ||R(z,A)|| = 1/dist(z, Sp A); bound the worst ratio
  // (1+|z|)/dist over the sector complement by sampling its boundary
  double M = 1.0;
  for (int j = 0; j <= 400; ++j) {
    const double rr = std::pow(10.0, -2.0 + 6.0 * j / 400.0);
    for (double sgn : {-1.0, 1.0}) {
      const Complex z = rho + std::polar(rr, sgn * phi);
      double dist = 1e300;
      for (Eigen::Index i = 0; i < lambda.size(); ++i)
        dist = std::min(dist, std::abs(z - lambda[i]));
      M = std::max(M, (1.0 + std::abs(z)) / dist);
    }
  }
  return SpectralSector(rho, phi, 1.05 * M);
}

}  // namespace

DiagonalOperator::DiagonalOperator(StateVector eigenvalues,
                                   std::optional<SpectralSector> sector)
    : lambda_(std::move(eigenvalues)),
      sector_(sector ? *sector : declare_sector(lambda_)) {
  if (lambda_.size() == 0) throw std::invalid_argument("diagonal operator needs eigenvalues");
  for (Eigen::Index i = 0; i < lambda_.size(); ++i)
    if (!sector_.contains(lambda_[i]))
      throw std::invalid_argument("eigenvalue outside the declared sector");
}

void DiagonalOperator::apply(const StateVector& x, StateVector& y) const {
  check_dimension(x);
  y = lambda_.cwiseProduct(x);
}

void DiagonalOperator::resolvent_solve(Complex w, const StateVector& x, StateVector& y) const {
  check_dimension(x);
  y.resize(lambda_.size());
  for (Eigen::Index i = 0; i < lambda_.size(); ++i) {
    const Complex d = w + lambda_[i];
    if (std::abs(d) < 1e-300 * (1.0 + std::abs(w)))
      throw NumericalError("resolvent shift hit an eigenvalue");
    y[i] = x[i] / d;
  }
}

Laplacian1D::Laplacian1D(int n)
    : n_(n), h_(1.0 / (n + 1.0)), lambda_(n), modes_(n, n), sector_(1.0, 0.05, 1.0) {
  if (n < 1) throw std::invalid_argument("Laplacian1D needs n >= 1");
  for (int k = 1; k <= n_; ++k) {
    lambda_[k - 1] = eigenvalue_closed_form(k);
    for (int j = 1; j <= n_; ++j)
      modes_(j - 1, k - 1) = std::sqrt(2.0 / (n_ + 1.0)) *
                             std::sin(k * j * std::numbers::pi / (n_ + 1.0));
  }
  sector_ = declare_sector(lambda_);
}

double Laplacian1D::eigenvalue_closed_form(int k) const {
  const double s = std::sin(0.5 * k * std::numbers::pi * h_);
  return 4.0 / (h_ * h_) * s * s;
}

void Laplacian1D::apply(const StateVector& x, StateVector& y) const {
  check_dimension(x);
  y.resize(n_);
  const double ih2 = 1.0 / (h_ * h_);
  for (int j = 0; j < n_; ++j) {
    Complex v = 2.0 * x[j];
    if (j > 0) v -= x[j - 1];
    if (j + 1 < n_) v -= x[j + 1];
    y[j] = ih2 * v;
  }
}

void Laplacian1D::resolvent_solve(Complex w, const StateVector& x, StateVector& y) const {
  check_dimension(x);
  // Thomas algorithm for (w I + A), A = (1/h^2) tridiag(-1, 2, -1)
  const double ih2 = 1.0 / (h_ * h_);
  const Complex diag = w + 2.0 * ih2;
  const Complex off = -ih2;
  std::vector<Complex> c(n_), d(n_);
  Complex den = diag;
  if (std::abs(den) < 1e-300) throw NumericalError("singular tridiagonal solve");
  c[0] = off / den;
  d[0] = x[0] / den;
  for (int i = 1; i < n_; ++i) {
    den = diag - off * c[i - 1];
    if (std::abs(den) < 1e-300) throw NumericalError("singular tridiagonal solve");
    c[i] = off / den;
    d[i] = (x[i] - off * d[i - 1]) / den;
  }
  y.resize(n_);
  y[n_ - 1] = d[n_ - 1];
  for (int i = n_ - 2; i >= 0; --i) y[i] = d[i] - c[i] * y[i + 1];
}

StateVector Laplacian1D::to_eigenbasis(const StateVector& x) const {
  check_dimension(x);
  return modes_.transpose().cast<Complex>() * x;
}

StateVector Laplacian1D::from_eigenbasis(const StateVector& c) const {
  if (c.size() != n_) throw std::invalid_argument("eigen coordinate dimension mismatch");
  return modes_.cast<Complex>() * c;
}

std::shared_ptr<SectorialOperator> make_diagonal(StateVector eigenvalues,
                                                 std::optional<SpectralSector> sector) {
  return std::make_shared<DiagonalOperator>(std::move(eigenvalues), sector);
}

std::shared_ptr<SectorialOperator> make_scalar(Complex lambda) {
  StateVector l(1);
  l[0] = lambda;
  return make_diagonal(std::move(l));
}

std::shared_ptr<SectorialOperator> make_laplacian_1d(int n) {
  return std::make_shared<Laplacian1D>(n);
}

StateVector manufacture_data(const SectorialOperator& op, double gamma, std::uint64_t seed) {
  if (!op.has_eigendecomposition())
    throw std::invalid_argument("manufacture_data: operator lacks eigendecomposition");
  constexpr double eps = 0.05;
  const StateVector& lam = op.eigenvalues();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  StateVector c(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    const double mag = std::pow(std::abs(lam[i]), -gamma - 0.5 - eps);
    c[i] = (coin(rng) ? 1.0 : -1.0) * mag;
  }
  StateVector x = op.from_eigenbasis(c);
  x /= state_norm(x, op.norm_weight());
  return x;
}

}  // namespace fracprop
