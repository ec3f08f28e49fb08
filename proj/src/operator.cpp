#include "fracprop/operator.hpp"

#include <cmath>
#include <random>

namespace fracprop {

const StateVector& SectorialOperator::eigenvalues() const {
  throw std::invalid_argument("operator does not expose an eigendecomposition");
}

StateVector SectorialOperator::to_eigenbasis(const StateVector&) const {
  throw std::invalid_argument("operator does not expose an eigendecomposition");
}

StateVector SectorialOperator::from_eigenbasis(const StateVector&) const {
  throw std::invalid_argument("operator does not expose an eigendecomposition");
}

StateVector fractional_power_apply(const SectorialOperator& op, double gamma,
                                   const StateVector& x) {
  if (gamma < 0.0) throw std::invalid_argument("fractional power: gamma must be >= 0");
  if (!op.has_eigendecomposition())
    throw std::invalid_argument("fractional power: operator lacks eigendecomposition");
  if (x.size() != op.dimension())
    throw std::invalid_argument("fractional power: dimension mismatch");
  if (gamma == 0.0) return x;
  StateVector c = op.to_eigenbasis(x);
  const StateVector& lam = op.eigenvalues();
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] *= std::pow(lam[i], Complex(gamma));
  return op.from_eigenbasis(c);
}

SectorBoundReport check_sector_bound(const SectorialOperator& op,
                                     const std::vector<Complex>& z_samples,
                                     int probes_per_sample) {
  const auto& sec = op.sector();
  for (Complex z : z_samples)
    if (sec.contains(z))
      throw std::invalid_argument("check_sector_bound: sample lies inside the sector");

  // deterministic probe vectors: unit basis cycles plus fixed random draws
  std::mt19937_64 rng(0x5ec70fbd);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const Eigen::Index n = op.dimension();
  SectorBoundReport rep;
  for (Complex z : z_samples) {
    for (int p = 0; p < probes_per_sample; ++p) {
      StateVector x(n);
      if (p < std::min<Eigen::Index>(n, probes_per_sample / 2)) {
        x.setZero();
        x[p % n] = 1.0;
      } else {
        for (Eigen::Index i = 0; i < n; ++i) x[i] = Complex(gauss(rng), gauss(rng));
        x /= x.norm();
      }
      // R(z, A) = -( (-z) I + A )^{-1}
      StateVector y = op.resolvent_solve(-z, x);
      const double ratio = (1.0 + std::abs(z)) * state_norm(y) / state_norm(x);
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.worst_sample = z;
      }
    }
  }
  rep.violated = rep.max_ratio > sec.M * (1.0 + 1e-12);
  return rep;
}

}  // namespace fracprop
