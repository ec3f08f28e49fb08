#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace fracprop {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Fractional differentiation order alpha in (0,2) with n = ceil(alpha).
struct FractionalOrder {
  double alpha;
  int n;

  explicit FractionalOrder(double a) : alpha(a), n(a > 1.0 ? 2 : 1) {
    if (!(a > 0.0) || !(a < 2.0))
      throw std::invalid_argument("fractional order must lie in (0,2), got " +
                                  std::to_string(a));
  }
  bool sub_parabolic() const { return n == 1; }
};

/// Spectral sector Sigma(rho, phi): vertex rho > 0 on the positive real axis,
/// half-angle phi < pi/2, plus the resolvent constant M of the bound
/// ||(zI - A)^{-1}|| <= M/(1+|z|) outside the sector.
struct SpectralSector {
  double rho;
  double phi;
  double M;

  SpectralSector(double rho_, double phi_, double M_) : rho(rho_), phi(phi_), M(M_) {
    if (!(rho > 0.0)) throw std::invalid_argument("sector vertex rho must be positive");
    if (!(phi > 0.0 && phi < 1.5707963267948966))
      throw std::invalid_argument("sector half-angle must lie in (0, pi/2)");
    if (!(M > 0.0)) throw std::invalid_argument("resolvent constant M must be positive");
  }

  /// Membership test for the closed sector.
  bool contains(Complex v) const {
    Complex w = v - rho;
    if (std::abs(w) == 0.0) return true;
    return std::abs(std::arg(w)) <= phi;
  }
};

// Error taxonomy. The CLI maps these onto exit codes.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AccuracyDomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ContourError : std::domain_error {
  using std::domain_error::domain_error;
};
struct StrictRefusalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Euclidean norm, or the weighted norm sqrt(sum w_i |x_i|^2) when a diagonal
/// weight is supplied (discrete L^2 for mesh-based operators).
inline double state_norm(const StateVector& x, const RealVector* weight = nullptr) {
  if (!weight) return x.norm();
  if (weight->size() != x.size())
    throw std::invalid_argument("norm weight dimension mismatch");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) acc += (*weight)[i] * std::norm(x[i]);
  return std::sqrt(acc);
}

inline void require_finite(const StateVector& x, const char* what) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i].real()) || !std::isfinite(x[i].imag()))
      throw NumericalError(std::string(what) + ": non-finite entry");
}

}  // namespace fracprop
