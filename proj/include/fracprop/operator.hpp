#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "fracprop/types.hpp"

namespace fracprop {

/// Abstract strongly positive operator A: spectrum inside Sigma(rho, phi),
/// resolvent bound M/(1+|z|) outside. Propagator code only ever calls
/// apply() and resolvent_solve(); eigendecomposition is an optional
/// capability used by fixtures, oracles and fractional powers.
class SectorialOperator {
 public:
  virtual ~SectorialOperator() = default;

  virtual Eigen::Index dimension() const = 0;
  virtual const SpectralSector& sector() const = 0;

  /// y = A x
  virtual void apply(const StateVector& x, StateVector& y) const = 0;

  /// Solves (w I + A) y = x. Throws NumericalError on (near-)singular w.
  virtual void resolvent_solve(Complex w, const StateVector& x, StateVector& y) const = 0;

  virtual bool has_eigendecomposition() const { return false; }
  /// Eigenvalues of A (only when has_eigendecomposition()).
  virtual const StateVector& eigenvalues() const;
  /// Coordinates of x in the eigenbasis / reconstruction from coordinates.
  virtual StateVector to_eigenbasis(const StateVector& x) const;
  virtual StateVector from_eigenbasis(const StateVector& c) const;

  /// Optional diagonal norm weight (discrete L^2); nullptr = Euclidean.
  virtual const RealVector* norm_weight() const { return nullptr; }

  StateVector apply(const StateVector& x) const {
    StateVector y(dimension());
    apply(x, y);
    return y;
  }
  StateVector resolvent_solve(Complex w, const StateVector& x) const {
    StateVector y(dimension());
    resolvent_solve(w, x, y);
    return y;
  }

 protected:
  void check_dimension(const StateVector& x) const {
    if (x.size() != dimension())
      throw std::invalid_argument("operator/state dimension mismatch");
  }
};

/// A^gamma x through the eigendecomposition (principal powers of the
/// eigenvalues). Requires gamma >= 0 and eigendecomposition capability.
StateVector fractional_power_apply(const SectorialOperator& op, double gamma,
                                   const StateVector& x);

/// Report of a resolvent-bound sweep: max over samples and probe vectors of
/// (1+|z|) ||R(z,A)x|| / ||x||, compared against the declared M.
struct SectorBoundReport {
  double max_ratio = 0.0;
  Complex worst_sample{};
  bool violated = false;
};

/// Probes the bound ||(zI-A)^{-1}|| <= M/(1+|z|) at the given samples, all of
/// which must lie outside the declared sector. Uses resolvent_solve on a set
/// of deterministic unit probe vectors.
SectorBoundReport check_sector_bound(const SectorialOperator& op,
                                     const std::vector<Complex>& z_samples,
                                     int probes_per_sample = 8);

}  // namespace fracprop
