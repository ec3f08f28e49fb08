#pragma once

#include <cstdint>
#include <memory>

#include "fracprop/operator.hpp"

namespace fracprop {

/// Diagonal fixture: A = diag(lambda_1..lambda_n), exact resolvent and powers.
/// Eigenvalues may be complex as long as they fit a declarable sector.
class DiagonalOperator final : public SectorialOperator {
 public:
  explicit DiagonalOperator(StateVector eigenvalues,
                            std::optional<SpectralSector> sector = std::nullopt);

  Eigen::Index dimension() const override { return lambda_.size(); }
  const SpectralSector& sector() const override { return sector_; }
  void apply(const StateVector& x, StateVector& y) const override;
  void resolvent_solve(Complex w, const StateVector& x, StateVector& y) const override;
  bool has_eigendecomposition() const override { return true; }
  const StateVector& eigenvalues() const override { return lambda_; }
  StateVector to_eigenbasis(const StateVector& x) const override { return x; }
  StateVector from_eigenbasis(const StateVector& c) const override { return c; }

 private:
  StateVector lambda_;
  SpectralSector sector_;
};

/// 1D Dirichlet Laplacian A = -d^2/dx^2 on (0,1), n interior points,
/// h = 1/(n+1). Tridiagonal; eigenpairs are the discrete sine modes
/// lambda_k = (4/h^2) sin^2(k pi h / 2).
class Laplacian1D final : public SectorialOperator {
 public:
  explicit Laplacian1D(int n);

  Eigen::Index dimension() const override { return n_; }
  const SpectralSector& sector() const override { return sector_; }
  void apply(const StateVector& x, StateVector& y) const override;
  void resolvent_solve(Complex w, const StateVector& x, StateVector& y) const override;
  bool has_eigendecomposition() const override { return true; }
  const StateVector& eigenvalues() const override { return lambda_; }
  StateVector to_eigenbasis(const StateVector& x) const override;
  StateVector from_eigenbasis(const StateVector& c) const override;

  double mesh() const { return h_; }
  double eigenvalue_closed_form(int k) const;

 private:
  int n_;
  double h_;
  StateVector lambda_;
  Eigen::MatrixXd modes_;  // orthonormal sine modes, column k
  SpectralSector sector_;
};

std::shared_ptr<SectorialOperator> make_diagonal(
    StateVector eigenvalues, std::optional<SpectralSector> sector = std::nullopt);
std::shared_ptr<SectorialOperator> make_scalar(Complex lambda);
std::shared_ptr<SectorialOperator> make_laplacian_1d(int n);

/// Builds a unit-norm vector of prescribed regularity: eigen-coefficients
/// proportional to lambda_i^(-gamma - 1/2 - eps), signs drawn from the seed,
/// so x lies in D(A^gamma) but not in D(A^(gamma + 2 eps)). eps = 0.05.
StateVector manufacture_data(const SectorialOperator& op, double gamma, std::uint64_t seed);

}  // namespace fracprop
