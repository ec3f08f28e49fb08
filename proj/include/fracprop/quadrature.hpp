#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

namespace fracprop {

/// Nodes and weights of an n-point rule on a reference interval.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] (Golub-Welsch). Cached per n.
const QuadRule& gauss_legendre(int n);

/// Gauss-Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b, a,b > -1.
/// Not cached; callers hold on to the rules they reuse.
QuadRule gauss_jacobi(int n, double a, double b);

/// Fixed-order pairwise summation; deterministic for bit-stable output.
std::complex<double> pairwise_sum(std::span<const std::complex<double>> terms);
double pairwise_sum(std::span<const double> terms);

/// Least-squares slope of log|y| vs log|x|, for decay-order fits.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

/// Reciprocal gamma 1/Gamma(x), entire: returns 0 at poles, uses the
/// reflection formula for negative arguments to dodge tgamma accuracy loss.
double rgamma(double x);

/// log Gamma wrapper (positive arguments).
double lgamma_pos(double x);

/// Geometric panel subdivision of [a, b] with ratio `ratio` starting from a
/// characteristic scale `h0`; returns breakpoints a = p_0 < ... < p_k = b.
std::vector<double> geometric_breakpoints(double a, double b, double h0, double ratio);

}  // namespace fracprop
