#pragma once

#include <complex>

#include "fracprop/types.hpp"

namespace fracprop {

/// Parameter bundle for the two-parameter Mittag-Leffler function E_{alpha,beta}(z).
struct MLParams {
  double alpha;
  double beta;
  Complex z;
};

/// Evaluates E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta).
///
/// Validated domain: alpha in (0,2), arbitrary real beta, and z either small
/// (|z|^(1/alpha) <= 3.4, any argument) or in the wedge |arg z| >= alpha*pi/2
/// + 0.05 with |z| <= 1e6 (arguments of the form -lambda t^alpha). Outside
/// the validated domain an AccuracyDomainError is thrown rather than
/// returning a degraded value. Target relative accuracy 1e-12.
Complex ml(double alpha, double beta, Complex z);

inline Complex ml(const MLParams& p) { return ml(p.alpha, p.beta, p.z); }

namespace ml_detail {
// exposed for the unit tests' term-count convergence study
Complex taylor_series(double alpha, double beta, Complex z, int max_terms);
}  // namespace ml_detail

}  // namespace fracprop
