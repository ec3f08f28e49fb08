#include "fracprop/mittag_leffler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fracprop/quadrature.hpp"

namespace fracprop {

namespace {

constexpr double kPi = std::numbers::pi;

// |z|^(1/alpha) <= kSeriesCap keeps the largest series term below e^3.4,
// so double arithmetic retains ~12 digits through the cancellation.
constexpr double kSeriesCap = 3.4;

Complex cpow(Complex b, double e) { return std::pow(b, e); }

// E_{1,m}(z) for integer m >= 1: z^{1-m} (e^z - sum_{j<m-1} z^j/j!).
Complex ml_alpha_one(int m, Complex z) {
  Complex partial = 0.0;
  Complex zj = 1.0;
  double fact = 1.0;
  for (int j = 0; j <= m - 2; ++j) {
    partial += zj / fact;
    zj *= z;
    fact *= (j + 1.0);
  }
  return (std::exp(z) - partial) * std::pow(z, Complex(1.0 - m));
}

struct CutSetup {
  double alpha, beta;
  Complex z;
  Complex phase_up, phase_dn;  // e^{+-i pi (alpha-beta+1)}
  Complex rot_up, rot_dn;      // e^{+-i pi alpha}
};

// integrand of the collapsed Hankel contour in the radial variable q = |s|
Complex cut_integrand(const CutSetup& c, double q) {
  const double qa = std::pow(q, c.alpha);
  const Complex up = c.phase_up / (qa * c.rot_up - c.z);
  const Complex dn = c.phase_dn / (qa * c.rot_dn - c.z);
  const double amp = std::exp(-q) * std::pow(q, c.alpha - c.beta);
  return amp * (up - dn) / Complex(0.0, 2.0 * kPi);
}

Complex integrate_panels(const CutSetup& c, const std::vector<double>& brk, int nodes_per_panel) {
  std::vector<Complex> parts;
  parts.reserve((brk.size() - 1) * nodes_per_panel);
  const QuadRule& gl = gauss_legendre(nodes_per_panel);
  for (size_t p = 0; p + 1 < brk.size(); ++p) {
    const double a = brk[p], b = brk[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < nodes_per_panel; ++i)
      parts.push_back(half * gl.weights[i] * cut_integrand(c, mid + half * gl.nodes[i]));
  }
  return pairwise_sum(std::span<const Complex>(parts));
}

}  // namespace

namespace ml_detail {

Complex taylor_series(double alpha, double beta, Complex z, int max_terms) {
  // Kahan-compensated; gamma-pole terms (beta <= 0) come out as exact zeros
  Complex sum = 0.0, comp = 0.0;
  Complex zp = 1.0;
  double max_abs = 0.0;
  int tiny_streak = 0;
  for (int k = 0; k < max_terms; ++k) {
    const Complex term = zp * rgamma(alpha * k + beta);
    const Complex y = term - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    max_abs = std::max(max_abs, std::abs(term));
    if (k > 3) {
      if (std::abs(term) < 1e-17 * std::max(std::abs(sum), 1e-300))
        ++tiny_streak;
      else
        tiny_streak = 0;
      if (tiny_streak >= 3) break;
    }
    zp *= z;
  }
  return sum;
}

}  // namespace ml_detail

Complex ml(double alpha, double beta, Complex z) {
  if (!(alpha > 0.0)) throw std::invalid_argument("ml: alpha must be positive");
  if (!(alpha < 2.005))
    throw AccuracyDomainError("ml: alpha > 2 is outside the validated domain");
  if (!std::isfinite(beta) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("ml: non-finite argument");

  if (z == Complex(0.0)) return rgamma(beta);

  const double az = std::abs(z);
  if (std::pow(az, 1.0 / alpha) <= kSeriesCap)
    return ml_detail::taylor_series(alpha, beta, z, 400);

  // alpha == 1 with large |z|: exponential closed forms (integer beta)
  if (std::abs(alpha - 1.0) < 1e-9) {
    const double br = std::round(beta);
    if (std::abs(beta - br) < 1e-12 && br >= 1.0 && br <= 16.0)
      return ml_alpha_one(static_cast<int>(br), z);
    throw AccuracyDomainError("ml: alpha == 1 with non-integer beta and large |z|");
  }

  const double argz = std::arg(z);
  if (std::abs(argz) < 0.5 * alpha * kPi + 0.05)
    throw AccuracyDomainError("ml: argument outside the validated wedge |arg z| >= alpha*pi/2");
  if (az > 1e6) throw AccuracyDomainError("ml: |z| > 1e6 is outside the validated domain");

  // ---- exponential contributions of the principal-sheet roots of s^alpha = z
  Complex total = 0.0;
  const double rad = std::pow(az, 1.0 / alpha);
  for (int k = -2; k <= 2; ++k) {
    const double th = (argz + 2.0 * kPi * k) / alpha;
    if (std::abs(th) < kPi - 1e-12) {
      const Complex s = rad * Complex(std::cos(th), std::sin(th));
      total += (1.0 / alpha) * cpow(s, 1.0 - beta) * std::exp(s);
    }
  }

  // ---- circular arc of the collapsed Hankel contour (needed when the radial
  // integrand is non-integrable at q = 0, i.e. beta >= 1)
  const bool use_arc = beta >= 1.0;
  const double rho_s = std::min(0.5, 0.5 * rad);
  if (use_arc) {
    const int n_arc = 48;
    const QuadRule& gl = gauss_legendre(n_arc);
    std::vector<Complex> parts(n_arc);
    for (int i = 0; i < n_arc; ++i) {
      const double th = kPi * gl.nodes[i];
      const Complex s = rho_s * Complex(std::cos(th), std::sin(th));
      parts[i] = kPi * gl.weights[i] / (2.0 * kPi) * std::exp(s) * cpow(s, alpha - beta + 1.0) /
                 (cpow(s, alpha) - z);
    }
    total += pairwise_sum(std::span<const Complex>(parts));
  }

  // ---- radial cut integral
  CutSetup c;
  c.alpha = alpha;
  c.beta = beta;
  c.z = z;
  c.phase_up = std::polar(1.0, kPi * (alpha - beta + 1.0));
  c.phase_dn = std::conj(c.phase_up);
  c.rot_up = std::polar(1.0, kPi * alpha);
  c.rot_dn = std::conj(c.rot_up);

  const double q0 = use_arc ? rho_s : 0.0;
  double q_up = 46.0 + 8.0 * std::max(0.0, alpha - beta);

  // poles of the rational factor: q^alpha e^{+-i pi alpha} = z
  std::vector<double> brk;
  double d_min = 1e300;
  std::vector<double> pole_pos;
  for (int sgn : {+1, -1}) {
    const double ang = (argz - sgn * kPi * alpha) / alpha;
    const double d = rad * std::abs(std::sin(ang));
    // only poles whose radial position matters for the truncated integral
    if (rad < 1.3 * q_up && std::cos(ang) > 0.0) {
      d_min = std::min(d_min, d);
      pole_pos.push_back(rad * std::cos(ang));
    }
  }
  if (d_min < 1e-7 * std::max(1.0, rad))
    throw AccuracyDomainError("ml: resolvent pole too close to the radial contour");

  if (q0 == 0.0) {
    // substitute q = u^p with p = 2/(1+alpha-beta): integrand ~ u, no cusp
    const double sigma = alpha - beta;
    const double p = 2.0 / (1.0 + sigma);
    const double u_up = std::pow(q_up, 1.0 / p);
    std::vector<double> ubrk = geometric_breakpoints(0.0, u_up, u_up / 24.0, 1.35);
    // refine around pole preimages
    for (double qp : pole_pos) {
      const double up_ = std::pow(qp, 1.0 / p);
      const double du = std::max(d_min, 1e-6) / (p * std::pow(std::max(qp, 1e-12), 1.0 - 1.0 / p));
      for (double f : {-4.0, -2.0, -1.0, 1.0, 2.0, 4.0}) {
        const double v = up_ + f * du;
        if (v > 0.0 && v < u_up) ubrk.push_back(v);
      }
    }
    std::sort(ubrk.begin(), ubrk.end());
    ubrk.erase(std::unique(ubrk.begin(), ubrk.end()), ubrk.end());
    const int n_p = 20;
    const QuadRule& gl = gauss_legendre(n_p);
    std::vector<Complex> parts;
    for (size_t pan = 0; pan + 1 < ubrk.size(); ++pan) {
      const double a = ubrk[pan], b = ubrk[pan + 1];
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (int i = 0; i < n_p; ++i) {
        const double u = mid + half * gl.nodes[i];
        const double q = std::pow(u, p);
        parts.push_back(half * gl.weights[i] * p * std::pow(u, p - 1.0) * cut_integrand(c, q));
      }
    }
    total += pairwise_sum(std::span<const Complex>(parts));
  } else {
    brk = geometric_breakpoints(q0, q_up, std::max(0.25, q0), 2.0);
    for (double qp : pole_pos) {
      for (double f : {-4.0, -2.0, -1.0, 1.0, 2.0, 4.0}) {
        const double v = qp + f * std::max(d_min, 1e-9);
        if (v > q0 && v < q_up) brk.push_back(v);
      }
      if (qp > q0 && qp < q_up) {
        // split panels overlapping the pole's radial window
        for (double f : {-8.0, 8.0}) {
          const double v = qp + f * std::max(d_min, 1e-9);
          if (v > q0 && v < q_up) brk.push_back(v);
        }
      }
    }
    std::sort(brk.begin(), brk.end());
    brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
    total += integrate_panels(c, brk, 20);
  }

  return total;
}

}  // namespace fracprop
