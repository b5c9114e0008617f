#include "phi4/elliptic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "phi4/errors.hpp"

namespace phi4::elliptic {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxAgmLevels = 32;
}  // namespace

double complete_k(double m) {
  if (!(m >= 0.0) || !(m <= 1.0))
    throw DomainError("complete_k: m must lie in [0,1), got " + std::to_string(m));
  if (m == 1.0)
    throw DivergentPeriod("complete_k: K(m) diverges logarithmically at m = 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < kMaxAgmLevels && std::abs(a - b) > kEps * (a + b); ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return M_PI / (2.0 * a);
}

JacobiTriple jacobi(double u, double m) {
  if (!std::isfinite(u)) throw DomainError("jacobi: argument must be finite");
  if (!(m >= 0.0) || !(m <= 1.0))
    throw DomainError("jacobi: m must lie in [0,1], got " + std::to_string(m));

  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    double c = 1.0 / std::cosh(u);
    return {std::tanh(u), c, c};
  }
  if (m < 1e-12) {
    // Small-parameter series about the circular limit.
    double su = std::sin(u), cu = std::cos(u);
    double w = 0.25 * m * (u - su * cu);
    return {su - w * cu, cu + w * su, 1.0 - 0.5 * m * su * su};
  }
  if (1.0 - m < 1e-12) {
    // Series about the hyperbolic limit, in overflow-safe form:
    // (sinh*cosh - u)*sech^2 = tanh - u*sech^2, (sinh*cosh +- u)*tanh*sech
    // = cosh - sech +- u*tanh*sech truncated against sech growth.
    double m1 = 1.0 - m;
    double t = std::tanh(u), s = 1.0 / std::cosh(u);
    double sc = std::sinh(u) * std::cosh(u);
    double w = 0.25 * m1 * (sc - u);
    return {t + w * s * s, s - w * t * s, s + 0.25 * m1 * (sc + u) * t * s};
  }

  // Descending Landen (AGM) ladder.
  double mu[kMaxAgmLevels], nu[kMaxAgmLevels];
  int n = 0;
  mu[0] = 1.0;
  nu[0] = std::sqrt(1.0 - m);
  while (std::abs(mu[n] - nu[n]) > 4.0 * kEps * std::abs(mu[n] + nu[n])) {
    mu[n + 1] = 0.5 * (mu[n] + nu[n]);
    nu[n + 1] = std::sqrt(mu[n] * nu[n]);
    ++n;
    if (n >= kMaxAgmLevels - 1)
      throw DomainError("jacobi: AGM ladder failed to converge");
  }

  double sin_umu = std::sin(u * mu[n]);
  double cos_umu = std::cos(u * mu[n]);
  double c[kMaxAgmLevels], d[kMaxAgmLevels];
  JacobiTriple out{};
  if (std::abs(sin_umu) < std::abs(cos_umu)) {
    double t = sin_umu / cos_umu;
    c[n] = mu[n] * t;
    d[n] = 1.0;
    for (int i = n; i > 0; --i) {
      c[i - 1] = d[i] * c[i];
      double r = c[i] * c[i] / mu[i];
      d[i - 1] = (r + nu[i - 1]) / (r + mu[i - 1]);
    }
    out.dn = std::sqrt(1.0 - m) / d[0];
    out.cn = out.dn * (cos_umu >= 0.0 ? 1.0 : -1.0) / std::hypot(1.0, c[0]);
    out.sn = out.cn * c[0] / std::sqrt(1.0 - m);
  } else {
    double t = cos_umu / sin_umu;
    c[n] = mu[n] * t;
    d[n] = 1.0;
    for (int i = n; i > 0; --i) {
      c[i - 1] = d[i] * c[i];
      double r = c[i] * c[i] / mu[i];
      d[i - 1] = (r + nu[i - 1]) / (r + mu[i - 1]);
    }
    out.dn = d[0];
    out.sn = (sin_umu >= 0.0 ? 1.0 : -1.0) / std::hypot(1.0, c[0]);
    out.cn = c[0] * out.sn;
  }
  return out;
}

}  // namespace phi4::elliptic
