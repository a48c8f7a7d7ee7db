#pragma once

// Independent reference computations for the tests. Everything here is
// written from the defining formulas with plain loops so that it shares no
// code path with the library beyond std::complex.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <set>
#include <tuple>
#include <vector>

namespace oracle {

using C = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

inline C omega() { return {0.5, std::sqrt(3.0) / 2.0}; }

// (w^j + w^(j+1)) / 3 straight from exp.
inline C nu(int j) {
  return (std::exp(C(0, pi / 3 * j)) + std::exp(C(0, pi / 3 * (j + 1)))) / 3.0;
}

struct Bcc {
  double d0, d1, d2, d3;
};
inline Bcc bcc(double a) {
  return {std::sqrt(3.0) / 2 * a, std::sqrt(2.0) * a, std::sqrt(2.0) / std::sqrt(3.0) * a, std::sqrt(3.0) / 6 * a};
}

// Brute-force point count of Z[tau] + shift within radius of centre, scanning
// a generous square of basis coordinates.
inline std::vector<std::pair<std::int64_t, std::int64_t>> disc(C tau, C shift, double unit, C centre, double r,
                                                               bool strict = false) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t M = static_cast<std::int64_t>(2 * (std::abs(centre) + r) / unit / tau.imag()) + 3;
  for (std::int64_t l1 = -M; l1 <= M; ++l1)
    for (std::int64_t l2 = -M; l2 <= M; ++l2) {
      const C p = (C(double(l1)) + double(l2) * tau + shift) * unit;
      const double d = std::abs(p - centre);
      if (strict ? d < r : d <= r) out.emplace_back(l1, l2);
    }
  return out;
}

// Plain annulus rho < |l + z| < N over Z[tau].
inline double zeta_annulus(C tau, double s, C z, double rho, double N, std::size_t* count = nullptr) {
  const std::int64_t M = static_cast<std::int64_t>(2 * (N + std::abs(z)) / tau.imag()) + 3;
  long double sum = 0;
  std::size_t n = 0;
  for (std::int64_t l1 = -M; l1 <= M; ++l1)
    for (std::int64_t l2 = -M; l2 <= M; ++l2) {
      const double r = std::abs(C(double(l1)) + double(l2) * tau + z);
      if (r > rho && r < N) {
        sum += std::pow(static_cast<long double>(r), -static_cast<long double>(s));
        ++n;
      }
    }
  if (count) *count = n;
  return static_cast<double>(sum);
}

// eps = (d / 2 pi) Arg(1 + x): the principal argument form of the log
// difference.
inline double eps(double d, C x) { return d / (2 * pi) * std::arg(C(1.0) + x); }
// Linearisation (d / 2 pi) Im x.
inline double eps_linear(double d, C x) { return d / (2 * pi) * x.imag(); }

inline double delta_axis(double a, double e) { return std::sqrt(a * a + e * e) - a; }
inline double delta_mixed(double a, double e, int sign) {
  return std::sqrt((a + sign * e) * (a + sign * e) + a * a) - std::sqrt(2.0) * a;
}
inline double delta_planar(double a, double e) { return std::sqrt(2 * a * a + e * e) - std::sqrt(2.0) * a; }
inline double delta_bcc(const Bcc& k, double e, int j) {
  const double s = (j % 2 == 0) ? 1.0 : -1.0;
  return std::sqrt((k.d3 + s * e) * (k.d3 + s * e) + k.d2 * k.d2) - std::sqrt(k.d3 * k.d3 + k.d2 * k.d2);
}

// Owned SC density at offset z from the line.
inline double sc_density(double a, double kp, double kd, C z) {
  const double e1 = eps(a, a / z), e2 = eps(a, C(0, a) / z), ep = eps(a, C(a, a) / z), em = eps(a, C(a, -a) / z);
  const double axis = delta_axis(a, e1) * delta_axis(a, e1) + delta_axis(a, e2) * delta_axis(a, e2);
  double diag = 0;
  for (int s : {1, -1}) {
    diag += std::pow(delta_mixed(a, e1, s), 2) + std::pow(delta_mixed(a, e2, s), 2);
  }
  diag += std::pow(delta_planar(a, ep), 2) + std::pow(delta_planar(a, em), 2);
  return 0.5 * kp * axis + 0.5 * kd * diag;
}

// Owned BCC density at offset z.
inline double bcc_density(double a, double kd, C z) {
  const Bcc k = bcc(a);
  double s = 0;
  for (int j = 0; j < 6; ++j) s += std::pow(delta_bcc(k, eps(k.d0, k.d1 * nu(j) / z), j), 2);
  return 0.5 * kd * s;
}

struct Fit {
  double slope, intercept, r2;
};

inline Fit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ss_res += std::pow(y[i] - (slope * x[i] + intercept), 2);
    ss_tot += std::pow(y[i] - mean, 2);
  }
  return {slope, intercept, 1.0 - ss_res / ss_tot};
}

// Least-squares polynomial coefficients c_0..c_deg by normal equations with
// partial pivoting. x should be scaled to O(1) by the caller.
inline std::vector<double> poly_fit(const std::vector<double>& x, const std::vector<double>& y, int deg) {
  const int n = deg + 1;
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<double> p(2 * n, 1.0);
    for (int i = 1; i < 2 * n; ++i) p[i] = p[i - 1] * x[k];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] += p[i + j];
      m[i][n] += p[i] * y[k];
    }
  }
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

}  // namespace oracle
