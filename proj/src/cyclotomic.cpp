#include "dislokit/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dislokit/error.hpp"

namespace dislokit {
namespace {

constexpr double kHalfSqrt3 = std::numbers::sqrt3 / 2.0;

// w^k for k = 0..5 and i^k for k = 0..3, written out so that axis values are
// exact and every use shares the same bits.
constexpr std::array<Complex, 6> kEisensteinUnits = {
    Complex{1.0, 0.0},  Complex{0.5, kHalfSqrt3},   Complex{-0.5, kHalfSqrt3},
    Complex{-1.0, 0.0}, Complex{-0.5, -kHalfSqrt3}, Complex{0.5, -kHalfSqrt3},
};
constexpr std::array<Complex, 4> kGaussUnits = {
    Complex{1.0, 0.0}, Complex{0.0, 1.0}, Complex{-1.0, 0.0}, Complex{0.0, -1.0}};

// 3 nu_j in the basis {1, w}.
constexpr std::array<Thirds, 6> kNuThirds = {
    Thirds{1, 1}, Thirds{-1, 2}, Thirds{-2, 1}, Thirds{-1, -1}, Thirds{1, -2}, Thirds{2, -1}};

std::array<Complex, 6> make_nu() {
  std::array<Complex, 6> out{};
  for (int j = 0; j < 6; ++j) out[j] = (kEisensteinUnits[j] + kEisensteinUnits[(j + 1) % 6]) / 3.0;
  return out;
}

const std::array<Complex, 6>& nu_table() {
  static const std::array<Complex, 6> table = make_nu();
  return table;
}

long long mod(long long k, long long m) { return ((k % m) + m) % m; }

}  // namespace

LatticeRing LatticeRing::gauss() noexcept { return {RingKind::Gauss, kGaussUnits[1]}; }
LatticeRing LatticeRing::eisenstein() noexcept { return {RingKind::Eisenstein, kEisensteinUnits[1]}; }
LatticeRing LatticeRing::of(RingKind kind) noexcept { return kind == RingKind::Gauss ? gauss() : eisenstein(); }

Thirds LatticePoint2::thirds() const noexcept { return Thirds{3 * l1, 3 * l2} + mu_thirds(sheet); }

Complex LatticePoint2::value(const LatticeRing& ring) const noexcept {
  Complex base = static_cast<double>(l1) + static_cast<double>(l2) * ring.tau;
  if (ring.kind == RingKind::Eisenstein && sheet != 0) base += nu_table()[sheet - 1];
  return base;
}

std::optional<int> sheet_of(Thirds t) noexcept {
  if (mod(t.t1 - t.t2, 3) != 0) return std::nullopt;
  return static_cast<int>(mod(t.t1, 3));
}

std::optional<LatticePoint2> from_thirds(Thirds t) noexcept {
  const auto sheet = sheet_of(t);
  if (!sheet) return std::nullopt;
  const Thirds base = t - mu_thirds(*sheet);
  return LatticePoint2{base.t1 / 3, base.t2 / 3, *sheet};
}

std::optional<LatticePoint2> locate(const LatticeRing& ring, Complex z, double tolerance) {
  const double t2 = 3.0 * z.imag() / ring.tau.imag();
  const double t1 = 3.0 * z.real() - t2 * ring.tau.real();
  const Thirds t{std::llround(t1), std::llround(t2)};
  std::optional<LatticePoint2> p;
  if (ring.kind == RingKind::Gauss) {
    if (mod(t.t1, 3) != 0 || mod(t.t2, 3) != 0) return std::nullopt;
    p = LatticePoint2{t.t1 / 3, t.t2 / 3, 0};
  } else {
    p = from_thirds(t);
  }
  if (!p || std::abs(p->value(ring) - z) > tolerance) return std::nullopt;
  return p;
}

Complex unit_power(const LatticeRing& ring, long long k) noexcept {
  if (ring.kind == RingKind::Gauss) return kGaussUnits[mod(k, 4)];
  return kEisensteinUnits[mod(k, 6)];
}

Thirds rotate_unit(RingKind ring, Thirds t, long long k) noexcept {
  const long long steps = mod(k, ring == RingKind::Gauss ? 4 : 6);
  for (long long s = 0; s < steps; ++s) {
    if (ring == RingKind::Gauss)
      t = Thirds{-t.t2, t.t1};  // (x + y i) i = -y + x i
    else
      t = Thirds{-t.t2, t.t1 + t.t2};  // (x + y w) w = -y + (x + y) w, since w^2 = w - 1
  }
  return t;
}

Thirds conjugate(RingKind ring, Thirds t) noexcept {
  if (ring == RingKind::Gauss) return Thirds{t.t1, -t.t2};
  return Thirds{t.t1 + t.t2, -t.t2};  // conj(w) = 1 - w
}

Complex nu(int j) {
  require(j >= 0 && j < 6, "nu index out of range: " + std::to_string(j));
  return nu_table()[j];
}

Thirds nu_thirds(int j) {
  require(j >= 0 && j < 6, "nu index out of range: " + std::to_string(j));
  return kNuThirds[j];
}

Thirds mu_thirds(int sheet) {
  switch (sheet) {
    case 0: return Thirds{0, 0};
    case 1: return kNuThirds[0];
    case 2: return kNuThirds[1];
    default: fail(ErrorCode::InvalidArgument, "sheet index out of range: " + std::to_string(sheet));
  }
}

double check_cyclotomic_sums(const LatticeRing& ring) noexcept {
  if (ring.kind == RingKind::Gauss) {
    Complex s{};
    for (const auto& u : kGaussUnits) s += u;
    return std::abs(s);
  }
  Complex all{};
  for (const auto& u : kEisensteinUnits) all += u;
  const Complex even = kEisensteinUnits[0] + kEisensteinUnits[2] + kEisensteinUnits[4];
  return std::max(std::abs(all), std::abs(even));
}

double nu_square_sum_residual() noexcept {
  double worst = 0.0;
  for (int p = 0; p < 2; ++p) {
    Complex s{}, sc{};
    for (int i = 0; i < 3; ++i) {
      const Complex v = nu_table()[2 * i + p];
      s += v * v;
      sc += std::conj(v) * std::conj(v);
    }
    worst = std::max({worst, std::abs(s), std::abs(sc)});
  }
  return worst;
}

std::pair<Complex, Complex> nu_quadratic_identity(Complex z, Parity parity) {
  if (z == Complex{}) fail(ErrorCode::Domain, "nu quadratic identity is singular at z = 0");
  const int p = parity == Parity::Even ? 0 : 1;
  Complex lhs{};
  for (int i = 0; i < 3; ++i) {
    const Complex v = nu_table()[2 * i + p];
    const Complex term = v / z - std::conj(v) / std::conj(z);
    lhs += term * term;
  }
  return {lhs, Complex{-2.0 / std::norm(z), 0.0}};
}

}  // namespace dislokit
