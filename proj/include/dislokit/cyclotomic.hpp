#pragma once

// Exact arithmetic on the Gauss integers Z[i] and the Eisenstein integers
// Z[w], w = exp(i pi/3), including the third-points nu_j = (w^j + w^(j+1))/3
// that offset the BCC sheets.

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>

namespace dislokit {

using Complex = std::complex<double>;

enum class RingKind { Gauss, Eisenstein };

struct LatticeRing {
  RingKind kind;
  Complex tau;

  static LatticeRing gauss() noexcept;
  static LatticeRing eisenstein() noexcept;
  static LatticeRing of(RingKind kind) noexcept;

  int unit_order() const noexcept { return kind == RingKind::Gauss ? 4 : 6; }
};

// A point of (1/3)Z[tau] written as (t1 + t2 tau)/3.
struct Thirds {
  std::int64_t t1 = 0;
  std::int64_t t2 = 0;

  friend constexpr Thirds operator+(Thirds a, Thirds b) noexcept { return {a.t1 + b.t1, a.t2 + b.t2}; }
  friend constexpr Thirds operator-(Thirds a, Thirds b) noexcept { return {a.t1 - b.t1, a.t2 - b.t2}; }
  friend constexpr bool operator==(Thirds, Thirds) noexcept = default;
};

// l1 + l2 tau + mu_sheet, with mu_0 = 0, mu_1 = nu_0, mu_2 = nu_1. The sheet
// is always 0 on the Gauss ring.
struct LatticePoint2 {
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
  int sheet = 0;

  Thirds thirds() const noexcept;
  Complex value(const LatticeRing& ring) const noexcept;

  // Canonical order: (sheet, l1, l2).
  friend constexpr auto operator<=>(const LatticePoint2& a, const LatticePoint2& b) noexcept {
    if (auto c = a.sheet <=> b.sheet; c != 0) return c;
    if (auto c = a.l1 <=> b.l1; c != 0) return c;
    return a.l2 <=> b.l2;
  }
  friend constexpr bool operator==(const LatticePoint2&, const LatticePoint2&) noexcept = default;
};

// Sheet index of a third-point, or nullopt when t1 and t2 lie in different
// residue classes mod 3 (such points belong to none of the three sheets).
std::optional<int> sheet_of(Thirds t) noexcept;

// Exact conversion; nullopt when the third-point lies on no sheet.
std::optional<LatticePoint2> from_thirds(Thirds t) noexcept;

// Recovers basis coordinates from a complex value. Succeeds only if the value
// lies within `tolerance` of a point of some sheet (sheet 0 for Gauss).
std::optional<LatticePoint2> locate(const LatticeRing& ring, Complex z, double tolerance = 1e-9);

// tau^k, read from a table of exact axis values; k may be any integer.
Complex unit_power(const LatticeRing& ring, long long k) noexcept;

// Multiplication by tau^k in basis coordinates, exact.
Thirds rotate_unit(RingKind ring, Thirds t, long long k) noexcept;

// Complex conjugation in basis coordinates, exact.
Thirds conjugate(RingKind ring, Thirds t) noexcept;

// nu_j = (w^j + w^(j+1))/3 for j in 0..5; throws InvalidArgument otherwise.
Complex nu(int j);
Thirds nu_thirds(int j);
Thirds mu_thirds(int sheet);

// max |residual| of the ring's cyclotomic identity: sum_k i^k = 0 for Gauss,
// 1 + w^2 + w^4 = 0 and sum_k w^k = 0 for Eisenstein.
double check_cyclotomic_sums(const LatticeRing& ring) noexcept;

// max |residual| of sum_i nu_{2i+p}^2 = 0 and of its conjugate, p in {0, 1}.
double nu_square_sum_residual() noexcept;

enum class Parity { Even, Odd };

// lhs = sum_{i=0..2} (nu_{2i+p}/z - conj(nu_{2i+p})/conj(z))^2, rhs = -2/|z|^2.
// Throws Domain for z = 0.
std::pair<Complex, Complex> nu_quadratic_identity(Complex z, Parity parity);

}  // namespace dislokit
