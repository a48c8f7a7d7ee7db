#include "dislokit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dislokit/error.hpp"

namespace dislokit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double principal_arg(Complex z) {
  const double t = std::arg(z);
  return t == -std::numbers::pi ? std::numbers::pi : t;
}

std::string describe(const LatticePoint2& p) {
  std::ostringstream os;
  os << "(l1=" << p.l1 << ", l2=" << p.l2 << ", sheet=" << p.sheet << ")";
  return os.str();
}

template <class Planar>
std::vector<LatticePoint2> enumerate_disc(const LatticeRing& ring, int sheet, double unit, Complex shift,
                                          Complex centre, double radius, Planar planar_of) {
  require(radius > 0.0 && std::isfinite(radius), "radius must be positive and finite");
  std::vector<LatticePoint2> out;
  // Bounding box in basis coordinates around the normalised centre, padded by
  // one cell so that the exact radius filter below decides every boundary case.
  Complex q = (centre - shift) / unit;
  if (sheet != 0) q -= LatticePoint2{0, 0, sheet}.value(ring);
  const double r = radius / unit;
  const double h = ring.tau.imag();
  const auto l2_lo = static_cast<std::int64_t>(std::floor((q.imag() - r) / h)) - 1;
  const auto l2_hi = static_cast<std::int64_t>(std::ceil((q.imag() + r) / h)) + 1;
  const double r2 = radius * radius;
  for (std::int64_t l2 = l2_lo; l2 <= l2_hi; ++l2) {
    const double row_x = q.real() - static_cast<double>(l2) * ring.tau.real();
    const auto l1_lo = static_cast<std::int64_t>(std::floor(row_x - r)) - 1;
    const auto l1_hi = static_cast<std::int64_t>(std::ceil(row_x + r)) + 1;
    for (std::int64_t l1 = l1_lo; l1 <= l1_hi; ++l1) {
      const LatticePoint2 p{l1, l2, sheet};
      if (std::norm(planar_of(p) - centre) <= r2) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void DislocationConfig::validate() const {
  require(std::isfinite(a) && a > 0.0, "lattice constant a must be positive");
  require(std::isfinite(kp) && kp >= 0.0, "spring constant kp must be nonnegative");
  require(std::isfinite(kd) && kd >= 0.0, "spring constant kd must be nonnegative");
  require(std::isfinite(z0.real()) && std::isfinite(z0.imag()), "z0 must be finite");
  for (double d : delta) require(std::isfinite(d), "delta must be finite");
}

BccConstants BccConstants::from(double a) noexcept {
  const double d0 = std::numbers::sqrt3 / 2.0 * a;
  const double d1 = std::numbers::sqrt2 * a;
  return {d0, d1, d1 / std::numbers::sqrt3, std::numbers::sqrt3 / 6.0 * a};
}

double burgers_length(LatticeKind kind, double a) noexcept {
  return kind == LatticeKind::SC ? a : BccConstants::from(a).d0;
}

double planar_unit(LatticeKind kind, double a) noexcept {
  return kind == LatticeKind::SC ? a : BccConstants::from(a).d1;
}

Complex sc_planar(const DislocationConfig& cfg, const LatticePoint2& l) noexcept {
  return {static_cast<double>(l.l1) * cfg.a + cfg.delta[0], static_cast<double>(l.l2) * cfg.a + cfg.delta[1]};
}

Complex bcc_planar(const DislocationConfig& cfg, const LatticePoint2& l) noexcept {
  const double d1 = BccConstants::from(cfg.a).d1;
  return l.value(LatticeRing::eisenstein()) * d1 + cfg.delta_c();
}

Complex planar(LatticeKind kind, const DislocationConfig& cfg, const LatticePoint2& l) noexcept {
  return kind == LatticeKind::SC ? sc_planar(cfg, l) : bcc_planar(cfg, l);
}

Complex sc_offset(const DislocationConfig& cfg, const LatticePoint2& l) noexcept { return sc_planar(cfg, l) - cfg.z0; }
Complex bcc_offset(const DislocationConfig& cfg, const LatticePoint2& l) noexcept {
  return bcc_planar(cfg, l) - cfg.z0;
}
Complex offset(LatticeKind kind, const DislocationConfig& cfg, const LatticePoint2& l) noexcept {
  return planar(kind, cfg, l) - cfg.z0;
}

std::vector<LatticePoint2> sc_points_within(const DislocationConfig& cfg, Complex centre, double radius) {
  return enumerate_disc(LatticeRing::gauss(), 0, cfg.a, cfg.delta_c(), centre, radius,
                        [&](const LatticePoint2& p) { return sc_planar(cfg, p); });
}

std::vector<LatticePoint2> bcc_points_within(const DislocationConfig& cfg, int sheet, Complex centre,
                                             double radius) {
  require(sheet >= 0 && sheet <= 2, "BCC sheet must be 0, 1 or 2");
  return enumerate_disc(LatticeRing::eisenstein(), sheet, BccConstants::from(cfg.a).d1, cfg.delta_c(), centre,
                        radius, [&](const LatticePoint2& p) { return bcc_planar(cfg, p); });
}

std::vector<LatticePoint2> ring_points_within(const LatticeRing& ring, int sheet, Complex centre, double radius) {
  require(sheet == 0 || (ring.kind == RingKind::Eisenstein && sheet >= 0 && sheet <= 2), "invalid sheet for ring");
  return enumerate_disc(ring, sheet, 1.0, Complex{}, centre, radius,
                        [&](const LatticePoint2& p) { return p.value(ring); });
}

std::vector<LatticePoint2> sc_base_points(const DislocationConfig& cfg, double radius) {
  cfg.validate();
  return sc_points_within(cfg, cfg.z0, radius);
}

std::vector<LatticePoint2> bcc_base_points(const DislocationConfig& cfg, int sheet, double radius) {
  cfg.validate();
  return bcc_points_within(cfg, sheet, cfg.z0, radius);
}

void require_off_lattice(LatticeKind kind, const DislocationConfig& cfg) {
  const double unit = planar_unit(kind, cfg.a);
  const LatticeRing ring = kind == LatticeKind::SC ? LatticeRing::gauss() : LatticeRing::eisenstein();
  const Complex q = (cfg.z0 - cfg.delta_c()) / unit;
  if (auto hit = locate(ring, q, 1e-12)) fail(ErrorCode::Domain, "z0 coincides with lattice point " + describe(*hit));
}

double sc_height(const DislocationConfig& cfg, const LatticePoint2& l, std::int64_t n) {
  const Complex off = sc_offset(cfg, l);
  if (off == Complex{}) fail(ErrorCode::Domain, "base point " + describe(l) + " sits on the dislocation line");
  return static_cast<double>(n) * cfg.a + cfg.delta[2] + cfg.a / kTwoPi * principal_arg(off);
}

double bcc_height(const DislocationConfig& cfg, const LatticePoint2& l, std::int64_t n) {
  const BccConstants k = BccConstants::from(cfg.a);
  const Complex off = bcc_offset(cfg, l);
  if (off == Complex{}) fail(ErrorCode::Domain, "base point " + describe(l) + " sits on the dislocation line");
  return static_cast<double>(n) * k.d0 + cfg.delta[2] + static_cast<double>(l.sheet) * k.d3 +
         k.d0 / kTwoPi * principal_arg(off);
}

double bcc_height_from_phase(const DislocationConfig& cfg, const LatticePoint2& l) {
  const BccConstants k = BccConstants::from(cfg.a);
  const Complex off = bcc_offset(cfg, l);
  if (off == Complex{}) fail(ErrorCode::Domain, "base point " + describe(l) + " sits on the dislocation line");
  const Complex w3 = unit_power(LatticeRing::eisenstein(), 2);
  Complex phase{1.0, 0.0};
  for (int c = 0; c < l.sheet; ++c) phase *= w3;
  const double h = k.d0 / kTwoPi * principal_arg(phase * off / std::abs(off)) + cfg.delta[2];
  const double m = std::fmod(h, k.d0);
  return m < 0.0 ? m + k.d0 : m;
}

double height_increment(double d, Complex from_offset, Complex to_offset) {
  if (from_offset == Complex{} || to_offset == Complex{})
    fail(ErrorCode::Domain, "height increment through the dislocation line");
  return d / kTwoPi * principal_arg(to_offset / from_offset);
}

std::vector<Node3> sc_nodes(const DislocationConfig& cfg, double radius, std::int64_t n_begin,
                            std::int64_t n_end) {
  require(n_end >= n_begin, "winding range must satisfy n_begin <= n_end");
  require_off_lattice(LatticeKind::SC, cfg);
  std::vector<Node3> out;
  for (const auto& p : sc_base_points(cfg, radius)) {
    const Complex xy = sc_planar(cfg, p);
    for (std::int64_t n = n_begin; n < n_end; ++n) out.push_back({p, n, {xy.real(), xy.imag(), sc_height(cfg, p, n)}});
  }
  return out;
}

std::vector<Node3> bcc_nodes(const DislocationConfig& cfg, double radius, std::int64_t n_begin,
                             std::int64_t n_end) {
  require(n_end >= n_begin, "winding range must satisfy n_begin <= n_end");
  require_off_lattice(LatticeKind::BCC, cfg);
  std::vector<Node3> out;
  for (int c = 0; c < 3; ++c) {
    for (const auto& p : bcc_base_points(cfg, c, radius)) {
      const Complex xy = bcc_planar(cfg, p);
      for (std::int64_t n = n_begin; n < n_end; ++n)
        out.push_back({p, n, {xy.real(), xy.imag(), bcc_height(cfg, p, n)}});
    }
  }
  return out;
}

}  // namespace dislokit
