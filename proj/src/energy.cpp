#include "dislokit/energy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dislokit/error.hpp"
#include "dislokit/parallel.hpp"
#include "dislokit/summation.hpp"

namespace dislokit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

std::string where(const LatticePoint2& l) {
  std::ostringstream os;
  os << "(l1=" << l.l1 << ", l2=" << l.l2 << ", sheet=" << l.sheet << ")";
  return os.str();
}

constexpr std::array<std::string_view, 4> kScEpsLabels = {"e1", "e2", "e+", "e-"};
constexpr std::array<std::string_view, kScBondCount> kScBondLabels = {"axis1", "axis2", "d1+", "d1-", "d2+",
                                                                     "d2-",   "d+",    "d-",  "axis3"};
constexpr std::array<std::string_view, 6> kBccEpsLabels = {"nu0", "nu1", "nu2", "nu3", "nu4", "nu5"};

struct ScBondSpec {
  ScEps eps;
  int sign;  // 0 for in-layer bonds
};

constexpr std::array<ScBondSpec, kScBondCount> kScBondSpecs = {{
    {ScEps::E1, 0},
    {ScEps::E2, 0},
    {ScEps::E1, +1},
    {ScEps::E1, -1},
    {ScEps::E2, +1},
    {ScEps::E2, -1},
    {ScEps::EPlus, 0},
    {ScEps::EMinus, 0},
    {ScEps::E1, 0},  // vertical, unused
}};

// Values of the four epsilons at a node together with its bond deviations.
struct ScLocal {
  std::array<double, 4> eps{};
  std::array<double, kScBondCount> delta{};
};

ScLocal sc_local(double a, Complex w) {
  ScLocal out;
  for (int k = 0; k < 4; ++k) out.eps[k] = sc_eps_from_w(a, w, static_cast<ScEps>(k));
  for (std::size_t b = 0; b + 1 < kScBondCount; ++b) {
    const auto& spec = kScBondSpecs[b];
    const double e = out.eps[static_cast<int>(spec.eps)];
    const auto bond = static_cast<ScBond>(b);
    if (bond == ScBond::Axis1 || bond == ScBond::Axis2)
      out.delta[b] = delta_axis(a, e);
    else if (bond == ScBond::PlanarPlus || bond == ScBond::PlanarMinus)
      out.delta[b] = delta_planar(a, e);
    else
      out.delta[b] = delta_mixed(a, e, spec.sign);
  }
  out.delta[kScBondCount - 1] = 0.0;
  return out;
}

double sc_bond_energy(const DislocationConfig& cfg, std::size_t bond, double delta) {
  const auto b = static_cast<ScBond>(bond);
  if (b == ScBond::Vertical) return 0.0;
  const double k = (b == ScBond::Axis1 || b == ScBond::Axis2) ? cfg.kp : cfg.kd;
  return 0.5 * k * delta * delta;
}

Complex sc_w(const DislocationConfig& cfg, Complex off, const LatticePoint2& l) {
  if (off == Complex{}) fail(ErrorCode::Domain, "node " + where(l) + " sits on the dislocation line");
  return cfg.a / off;
}

// Offset of l - step for the bond classes whose backward partner is needed.
Complex sc_step_for_bond(std::size_t bond) {
  return sc_step(kScBondSpecs[bond].eps);
}

}  // namespace

Complex log_height_difference(double d, Complex x) {
  const Complex num = std::log(Complex{1.0, 0.0} + x);
  const Complex den = std::log(Complex{1.0, 0.0} + std::conj(x));
  return d / (4.0 * kPi) * (num - den) / Complex{0.0, 1.0};
}

// ---------------------------------------------------------------- SC

Complex sc_step(ScEps kind) noexcept {
  switch (kind) {
    case ScEps::E1: return {1.0, 0.0};
    case ScEps::E2: return {0.0, 1.0};
    case ScEps::EPlus: return {1.0, 1.0};
    case ScEps::EMinus: return {1.0, -1.0};
  }
  return {};
}

double sc_eps_from_w(double a, Complex w, ScEps kind) {
  const Complex x = sc_step(kind) * w;
  if (Complex{1.0, 0.0} + x == Complex{}) fail(ErrorCode::Domain, "epsilon step lands on the dislocation line");
  const double e = log_height_difference(a, x).real();
  if (!(std::fabs(e) < 0.5 * a)) fail(ErrorCode::Domain, "epsilon leaves the branch |eps| < a/2 (core node)");
  return e;
}

Complex sc_eps_complex(const DislocationConfig& cfg, const LatticePoint2& l, ScEps kind) {
  const Complex off = sc_offset(cfg, l);
  const Complex w = sc_w(cfg, off, l);
  if (off + cfg.a * sc_step(kind) == Complex{})
    fail(ErrorCode::Domain, "neighbour of " + where(l) + " sits on the dislocation line");
  return log_height_difference(cfg.a, sc_step(kind) * w);
}

double eps_sc(const DislocationConfig& cfg, const LatticePoint2& l, ScEps kind) {
  const Complex off = sc_offset(cfg, l);
  if (off + cfg.a * sc_step(kind) == Complex{})
    fail(ErrorCode::Domain, "neighbour of " + where(l) + " sits on the dislocation line");
  return sc_eps_from_w(cfg.a, sc_w(cfg, off, l), kind);
}

std::string_view label(ScBond bond) noexcept { return kScBondLabels[static_cast<std::size_t>(bond)]; }

// The three deviations are written as (A^2 - L^2) / (A + L) so that small
// epsilons do not cancel against the rest length L.
double delta_axis(double a, double eps) noexcept {
  return eps * eps / (std::sqrt(a * a + eps * eps) + a);
}

double delta_mixed(double a, double eps, int sign) noexcept {
  const double s = sign >= 0 ? eps : -eps;
  const double len = std::sqrt((a + s) * (a + s) + a * a);
  return (2.0 * a * s + s * s) / (len + kSqrt2 * a);
}

double delta_planar(double a, double eps) noexcept {
  return eps * eps / (std::sqrt(2.0 * a * a + eps * eps) + kSqrt2 * a);
}

double delta_sc(const DislocationConfig& cfg, const LatticePoint2& l, ScBond bond) {
  if (bond == ScBond::Vertical) return 0.0;
  const Complex w = sc_w(cfg, sc_offset(cfg, l), l);
  return sc_local(cfg.a, w).delta[static_cast<std::size_t>(bond)];
}

double sc_density_from_w(const DislocationConfig& cfg, Complex w) {
  const ScLocal loc = sc_local(cfg.a, w);
  double e = 0.0;
  for (std::size_t b = 0; b < kScBondCount; ++b) e += sc_bond_energy(cfg, b, loc.delta[b]);
  return e;
}

double sc_principal_coefficient() noexcept { return 1.0 / (8.0 * kPi * kPi); }

double sc_principal_density(const DislocationConfig& cfg, const LatticePoint2& l) {
  const Complex off = sc_offset(cfg, l);
  if (off == Complex{}) fail(ErrorCode::Domain, "node " + where(l) + " sits on the dislocation line");
  const double a2 = cfg.a * cfg.a;
  return cfg.kd * sc_principal_coefficient() * a2 * a2 / std::norm(off);
}

EnergyRecord density_sc(const DislocationConfig& cfg, const LatticePoint2& l, EdgeWeight weight) {
  const Complex off = sc_offset(cfg, l);
  const Complex w = sc_w(cfg, off, l);
  const ScLocal loc = sc_local(cfg.a, w);

  EnergyRecord r;
  r.lattice = LatticeKind::SC;
  r.node = l;
  r.distance = std::abs(off);
  r.w_abs = std::abs(w);
  for (int k = 0; k < 4; ++k) r.eps.push_back({kScEpsLabels[k], loc.eps[k]});
  for (std::size_t b = 0; b < kScBondCount; ++b) r.delta.push_back({kScBondLabels[b], loc.delta[b]});

  CompensatedSum e;
  if (weight == EdgeWeight::Owned) {
    for (std::size_t b = 0; b < kScBondCount; ++b) e.add(sc_bond_energy(cfg, b, loc.delta[b]));
  } else {
    // Forward bonds at half weight plus the backward bond of each class,
    // which is the forward bond of the node one step behind.
    for (std::size_t b = 0; b + 1 < kScBondCount; ++b) {
      e.add(0.5 * sc_bond_energy(cfg, b, loc.delta[b]));
      const Complex back = off - cfg.a * sc_step_for_bond(b);
      if (back == Complex{}) fail(ErrorCode::Domain, "neighbour of " + where(l) + " sits on the dislocation line");
      const ScLocal prev = sc_local(cfg.a, cfg.a / back);
      e.add(0.5 * sc_bond_energy(cfg, b, prev.delta[b]));
    }
  }
  r.exact_density = e.value();
  r.principal_density = sc_principal_density(cfg, l);
  r.ratio = r.principal_density > 0.0 ? r.exact_density / r.principal_density : 0.0;
  return r;
}

// ---------------------------------------------------------------- BCC

EpsSample bcc_eps_from_offset(const BccConstants& k, Complex off, int j) {
  const Complex step = k.d1 * nu(j);
  if (off == Complex{} || off + step == Complex{}) fail(ErrorCode::Domain, "epsilon step touches the dislocation line");
  const double e = log_height_difference(k.d0, step / off).real();
  return {e, std::fabs(e) < 0.5 * k.d3};
}

Complex bcc_eps_complex(const DislocationConfig& cfg, const LatticePoint2& l, int j) {
  const BccConstants k = BccConstants::from(cfg.a);
  const Complex off = bcc_offset(cfg, l);
  const Complex step = k.d1 * nu(j);
  if (off == Complex{} || off + step == Complex{}) fail(ErrorCode::Domain, "epsilon at " + where(l) + " touches the line");
  return log_height_difference(k.d0, step / off);
}

EpsSample eps_bcc(const DislocationConfig& cfg, const LatticePoint2& l, int j) {
  return bcc_eps_from_offset(BccConstants::from(cfg.a), bcc_offset(cfg, l), j);
}

double delta_bcc_from_eps(const BccConstants& k, double eps, int j) noexcept {
  const double s = (j % 2 == 0) ? eps : -eps;
  const double len = std::sqrt((k.d3 + s) * (k.d3 + s) + k.d2 * k.d2);
  return (2.0 * k.d3 * s + s * s) / (len + k.d0);
}

double delta_bcc(const DislocationConfig& cfg, const LatticePoint2& l, int j) {
  const BccConstants k = BccConstants::from(cfg.a);
  return delta_bcc_from_eps(k, eps_bcc(cfg, l, j).value, j);
}

double bcc_density_from_offset(const DislocationConfig& cfg, Complex off) {
  const BccConstants k = BccConstants::from(cfg.a);
  double s = 0.0;
  for (int j = 0; j < 6; ++j) {
    const double d = delta_bcc_from_eps(k, bcc_eps_from_offset(k, off, j).value, j);
    s += d * d;
  }
  return 0.5 * cfg.kd * s;
}

double bcc_principal_coefficient() noexcept { return 1.0 / (384.0 * kPi * kPi); }

double bcc_principal_density(const DislocationConfig& cfg, const LatticePoint2& l) {
  const BccConstants k = BccConstants::from(cfg.a);
  const Complex off = bcc_offset(cfg, l);
  if (off == Complex{}) fail(ErrorCode::Domain, "node " + where(l) + " sits on the dislocation line");
  const double d1sq = k.d1 * k.d1;
  return cfg.kd * bcc_principal_coefficient() * d1sq * d1sq / std::norm(off);
}

EnergyRecord density_bcc(const DislocationConfig& cfg, const LatticePoint2& l, EdgeWeight weight) {
  const BccConstants k = BccConstants::from(cfg.a);
  const Complex off = bcc_offset(cfg, l);
  if (off == Complex{}) fail(ErrorCode::Domain, "node " + where(l) + " sits on the dislocation line");

  EnergyRecord r;
  r.lattice = LatticeKind::BCC;
  r.node = l;
  r.distance = std::abs(off);
  r.w_abs = k.d1 / r.distance;
  CompensatedSum s;
  for (int j = 0; j < 6; ++j) {
    const EpsSample e = bcc_eps_from_offset(k, off, j);
    const double d = delta_bcc_from_eps(k, e.value, j);
    r.eps.push_back({kBccEpsLabels[j], e.value});
    r.delta.push_back({kBccEpsLabels[j], d});
    s.add(d * d);
  }
  r.delta.push_back({"vertical_b", 0.0});
  // Both endpoints of a diagonal bond see the same length, so sharing it
  // halves the owned density exactly.
  const double scale = weight == EdgeWeight::Owned ? 0.5 : 0.25;
  r.exact_density = scale * cfg.kd * s.value();
  r.principal_density = bcc_principal_density(cfg, l);
  r.ratio = r.principal_density > 0.0 ? r.exact_density / r.principal_density : 0.0;
  return r;
}

// ---------------------------------------------------------------- regions

EnergyRecord density(LatticeKind kind, const DislocationConfig& cfg, const LatticePoint2& l, EdgeWeight weight) {
  return kind == LatticeKind::SC ? density_sc(cfg, l, weight) : density_bcc(cfg, l, weight);
}

std::vector<EnergyRecord> energy_records(LatticeKind kind, const DislocationConfig& cfg,
                                         std::span<const LatticePoint2> points, EdgeWeight weight, int threads) {
  cfg.validate();
  std::vector<EnergyRecord> out(points.size());
  const std::size_t chunks = (points.size() + kReductionChunk - 1) / kReductionChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t hi = std::min(points.size(), (c + 1) * kReductionChunk);
    for (std::size_t i = c * kReductionChunk; i < hi; ++i) out[i] = density(kind, cfg, points[i], weight);
  });
  return out;
}

RegionalEnergy regional_energy(LatticeKind kind, const DislocationConfig& cfg, std::span<const LatticePoint2> points,
                               EdgeWeight weight, int threads) {
  cfg.validate();
  RegionalEnergy out;
  out.terms = points.size();
  if (points.empty()) return out;
  std::vector<double> exact(points.size()), principal(points.size());
  const std::size_t chunks = (points.size() + kReductionChunk - 1) / kReductionChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::size_t hi = std::min(points.size(), (c + 1) * kReductionChunk);
    for (std::size_t i = c * kReductionChunk; i < hi; ++i) {
      const EnergyRecord r = density(kind, cfg, points[i], weight);
      exact[i] = r.exact_density;
      principal[i] = r.principal_density;
    }
  });
  out.exact = deterministic_sum(points.size(), threads, [&](std::size_t i) { return exact[i]; });
  out.principal = deterministic_sum(points.size(), threads, [&](std::size_t i) { return principal[i]; });
  return out;
}

}  // namespace dislokit
