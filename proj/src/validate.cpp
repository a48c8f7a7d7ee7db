#include "dislokit/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <json.hpp>

#include "dislokit/energy.hpp"
#include "dislokit/graph.hpp"
#include "dislokit/lattice.hpp"
#include "dislokit/zeta.hpp"

namespace dislokit {
namespace {

constexpr double kPi = std::numbers::pi;

double rel_strict(double x, double ref) { return std::fabs(x - ref) / std::fabs(ref); }

bool multiple_of_three(Thirds t) { return t.t1 % 3 == 0 && t.t2 % 3 == 0; }

Complex random_in_annulus(std::mt19937_64& rng, double r_min, double r_max) {
  std::uniform_real_distribution<double> radius(r_min, r_max), angle(-kPi, kPi);
  return std::polar(radius(rng), angle(rng));
}

CheckGroup cyclotomic_group() {
  CheckGroup g;
  g.name = "cyclotomic";
  const LatticeRing gauss = LatticeRing::gauss(), eis = LatticeRing::eisenstein();
  g.check("tau modulus", std::max(std::fabs(std::abs(gauss.tau) - 1), std::fabs(std::abs(eis.tau) - 1)), 1e-15);
  g.check("tau minimal polynomial",
          std::max(std::abs(gauss.tau * gauss.tau + 1.0), std::abs(eis.tau * eis.tau - eis.tau + 1.0)), 1e-15);
  g.check("cyclotomic sums", std::max(check_cyclotomic_sums(gauss), check_cyclotomic_sums(eis)), 1e-15);
  g.check("nu square sums", nu_square_sum_residual(), 1e-15);

  double norm_res = 0, anti_res = 0;
  for (int j = 0; j < 6; ++j) {
    norm_res = std::max(norm_res, std::fabs(std::abs(nu(j)) - 1.0 / std::numbers::sqrt3));
    anti_res = std::max(anti_res, std::abs(nu((j + 3) % 6) + nu(j)));
  }
  g.check("nu modulus", norm_res, 1e-15);
  g.check("nu antipodes", anti_res, 1e-15);
  g.check("conjugate unit", std::abs(std::conj(eis.tau) - unit_power(eis, 5)), 1e-15);

  std::mt19937_64 rng(20240601);
  double quad = 0;
  for (int i = 0; i < 100; ++i) {
    const Complex z = random_in_annulus(rng, 0.1, 10.0);
    for (Parity p : {Parity::Even, Parity::Odd}) {
      const auto [lhs, rhs] = nu_quadratic_identity(z, p);
      quad = std::max(quad, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  g.check("nu quadratic identity", quad, 1e-12);

  int membership = 0;
  for (int j : {2, 4}) membership += !multiple_of_three(nu_thirds(j) - nu_thirds(0));
  for (int j : {3, 5}) membership += !multiple_of_three(nu_thirds(j) - nu_thirds(1));
  g.check("nu translation membership", membership, 0);

  double closure = 0;
  for (RingKind kind : {RingKind::Gauss, RingKind::Eisenstein}) {
    const LatticeRing ring = LatticeRing::of(kind);
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t b = -4; b <= 4; ++b) {
        const Thirds t{3 * a, 3 * b};
        const Thirds r = rotate_unit(kind, t, 1);
        if (!multiple_of_three(r)) closure = std::max(closure, 1.0);
        const Complex zt = (static_cast<double>(t.t1) + static_cast<double>(t.t2) * ring.tau) / 3.0;
        const Complex zr = (static_cast<double>(r.t1) + static_cast<double>(r.t2) * ring.tau) / 3.0;
        closure = std::max(closure, std::abs(zr - zt * ring.tau) / std::max(1.0, std::abs(zt)));
      }
  }
  g.check("unit rotation closure", closure, 1e-15);
  return g;
}

CheckGroup lattice_group() {
  CheckGroup g;
  g.name = "lattice";
  const BccConstants k = BccConstants::from(1.0);
  g.check("bcc constants", std::fabs(std::hypot(k.d3, k.d2) - k.d0), 1e-14);

  DislocationConfig cfg;
  cfg.z0 = {0.5, 0.5};
  double trans = 0;
  for (const auto& p : sc_base_points(cfg, 4.0))
    trans = std::max(trans, std::fabs(sc_height(cfg, p, 3) - sc_height(cfg, p, 2) - cfg.a));
  g.check("winding translation", trans, 1e-14);

  DislocationConfig bcfg;
  bcfg.z0 = {0.75 * k.d1, 0.4330127 * k.d1};
  double phase = 0;
  for (int c = 0; c < 3; ++c)
    for (const auto& p : bcc_base_points(bcfg, c, 4.0 * k.d1)) {
      double d = std::fmod(bcc_height(bcfg, p, 0) - bcc_height_from_phase(bcfg, p), k.d0);
      if (d < 0) d += k.d0;
      phase = std::max(phase, std::min(d, k.d0 - d));
    }
  g.check("sheet phase", phase, 1e-12);

  // Square loops of lattice points, one around z0 and one beside it.
  auto loop = [&](std::int64_t x0, std::int64_t y0, std::int64_t side) {
    std::vector<LatticePoint2> path;
    for (std::int64_t i = 0; i < side; ++i) path.push_back({x0 + i, y0, 0});
    for (std::int64_t i = 0; i < side; ++i) path.push_back({x0 + side, y0 + i, 0});
    for (std::int64_t i = 0; i < side; ++i) path.push_back({x0 + side - i, y0 + side, 0});
    for (std::int64_t i = 0; i < side; ++i) path.push_back({x0, y0 + side - i, 0});
    double total = 0;
    for (std::size_t i = 0; i < path.size(); ++i)
      total += height_increment(cfg.a, sc_offset(cfg, path[i]), sc_offset(cfg, path[(i + 1) % path.size()]));
    return total;
  };
  g.check("winding around the line", std::fabs(loop(-3, -3, 7) - cfg.a), 1e-12);
  g.check("winding beside the line", std::fabs(loop(5, 5, 4)), 1e-12);
  return g;
}

CheckGroup graph_group() {
  CheckGroup g;
  g.name = "graph";
  int sc_bad = 0;
  double sc_len = 0;
  for (std::int64_t x = -2; x <= 2; ++x)
    for (std::int64_t y = -2; y <= 2; ++y) {
      const ScIndex v{x, y, x - y};
      const auto nb = sc_neighbors(v);
      int unit = 0, diag = 0;
      for (const auto& e : nb) {
        const Vec3 p = sc_undislocated(1.0, e.node), q = sc_undislocated(1.0, v);
        const double len = std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y) + (p.z - q.z) * (p.z - q.z));
        if (std::fabs(len - 1.0) < 1e-12) ++unit;
        else if (std::fabs(len - std::numbers::sqrt2) < 1e-12) ++diag;
        else sc_len = std::max(sc_len, len);
        const auto back = sc_neighbors(e.node);
        sc_bad += std::none_of(back.begin(), back.end(), [&](const ScNeighbor& b) { return b.node == v; });
      }
      sc_bad += (unit != 6) + (diag != 12);
    }
  g.check("sc degree and reciprocity", sc_bad, 0);
  g.check("sc edge lengths", sc_len, 0);

  int bcc_bad = 0;
  double bcc_len = 0;
  const double d0 = BccConstants::from(1.0).d0;
  for (int c = 0; c < 3; ++c)
    for (std::int64_t x = -2; x <= 2; ++x)
      for (std::int64_t y = -2; y <= 2; ++y) {
        const BccIndex v{{x, y, c}, x + 2 * y};
        const Vec3 q = bcc_undislocated(1.0, v);
        for (const auto& e : bcc_neighbors(v)) {
          const Vec3 p = bcc_undislocated(1.0, e.node);
          const double len = std::sqrt((p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y) + (p.z - q.z) * (p.z - q.z));
          bcc_len = std::max(bcc_len, std::fabs(len - d0));
          const auto back = bcc_neighbors(e.node);
          bcc_bad += std::none_of(back.begin(), back.end(), [&](const BccNeighbor& b) { return b.node == v; });
        }
      }
  g.check("bcc reciprocity", bcc_bad, 0);
  g.check("bcc edge lengths", bcc_len, 1e-12);

  DislocationConfig cfg;
  const auto cells = cells_in_patch(cfg, 5.0 * BccConstants::from(1.0).d1);
  int balance = 0;
  double circuit = 0;
  for (const auto& cell : cells) {
    const bool up = cell.orientation == CellOrientation::Ascendant;
    balance += up ? 1 : -1;
    circuit = std::max(circuit, std::fabs(cell_circuit_height(cfg, cell, false) - (up ? d0 : -d0)));
  }
  g.check("cell balance", std::abs(balance), 0);
  g.check("cell circuit height", circuit, 1e-12);
  return g;
}

CheckGroup energy_group(const ValidationOptions& opts) {
  CheckGroup g;
  g.name = "energy";
  std::mt19937_64 rng(7);
  DislocationConfig cfg;
  cfg.z0 = {0.5, 0.5};

  double imag = 0, odd = 0;
  for (int i = 0; i < 200; ++i) {
    const Complex off = random_in_annulus(rng, 2.0, 60.0);
    for (int k = 0; k < 4; ++k) {
      const Complex x = sc_step(static_cast<ScEps>(k)) * cfg.a / off;
      const Complex e = log_height_difference(cfg.a, x);
      imag = std::max(imag, std::fabs(e.imag()) / cfg.a);
      const double ec = sc_eps_from_w(cfg.a, cfg.a / std::conj(off), static_cast<ScEps>(k));
      // Conjugating the offset conjugates the step for e1 only; the other
      // kinds map to a different step, so compare the e1 kind.
      if (k == 0) odd = std::max(odd, std::fabs(ec + e.real()));
    }
  }
  g.check("eps reality", imag, 1e-13);
  g.check("eps conjugation", odd, 1e-15);

  double zero = 0;
  for (double d : {delta_axis(1, 0), delta_mixed(1, 0, 1), delta_mixed(1, 0, -1), delta_planar(1, 0)})
    zero = std::max(zero, std::fabs(d));
  const BccConstants k = BccConstants::from(1.0);
  for (int j = 0; j < 6; ++j) zero = std::max(zero, std::fabs(delta_bcc_from_eps(k, 0.0, j)));
  g.check("zero eps gives zero delta", zero, 0);
  g.check("vertical bond", std::fabs(delta_sc(cfg, {3, 1, 0}, ScBond::Vertical)), 0);

  // Leading density from the far-field epsilons: eps1^2 + eps2^2 ~ a^4/(4 pi^2 |z|^2)
  // split over the mixed diagonals with weight 1/2 each.
  g.check("sc principal coefficient",
          rel_strict(sc_principal_coefficient() * opts.sc_coefficient_scale, 0.5 / (4.0 * kPi * kPi)), 1e-15);
  g.check("bcc principal coefficient",
          rel_strict(bcc_principal_coefficient() * opts.bcc_coefficient_scale * std::pow(k.d1, 4),
                     k.d3 * k.d3 * k.d1 * k.d1 / (16.0 * kPi * kPi)),
          1e-14);

  double far = 0;
  for (int i = 0; i < 32; ++i) {
    const Complex off = std::polar(1e4, 2.0 * kPi * i / 32.0 + 0.1);
    const double lead = sc_density_from_w(cfg, cfg.a / off) * std::norm(off);
    far = std::max(far, rel_strict(lead, sc_principal_coefficient() * opts.sc_coefficient_scale));
  }
  g.check("sc far-field density", far, 1e-3);

  double c3 = 0, c4 = 0;
  const Complex w3 = unit_power(LatticeRing::eisenstein(), 2);
  for (int i = 0; i < 100; ++i) {
    const Complex off = random_in_annulus(rng, 3.0, 40.0);
    const double base = bcc_density_from_offset(cfg, off);
    c3 = std::max(c3, rel_strict(bcc_density_from_offset(cfg, w3 * off), base));
  }
  DislocationConfig rot = cfg;
  rot.z0 = Complex{0.0, 1.0} * cfg.z0;
  for (const auto& p : sc_base_points(cfg, 12.0)) {
    if (std::abs(sc_offset(cfg, p)) < 3.0) continue;
    const double base = density_sc(cfg, p, EdgeWeight::Shared).exact_density;
    const double turned = density_sc(rot, {-p.l2, p.l1, 0}, EdgeWeight::Shared).exact_density;
    c4 = std::max(c4, rel_strict(turned, base));
  }
  g.check("bcc three-fold invariance", c3, 1e-12);
  g.check("sc shared four-fold invariance", c4, 1e-12);
  return g;
}

CheckGroup zeta_group(const ValidationOptions& opts) {
  CheckGroup g;
  g.name = "zeta";
  const LatticeRing gauss = LatticeRing::gauss(), eis = LatticeRing::eisenstein();
  const std::vector<LatticePoint2> one{{1, 0, 0}};
  g.check("single term", std::fabs(truncated_zeta(gauss, 2, {}, one).value - 1.0), 0);
  const std::vector<LatticePoint2> gu{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  g.check("gauss unit shell", std::fabs(truncated_zeta(gauss, 2, {}, gu).value - 4.0), 1e-15);
  const std::vector<LatticePoint2> eu{{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {-1, 0, 0}, {0, -1, 0}, {1, -1, 0}};
  g.check("eisenstein unit shell", std::fabs(truncated_zeta(eis, 2, {}, eu).value - 6.0), 1e-14);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double unit = 0, conj = 0, trans = 0, add = 0;
  for (const LatticeRing& ring : {gauss, eis}) {
    for (int i = 0; i < 3; ++i) {
      const Complex z = u(rng) + u(rng) * ring.tau;
      const double base = zeta_annulus(ring, 2, z, 5.1, 30).value;
      for (int p = 1; p < ring.unit_order(); ++p)
        unit = std::max(unit, rel_strict(zeta_annulus(ring, 2, unit_power(ring, p) * z, 5.1, 30).value, base));
      conj = std::max(conj, rel_strict(zeta_annulus(ring, 2, std::conj(z), 5.1, 30).value, base));
      const Complex lambda = 3.0 - 2.0 * ring.tau;
      trans = std::max(trans, rel_strict(zeta_annulus(ring, 2, z + lambda, 5.1, 30).value, base));
      const double split = zeta_annulus(ring, 2, z, 5.1, 17.3).value + zeta_annulus(ring, 2, z, 17.3, 30).value;
      add = std::max(add, rel_strict(split, base));
    }
  }
  g.check("unit invariance", unit, 1e-12);
  g.check("conjugation invariance", conj, 1e-12);
  g.check("translation invariance", trans, 1e-12);
  g.check("shell additivity", add, 1e-12);

  DislocationConfig cfg;
  cfg.z0 = {0.5, 0.5};
  const ScRegion sc = sc_annulus(cfg, {5.1, 30, 0});
  const double sc_principal = regional_energy(LatticeKind::SC, cfg, sc.annulus).principal;
  const double sc_zeta = truncated_zeta(gauss, 2, -cfg.z0 / cfg.a, sc.annulus).value;
  g.check("sc energy against zeta",
          rel_strict(sc_principal, opts.sc_coefficient_scale * cfg.kd * cfg.a * cfg.a / (8 * kPi * kPi) * sc_zeta),
          1e-12);

  const BccConstants k = BccConstants::from(1.0);
  DislocationConfig b;
  b.z0 = (0.5 + 0.5 * eis.tau) * k.d1;
  const BccRegion bcc = bcc_core_and_annulus(b, {7.2, 30, 0.4 * 0.5 * k.d3});
  const double bcc_principal = regional_energy(LatticeKind::BCC, b, bcc.annulus).principal;
  const double bcc_zeta = truncated_zeta(eis, 2, -b.z0 / k.d1, bcc.annulus).value;
  g.check("bcc energy against zeta",
          rel_strict(bcc_principal, opts.bcc_coefficient_scale * b.kd * k.d1 * k.d1 / (384 * kPi * kPi) * bcc_zeta),
          1e-12);
  return g;
}

}  // namespace

void CheckGroup::check(const std::string& what, double residual, double tolerance) {
  ++checks;
  if (std::isfinite(residual)) max_residual = std::max(max_residual, residual);
  if (!(residual <= tolerance)) {
    ++failures;
    failed.push_back(what);
  }
}

bool ValidationReport::ok() const noexcept {
  return std::all_of(groups.begin(), groups.end(), [](const CheckGroup& g) { return g.failures == 0; });
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["ok"] = ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& g : groups) {
    nlohmann::ordered_json o;
    o["name"] = g.name;
    o["checks"] = g.checks;
    o["passed"] = g.checks - g.failures;
    o["failures"] = g.failures;
    o["failed"] = g.failed;
    o["max_residual"] = g.max_residual;
    arr.push_back(std::move(o));
  }
  j["groups"] = std::move(arr);
  return j.dump(2) + "\n";
}

ValidationReport validate(const ValidationOptions& opts) {
  ValidationReport r;
  r.groups.push_back(cyclotomic_group());
  r.groups.push_back(lattice_group());
  r.groups.push_back(graph_group());
  r.groups.push_back(energy_group(opts));
  r.groups.push_back(zeta_group(opts));
  return r;
}

}  // namespace dislokit
