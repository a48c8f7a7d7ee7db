#include "dislokit/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dislokit/error.hpp"
#include "dislokit/parallel.hpp"
#include "dislokit/summation.hpp"

namespace dislokit {
namespace {

double term(double s, double r2) { return s == 2.0 ? 1.0 / r2 : std::pow(r2, -0.5 * s); }

void check_region(double s, double rho, double N) {
  require(std::isfinite(s) && s > 0.0, "zeta exponent s must be positive");
  require(std::isfinite(rho) && rho > 0.0, "rho must be positive");
  require(std::isfinite(N) && N > rho, "N must exceed rho");
}

}  // namespace

ZetaResult truncated_zeta(const LatticeRing& ring, double s, Complex z, std::span<const LatticePoint2> points,
                          int threads) {
  require(std::isfinite(s) && s > 0.0, "zeta exponent s must be positive");
  std::vector<double> r2(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    r2[i] = std::norm(points[i].value(ring) + z);
    if (r2[i] == 0.0) {
      std::ostringstream os;
      os << "singular zeta term at l = (" << points[i].l1 << ", " << points[i].l2 << ")";
      fail(ErrorCode::Domain, os.str());
    }
  }
  ZetaResult out;
  out.value = deterministic_sum(r2.size(), threads, [&](std::size_t i) { return term(s, r2[i]); });
  out.s = s;
  out.z = z;
  out.ring = ring.kind;
  out.explicit_set = true;
  out.terms = points.size();
  return out;
}

std::vector<LatticePoint2> zeta_annulus_points(const LatticeRing& ring, Complex z, double rho, double N,
                                               const AnnulusOptions& opts) {
  check_region(2.0, rho, N);
  if (opts.rule == AnnulusRule::EisensteinAdjacency) {
    require(ring.kind == RingKind::Eisenstein, "adjacency annulus is defined on the Eisenstein ring only");
    require(opts.eps_fraction > 0.0 && opts.eps_fraction < 1.0, "eps fraction must lie in (0, 1)");
    DislocationConfig cfg;
    const BccConstants k = BccConstants::from(cfg.a);
    cfg.z0 = -z * k.d1;
    RegionSpec region{rho, N, opts.eps_fraction * 0.5 * k.d3};
    return bcc_core_and_annulus(cfg, region, opts.adjacency).annulus;
  }
  std::vector<LatticePoint2> out;
  const double inner = rho * rho;
  const double outer = N * N;
  for (const auto& p : ring_points_within(ring, 0, -z, N)) {
    const double r2 = std::norm(p.value(ring) + z);
    if (r2 > inner && r2 < outer) out.push_back(p);
  }
  return out;
}

ZetaResult zeta_annulus(const LatticeRing& ring, double s, Complex z, double rho, double N,
                        const AnnulusOptions& opts, int threads) {
  check_region(s, rho, N);
  const auto points = zeta_annulus_points(ring, z, rho, N, opts);
  ZetaResult out = truncated_zeta(ring, s, z, points, threads);
  out.explicit_set = false;
  out.rho = rho;
  out.N = N;
  return out;
}

std::vector<ZetaResult> zeta_scan(const LatticeRing& ring, double s, Complex z, double rho,
                                  std::span<const double> Ns, const AnnulusOptions& opts, int threads) {
  require(!Ns.empty(), "scan needs at least one N");
  std::vector<ZetaResult> out(Ns.size());
  parallel_for(Ns.size(), threads, [&](std::size_t i) { out[i] = zeta_annulus(ring, s, z, rho, Ns[i], opts, 1); });
  return out;
}

ZetaGrid zeta_grid(const LatticeRing& ring, double s, double rho, double N, int n, const AnnulusOptions& opts,
                   int threads) {
  check_region(s, rho, N);
  require(n > 0 && n <= 4096, "grid size must lie in [1, 4096]");
  ZetaGrid g;
  g.n = n;
  g.x.resize(n);
  g.y.resize(n);
  for (int i = 0; i < n; ++i) g.x[i] = g.y[i] = (i + 0.5) / n;
  g.values.assign(static_cast<std::size_t>(n) * n, 0.0);
  parallel_for(g.values.size(), threads, [&](std::size_t k) {
    const int ix = static_cast<int>(k % n);
    const int iy = static_cast<int>(k / n);
    const Complex z = g.x[ix] + g.y[iy] * ring.tau;
    if (locate(ring, z, 1e-12)) {
      std::ostringstream os;
      os << "grid cell (" << ix << ", " << iy << ") sits on a lattice point";
      fail(ErrorCode::Domain, os.str());
    }
    g.values[k] = zeta_annulus(ring, s, z, rho, N, opts, 1).value;
  });
  const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
  g.min = *lo;
  g.max = *hi;
  return g;
}

}  // namespace dislokit
