#pragma once

// Truncated Epstein-Hurwitz zeta sums
//   zeta_A(s, z) = sum_{l in A} (|l + z|^2)^(-s/2)
// over finite subsets of Z[i] and Z[w], in normalised units (unit spacing).

#include <cstddef>
#include <span>
#include <vector>

#include "dislokit/cyclotomic.hpp"
#include "dislokit/graph.hpp"

namespace dislokit {

struct ZetaResult {
  double value = 0.0;
  double s = 2.0;
  Complex z{};
  RingKind ring = RingKind::Gauss;
  bool explicit_set = false;  // true when A was supplied by the caller
  double rho = 0.0;
  double N = 0.0;
  std::size_t terms = 0;
};

// Compensated sum in the order of `points`. Throws InvalidArgument for s <= 0
// and Domain naming l when l + z = 0.
ZetaResult truncated_zeta(const LatticeRing& ring, double s, Complex z, std::span<const LatticePoint2> points,
                          int threads = 1);

// How the annulus of a zeta sum is chosen.
//   Plain:               rho < |l + z| < N over Z[tau].
//   EisensteinAdjacency: the sheet-0 BCC annulus outside the type-III core,
//                        with core threshold eps_fraction * d3/2.
enum class AnnulusRule { Plain, EisensteinAdjacency };

struct AnnulusOptions {
  AnnulusRule rule = AnnulusRule::Plain;
  double eps_fraction = 0.4;
  AdjacencyRule adjacency = AdjacencyRule::Meets;
};

// Index set of the annulus around -z.
std::vector<LatticePoint2> zeta_annulus_points(const LatticeRing& ring, Complex z, double rho, double N,
                                               const AnnulusOptions& opts = {});

// Throws InvalidArgument when rho >= N.
ZetaResult zeta_annulus(const LatticeRing& ring, double s, Complex z, double rho, double N,
                        const AnnulusOptions& opts = {}, int threads = 1);

// One annulus value per entry of Ns.
std::vector<ZetaResult> zeta_scan(const LatticeRing& ring, double s, Complex z, double rho,
                                  std::span<const double> Ns, const AnnulusOptions& opts = {}, int threads = 1);

inline constexpr double kDefaultScanNs[] = {20, 30, 50, 75, 100, 150, 200, 300, 500};

struct ZetaGrid {
  int n = 0;
  std::vector<double> values;  // row-major, values[iy * n + ix]
  std::vector<double> x;       // basis coordinate of column ix
  std::vector<double> y;       // basis coordinate of row iy
  double min = 0.0;
  double max = 0.0;

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * n + ix]; }
};

// zeta_{rho,N}(s, x + y tau) at the centres ((ix + 1/2)/n, (iy + 1/2)/n) of an
// n x n subdivision of the fundamental cell.
ZetaGrid zeta_grid(const LatticeRing& ring, double s, double rho, double N, int n = 20, const AnnulusOptions& opts = {},
                   int threads = 1);

}  // namespace dislokit
