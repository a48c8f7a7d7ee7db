#pragma once

// SC and three-sheet BCC lattices carrying one screw dislocation along the
// third axis. A node is a base point in the plane plus a winding index n; its
// height is n d + delta_3 + (d / 2 pi) Arg(z - z0) with Arg in (-pi, pi], so
// the branch cut sits on the half line leaving z0 in the -x direction.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "dislokit/cyclotomic.hpp"

namespace dislokit {

enum class LatticeKind { SC, BCC };

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct DislocationConfig {
  Complex z0{0.0, 0.0};                 // dislocation line, length units
  std::array<double, 3> delta{0, 0, 0};  // rigid offset of the lattice
  double a = 1.0;                        // lattice constant
  double kp = 1.0;                       // horizontal springs (SC axis bonds)
  double kd = 1.0;                       // diagonal springs

  Complex delta_c() const noexcept { return {delta[0], delta[1]}; }

  // a > 0 and finite, kp, kd >= 0; throws InvalidArgument.
  void validate() const;
};

// d0 = |b| = (sqrt3/2) a is the Burgers length along (1,1,1), d1 = sqrt2 a the
// in-plane lattice spacing, d2 = d1/sqrt3 the projected bond length and
// d3 = d0/3 the spacing between consecutive sheets.
struct BccConstants {
  double d0;
  double d1;
  double d2;
  double d3;

  static BccConstants from(double a) noexcept;
};

struct Node3 {
  LatticePoint2 base;
  std::int64_t n = 0;
  Vec3 position;
};

// Burgers length: a for SC, d0 for BCC.
double burgers_length(LatticeKind kind, double a) noexcept;
// In-plane unit: a for SC, d1 for BCC.
double planar_unit(LatticeKind kind, double a) noexcept;

// Embedded base point in the plane: l a + delta_c (SC), (l + mu_c) d1 + delta_c (BCC).
Complex sc_planar(const DislocationConfig& cfg, const LatticePoint2& l) noexcept;
Complex bcc_planar(const DislocationConfig& cfg, const LatticePoint2& l) noexcept;
Complex planar(LatticeKind kind, const DislocationConfig& cfg, const LatticePoint2& l) noexcept;

// Vector from the dislocation line to the embedded base point. Components are
// formed from the integer coordinates directly so that every module sees the
// same bits for the same node.
Complex sc_offset(const DislocationConfig& cfg, const LatticePoint2& l) noexcept;
Complex bcc_offset(const DislocationConfig& cfg, const LatticePoint2& l) noexcept;
Complex offset(LatticeKind kind, const DislocationConfig& cfg, const LatticePoint2& l) noexcept;

// All l in Z[i] with |l a + delta_c - z0| <= radius, in canonical order.
std::vector<LatticePoint2> sc_base_points(const DislocationConfig& cfg, double radius);

// All points of (Z[w] + mu_c) d1 + delta_c within `radius` of z0, canonical order.
std::vector<LatticePoint2> bcc_base_points(const DislocationConfig& cfg, int sheet, double radius);

// Same filter over a caller-supplied centre instead of z0.
std::vector<LatticePoint2> sc_points_within(const DislocationConfig& cfg, Complex centre, double radius);
std::vector<LatticePoint2> bcc_points_within(const DislocationConfig& cfg, int sheet, Complex centre,
                                             double radius);

// Points of Z[tau] + mu_sheet (unit spacing, no shift) within `radius` of
// `centre`, canonical order. Used by the zeta sums in normalised units.
std::vector<LatticePoint2> ring_points_within(const LatticeRing& ring, int sheet, Complex centre, double radius);

// Throws Domain naming the colliding base point when z0 lies on an embedded
// lattice point of any sheet.
void require_off_lattice(LatticeKind kind, const DislocationConfig& cfg);

// n a + delta_3 + (a / 2 pi) Arg(l a + delta_c - z0). Throws Domain at the line.
double sc_height(const DislocationConfig& cfg, const LatticePoint2& l, std::int64_t n);

// n d0 + delta_3 + c d0/3 + (d0 / 2 pi) Arg(offset). Sheets c = 0, 1, 2 sit at
// d0/3 steps, which puts the nu_j bond with j even one sheet up.
double bcc_height(const DislocationConfig& cfg, const LatticePoint2& l, std::int64_t n);

// Height modulo d0 from the multiplicative sheet phase: (d0 / 2 pi) Arg of
// w3^c * (offset / |offset|), mapped to [0, d0). Agrees with bcc_height mod d0.
double bcc_height_from_phase(const DislocationConfig& cfg, const LatticePoint2& l);

// (d / 2 pi) Arg(to / from): the branch-free height change between two
// planar offsets, the quantity that winds by +-d around the line.
double height_increment(double d, Complex from_offset, Complex to_offset);

// Dislocated nodes with base point inside `radius` and n in [n_begin, n_end),
// ordered by (sheet, l1, l2, n).
std::vector<Node3> sc_nodes(const DislocationConfig& cfg, double radius, std::int64_t n_begin,
                            std::int64_t n_end);
std::vector<Node3> bcc_nodes(const DislocationConfig& cfg, double radius, std::int64_t n_begin,
                             std::int64_t n_end);

}  // namespace dislokit
