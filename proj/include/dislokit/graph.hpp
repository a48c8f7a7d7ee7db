#pragma once

// Edge structure of the SC and BCC lattice graphs, triangle cells of the
// projected BCC graph, and the annulus / core sets over which energies and
// zeta values are summed.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dislokit/lattice.hpp"

namespace dislokit {

// ---------------------------------------------------------------- SC graph

enum class ScEdge { Axis1, Axis2, Axis3, Diag23, Diag13, Diag12Plus, Diag12Minus };
std::string_view label(ScEdge e) noexcept;

struct ScIndex {
  std::int64_t l1 = 0;
  std::int64_t l2 = 0;
  std::int64_t n = 0;

  friend constexpr auto operator<=>(const ScIndex&, const ScIndex&) noexcept = default;
};

struct ScNeighbor {
  ScIndex node;
  ScEdge kind;
};

// The 6 axis and 12 face-diagonal neighbours of a node.
std::array<ScNeighbor, 18> sc_neighbors(const ScIndex& v) noexcept;

Vec3 sc_undislocated(double a, const ScIndex& v) noexcept;

// ---------------------------------------------------------------- BCC graph

enum class BccEdge { Nu0, Nu1, Nu2, Nu3, Nu4, Nu5, VerticalB };
std::string_view label(BccEdge e) noexcept;

struct BccIndex {
  LatticePoint2 base;
  std::int64_t n = 0;

  friend constexpr auto operator<=>(const BccIndex&, const BccIndex&) noexcept = default;
};

struct BccNeighbor {
  BccIndex node;
  BccEdge kind;
};

// Six inter-sheet neighbours at planar offsets nu_j d1 (even j one sheet up,
// odd j one sheet down, wrapping into the next winding) and the two vertical
// neighbours at +-d0.
std::array<BccNeighbor, 8> bcc_neighbors(const BccIndex& v);

// (l + mu_c) d1 in the plane, n d0 + c d3 vertically.
Vec3 bcc_undislocated(double a, const BccIndex& v) noexcept;

// Ad(l): the six planar neighbours l + nu_j, j = 0..5.
std::array<LatticePoint2, 6> bcc_adjacent(const LatticePoint2& l);

// ---------------------------------------------------------------- cells

enum class CellOrientation { Ascendant, Descendant };

// A triangle of the projected BCC graph with one vertex on each sheet,
// vertices in counterclockwise order.
struct TriangleCell {
  std::array<LatticePoint2, 3> vertices;
  Complex centre;  // normalised units (d1 = 1)
  CellOrientation orientation;
};

// Orientation from the three planar edges traversed counterclockwise:
// ascendant when every edge is an even nu_j (each step climbs d3),
// descendant when every edge is odd. Throws Domain when the vertices do not
// form a unit triangle.
CellOrientation classify_cell(const std::array<LatticePoint2, 3>& vertices);

// All cells having their sheet-0 vertex within `radius` (length units) of z0.
// Every cell has exactly one sheet-0 vertex, so each is listed once.
std::vector<TriangleCell> cells_in_patch(const DislocationConfig& cfg, double radius);

// Height gained along the counterclockwise circuit of the cell. Undislocated
// circuits give +-d0; with `dislocated` the spiral increments of the three
// edges are added.
double cell_circuit_height(const DislocationConfig& cfg, const TriangleCell& cell, bool dislocated);

// ---------------------------------------------------------------- regions

// Radii in units of a (SC) or d1 (BCC); eps in length units.
struct RegionSpec {
  double rho = 7.2;
  double N = 75.0;
  double eps = 0.0;

  // rho > 0, N > rho; for BCC 0 < eps < d3/2. Throws InvalidArgument.
  void validate(LatticeKind kind, double a) const;
};

struct ScRegion {
  std::vector<LatticePoint2> annulus;  // rho a < |l a - z0| < N a
  std::vector<LatticePoint2> core;     // |l a - z0| <= rho a
};

ScRegion sc_annulus(const DislocationConfig& cfg, const RegionSpec& region);

enum class AdjacencyRule { Meets, Subset };

struct BccRegion {
  std::array<std::vector<LatticePoint2>, 3> core_I;  // per sheet, some |eps^(c,j)| > eps
  std::vector<LatticePoint2> core_II;                // sheet 0, |l d1 - z0| < rho d1
  std::vector<LatticePoint2> core_III;
  std::vector<LatticePoint2> annulus;                // sheet 0
};

// Core sets and the sheet-0 annulus outside core_III whose adjacent nodes
// all lie within N d1 of z0.
BccRegion bcc_core_and_annulus(const DislocationConfig& cfg, const RegionSpec& region,
                               AdjacencyRule rule = AdjacencyRule::Meets);

}  // namespace dislokit
