#pragma once

// Relative height differences (epsilon), bond-length deviations (Delta) and
// per-node stress-energy densities of the dislocated SC and BCC lattice
// graphs, together with their leading-order (principal) parts.
//
// Every epsilon is evaluated from the exact logarithmic form
//   eps = (d / 4 pi i) (log(1 + x) - log(1 + conj x)),  x = step / offset,
// never from its linearisation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dislokit/lattice.hpp"

namespace dislokit {

// ---------------------------------------------------------------- shared

// Complex value of (d / 4 pi i)(log(1 + x) - log(1 + conj x)). Its imaginary
// part is rounding residue; exposed for the reality checks.
Complex log_height_difference(double d, Complex x);

// How the bonds around a node are weighted in its density.
//   Owned:  each node carries the full energy of the bonds listed for it
//           (SC: its eight forward bonds; BCC: all six diagonal bonds).
//   Shared: every incident bond contributes half its energy to each endpoint.
enum class EdgeWeight { Owned, Shared };

struct LabeledValue {
  std::string_view label;
  double value;
};

struct EnergyRecord {
  LatticeKind lattice = LatticeKind::SC;
  LatticePoint2 node;
  double distance = 0.0;  // |offset|
  double w_abs = 0.0;     // planar unit / |offset|
  std::vector<LabeledValue> eps;
  std::vector<LabeledValue> delta;
  double exact_density = 0.0;
  double principal_density = 0.0;
  double ratio = 0.0;  // exact / principal
};

// ---------------------------------------------------------------- SC

enum class ScEps { E1, E2, EPlus, EMinus };

// Step u in units of a for each epsilon kind: 1, i, 1+i, 1-i.
Complex sc_step(ScEps kind) noexcept;

// Real epsilon for w = a / offset. Throws Domain when the step lands on the
// line (1 + u w = 0) or the value leaves the branch (|eps| >= a/2).
double sc_eps_from_w(double a, Complex w, ScEps kind);
Complex sc_eps_complex(const DislocationConfig& cfg, const LatticePoint2& l, ScEps kind);
double eps_sc(const DislocationConfig& cfg, const LatticePoint2& l, ScEps kind);

enum class ScBond {
  Axis1,       // (l, l+1) in the same layer
  Axis2,       // (l, l+i)
  Diag1Plus,   // (l, l3) -> (l+1, l3+1)
  Diag1Minus,  // (l, l3) -> (l+1, l3-1)
  Diag2Plus,   // (l, l3) -> (l+i, l3+1)
  Diag2Minus,  // (l, l3) -> (l+i, l3-1)
  PlanarPlus,  // (l, l+1+i)
  PlanarMinus, // (l, l+1-i)
  Vertical,    // (l, l3) -> (l, l3+1)
};
inline constexpr std::size_t kScBondCount = 9;
std::string_view label(ScBond bond) noexcept;

// Delta per edge class as a function of the relevant epsilon.
double delta_axis(double a, double eps) noexcept;              // sqrt(a^2 + eps^2) - a
double delta_mixed(double a, double eps, int sign) noexcept;   // sqrt((a +- eps)^2 + a^2) - sqrt2 a
double delta_planar(double a, double eps) noexcept;            // sqrt(2 a^2 + eps^2) - sqrt2 a

double delta_sc(const DislocationConfig& cfg, const LatticePoint2& l, ScBond bond);

// Owned density of the node at normalised position w = a / offset.
double sc_density_from_w(const DislocationConfig& cfg, Complex w);

// Principal density (kd / 8 pi^2) a^4 / |offset|^2.
double sc_principal_coefficient() noexcept;  // 1 / 8 pi^2
double sc_principal_density(const DislocationConfig& cfg, const LatticePoint2& l);

EnergyRecord density_sc(const DislocationConfig& cfg, const LatticePoint2& l, EdgeWeight weight = EdgeWeight::Owned);

// ---------------------------------------------------------------- BCC

struct EpsSample {
  double value = 0.0;
  // false once |eps| >= d3/2: the node belongs to the type-I core. Reported,
  // not thrown, since core detection needs the value.
  bool branch_valid = true;
};

// epsilon^(c, j) at a given offset from the line; step nu_j d1. Throws Domain
// when either endpoint is the line.
EpsSample bcc_eps_from_offset(const BccConstants& k, Complex offset, int j);
Complex bcc_eps_complex(const DislocationConfig& cfg, const LatticePoint2& l, int j);
EpsSample eps_bcc(const DislocationConfig& cfg, const LatticePoint2& l, int j);

// sqrt((d3 + (-1)^j eps)^2 + d2^2) - d0.
double delta_bcc_from_eps(const BccConstants& k, double eps, int j) noexcept;
double delta_bcc(const DislocationConfig& cfg, const LatticePoint2& l, int j);

// Owned density (kd/2) sum_j Delta_j^2 at a given offset.
double bcc_density_from_offset(const DislocationConfig& cfg, Complex offset);

// Principal density (kd / 384 pi^2) d1^4 / |offset|^2.
double bcc_principal_coefficient() noexcept;  // 1 / 384 pi^2
double bcc_principal_density(const DislocationConfig& cfg, const LatticePoint2& l);

EnergyRecord density_bcc(const DislocationConfig& cfg, const LatticePoint2& l, EdgeWeight weight = EdgeWeight::Owned);

// ---------------------------------------------------------------- regions

EnergyRecord density(LatticeKind kind, const DislocationConfig& cfg, const LatticePoint2& l,
                     EdgeWeight weight = EdgeWeight::Owned);

struct RegionalEnergy {
  double exact = 0.0;
  double principal = 0.0;
  std::size_t terms = 0;
};

// Per-node records in the order of `points`.
std::vector<EnergyRecord> energy_records(LatticeKind kind, const DislocationConfig& cfg,
                                         std::span<const LatticePoint2> points,
                                         EdgeWeight weight = EdgeWeight::Owned, int threads = 1);

// Compensated sums of exact and principal densities over `points`. The
// result is independent of `threads`.
RegionalEnergy regional_energy(LatticeKind kind, const DislocationConfig& cfg, std::span<const LatticePoint2> points,
                               EdgeWeight weight = EdgeWeight::Owned, int threads = 1);

}  // namespace dislokit
