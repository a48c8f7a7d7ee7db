#include "dislokit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dislokit/energy.hpp"
#include "dislokit/error.hpp"

namespace dislokit {
namespace {

bool contains(const std::vector<LatticePoint2>& sorted, const LatticePoint2& p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

LatticePoint2 step(const LatticePoint2& l, int j) {
  const auto p = from_thirds(l.thirds() + nu_thirds(j));
  if (!p) fail(ErrorCode::Internal, "nu step left the three sheets");
  return *p;
}

// Index j with nu_j == d, or -1.
int nu_index(Thirds d) {
  for (int j = 0; j < 6; ++j)
    if (nu_thirds(j) == d) return j;
  return -1;
}

}  // namespace

std::string_view label(ScEdge e) noexcept {
  switch (e) {
    case ScEdge::Axis1: return "axis1";
    case ScEdge::Axis2: return "axis2";
    case ScEdge::Axis3: return "axis3";
    case ScEdge::Diag23: return "diag23";
    case ScEdge::Diag13: return "diag13";
    case ScEdge::Diag12Plus: return "diag12+";
    case ScEdge::Diag12Minus: return "diag12-";
  }
  return "?";
}

std::string_view label(BccEdge e) noexcept {
  static constexpr std::array<std::string_view, 7> names = {"nu0", "nu1", "nu2", "nu3", "nu4", "nu5", "vertical_b"};
  return names[static_cast<std::size_t>(e)];
}

std::array<ScNeighbor, 18> sc_neighbors(const ScIndex& v) noexcept {
  std::array<ScNeighbor, 18> out{};
  std::size_t k = 0;
  auto add = [&](std::int64_t d1, std::int64_t d2, std::int64_t d3, ScEdge e) {
    out[k++] = {{v.l1 + d1, v.l2 + d2, v.n + d3}, e};
  };
  for (int s : {1, -1}) {
    add(s, 0, 0, ScEdge::Axis1);
    add(0, s, 0, ScEdge::Axis2);
    add(0, 0, s, ScEdge::Axis3);
  }
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      add(0, s, t, ScEdge::Diag23);
      add(s, 0, t, ScEdge::Diag13);
    }
  for (int s : {1, -1}) {
    add(s, s, 0, ScEdge::Diag12Plus);
    add(s, -s, 0, ScEdge::Diag12Minus);
  }
  return out;
}

Vec3 sc_undislocated(double a, const ScIndex& v) noexcept {
  return {static_cast<double>(v.l1) * a, static_cast<double>(v.l2) * a, static_cast<double>(v.n) * a};
}

std::array<BccNeighbor, 8> bcc_neighbors(const BccIndex& v) {
  std::array<BccNeighbor, 8> out{};
  const int c = v.base.sheet;
  for (int j = 0; j < 6; ++j) {
    const LatticePoint2 p = step(v.base, j);
    std::int64_t n = v.n;
    if (j % 2 == 0 && c == 2) n += 1;
    if (j % 2 == 1 && c == 0) n -= 1;
    out[j] = {{p, n}, static_cast<BccEdge>(j)};
  }
  out[6] = {{v.base, v.n + 1}, BccEdge::VerticalB};
  out[7] = {{v.base, v.n - 1}, BccEdge::VerticalB};
  return out;
}

Vec3 bcc_undislocated(double a, const BccIndex& v) noexcept {
  const BccConstants k = BccConstants::from(a);
  const Complex xy = v.base.value(LatticeRing::eisenstein()) * k.d1;
  return {xy.real(), xy.imag(), static_cast<double>(v.n) * k.d0 + static_cast<double>(v.base.sheet) * k.d3};
}

std::array<LatticePoint2, 6> bcc_adjacent(const LatticePoint2& l) {
  std::array<LatticePoint2, 6> out{};
  for (int j = 0; j < 6; ++j) out[j] = step(l, j);
  return out;
}

CellOrientation classify_cell(const std::array<LatticePoint2, 3>& vertices) {
  std::array<Thirds, 3> t{vertices[0].thirds(), vertices[1].thirds(), vertices[2].thirds()};
  const Thirds u = t[1] - t[0];
  const Thirds w = t[2] - t[0];
  const std::int64_t cross = u.t1 * w.t2 - u.t2 * w.t1;
  if (cross == 0) fail(ErrorCode::Domain, "degenerate cell: collinear vertices");
  if (cross < 0) std::swap(t[1], t[2]);
  int even = 0;
  for (int e = 0; e < 3; ++e) {
    const int j = nu_index(t[(e + 1) % 3] - t[e]);
    if (j < 0) fail(ErrorCode::Domain, "degenerate cell: edge is not a nearest-neighbour step");
    even += (j % 2 == 0);
  }
  if (even == 3) return CellOrientation::Ascendant;
  if (even == 0) return CellOrientation::Descendant;
  fail(ErrorCode::Domain, "degenerate cell: mixed edge parities");
}

std::vector<TriangleCell> cells_in_patch(const DislocationConfig& cfg, double radius) {
  const LatticeRing ring = LatticeRing::eisenstein();
  std::vector<TriangleCell> out;
  for (const auto& l : bcc_base_points(cfg, 0, radius)) {
    for (int j = 0; j < 6; ++j) {
      const std::array<LatticePoint2, 3> v{l, step(l, j), step(l, (j + 1) % 6)};
      const Complex centre = (v[0].value(ring) + v[1].value(ring) + v[2].value(ring)) / 3.0;
      out.push_back({v, centre, classify_cell(v)});
    }
  }
  return out;
}

double cell_circuit_height(const DislocationConfig& cfg, const TriangleCell& cell, bool dislocated) {
  const BccConstants k = BccConstants::from(cfg.a);
  double h = 0.0;
  for (int e = 0; e < 3; ++e) {
    const LatticePoint2& from = cell.vertices[e];
    const LatticePoint2& to = cell.vertices[(e + 1) % 3];
    const int j = nu_index(to.thirds() - from.thirds());
    if (j < 0) fail(ErrorCode::Domain, "cell vertices are not counterclockwise neighbours");
    h += (j % 2 == 0) ? k.d3 : -k.d3;
    if (dislocated) h += height_increment(k.d0, bcc_offset(cfg, from), bcc_offset(cfg, to));
  }
  return h;
}

void RegionSpec::validate(LatticeKind kind, double a) const {
  require(std::isfinite(rho) && rho > 0.0, "rho must be positive");
  require(std::isfinite(N) && N > rho, "N must exceed rho");
  if (kind == LatticeKind::BCC) {
    const double d3 = BccConstants::from(a).d3;
    require(std::isfinite(eps) && eps > 0.0 && eps < 0.5 * d3, "eps must lie in (0, d3/2)");
  }
}

ScRegion sc_annulus(const DislocationConfig& cfg, const RegionSpec& region) {
  cfg.validate();
  region.validate(LatticeKind::SC, cfg.a);
  const double inner = region.rho * cfg.a;
  const double outer = region.N * cfg.a;
  ScRegion out;
  for (const auto& p : sc_base_points(cfg, outer)) {
    const double r2 = std::norm(sc_offset(cfg, p));
    if (r2 <= inner * inner)
      out.core.push_back(p);
    else if (r2 < outer * outer)
      out.annulus.push_back(p);
  }
  return out;
}

BccRegion bcc_core_and_annulus(const DislocationConfig& cfg, const RegionSpec& region, AdjacencyRule rule) {
  cfg.validate();
  region.validate(LatticeKind::BCC, cfg.a);
  require_off_lattice(LatticeKind::BCC, cfg);
  const BccConstants k = BccConstants::from(cfg.a);

  // |eps| <= (d0 / 2 pi) asin(d2 / r) at distance r, so no type-I point lies
  // beyond d2 / sin(2 pi eps / d0).
  const double reach = k.d2 / std::sin(2.0 * std::numbers::pi * region.eps / k.d0) + k.d1;

  BccRegion out;
  for (int c = 0; c < 3; ++c) {
    for (const auto& p : bcc_base_points(cfg, c, reach)) {
      const Complex off = bcc_offset(cfg, p);
      for (int j = 0; j < 6; ++j) {
        if (std::fabs(bcc_eps_from_offset(k, off, j).value) > region.eps) {
          out.core_I[c].push_back(p);
          break;
        }
      }
    }
  }

  const double inner = region.rho * k.d1;
  const double search = std::max(reach + k.d2, inner) + k.d1;
  for (const auto& p : bcc_base_points(cfg, 0, search)) {
    const bool in_II = std::norm(bcc_offset(cfg, p)) < inner * inner;
    if (in_II) out.core_II.push_back(p);
    bool in_III = in_II || contains(out.core_I[0], p);
    if (!in_III) {
      int hits = 0;
      for (const auto& q : bcc_adjacent(p)) hits += contains(out.core_I[q.sheet], q);
      in_III = rule == AdjacencyRule::Meets ? hits > 0 : hits == 6;
    }
    if (in_III) out.core_III.push_back(p);
  }

  const double outer = region.N * k.d1;
  for (const auto& p : bcc_base_points(cfg, 0, outer + k.d2)) {
    if (contains(out.core_III, p)) continue;
    bool inside = true;
    for (const auto& q : bcc_adjacent(p)) inside = inside && std::norm(bcc_offset(cfg, q)) < outer * outer;
    if (inside) out.annulus.push_back(p);
  }
  return out;
}

}  // namespace dislokit
