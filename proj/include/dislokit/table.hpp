#pragma once

// Column-oriented result tables and their CSV / JSON / XYZ serialisations.
// Doubles are always written with 17 significant digits so files round-trip.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "dislokit/energy.hpp"
#include "dislokit/graph.hpp"
#include "dislokit/lattice.hpp"
#include "dislokit/zeta.hpp"

namespace dislokit {

using Cell = std::variant<std::int64_t, double, std::string>;

enum class Format { Csv, Json, Xyz };

struct Table {
  std::string kind;  // nodes, region, energy, scan, grid, summary
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // A record table holds one row and serialises to a JSON object.
  bool record = false;
  // Positions are divided by this in XYZ output.
  double length_unit = 1.0;

  void add_row(std::vector<Cell> row);
  std::size_t column(const std::string& name) const;  // throws InvalidArgument
  double number(std::size_t row, std::size_t col) const;
};

// %.17g, with "inf"/"nan" spelled out.
std::string format_double(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);
// Needs x, y, z columns; writes "Fe x y z" in units of length_unit.
std::string to_xyz(const Table& t);
std::string serialise(const Table& t, Format f);
void write_file(const Table& t, Format f, const std::string& path);  // throws Io

Table nodes_table(LatticeKind kind, const std::vector<Node3>& nodes, double a);
Table region_table(LatticeKind kind, const DislocationConfig& cfg, const std::vector<LatticePoint2>& points);
Table energy_table(LatticeKind kind, const DislocationConfig& cfg, const std::vector<EnergyRecord>& records);
Table scan_table(const std::vector<ZetaResult>& scan);
Table grid_table(const ZetaGrid& grid);

}  // namespace dislokit
