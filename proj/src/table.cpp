#include "dislokit/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "dislokit/error.hpp"

namespace dislokit {
namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return format_double(*d);
    return *d;
  }
  return std::get<std::string>(c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) fail(ErrorCode::Internal, "row width does not match the header of " + kind);
  rows.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  fail(ErrorCode::InvalidArgument, "table " + kind + " has no column " + name);
}

double Table::number(std::size_t row, std::size_t col) const {
  require(row < rows.size() && col < columns.size(), "table index out of range");
  const Cell& c = rows[row][col];
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  if (const auto* d = std::get_if<double>(&c)) return *d;
  fail(ErrorCode::InvalidArgument, "column " + columns[col] + " is not numeric");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["kind"] = t.kind;
  if (t.record) {
    require(t.rows.size() == 1, "record table must hold exactly one row");
    for (std::size_t i = 0; i < t.columns.size(); ++i) j[t.columns[i]] = cell_json(t.rows[0][i]);
  } else {
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto r = nlohmann::ordered_json::array();
      for (const auto& c : row) r.push_back(cell_json(c));
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  }
  return j.dump() + "\n";
}

std::string to_xyz(const Table& t) {
  const std::size_t cx = t.column("x"), cy = t.column("y"), cz = t.column("z");
  std::string out = std::to_string(t.rows.size()) + "\n";
  out += "dislokit " + t.kind + " length_unit=" + format_double(t.length_unit) + "\n";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += "Fe ";
    out += format_double(t.number(r, cx) / t.length_unit) + ' ';
    out += format_double(t.number(r, cy) / t.length_unit) + ' ';
    out += format_double(t.number(r, cz) / t.length_unit) + '\n';
  }
  return out;
}

std::string serialise(const Table& t, Format f) {
  switch (f) {
    case Format::Csv: return to_csv(t);
    case Format::Json: return to_json(t);
    case Format::Xyz: return to_xyz(t);
  }
  fail(ErrorCode::InvalidArgument, "unknown format");
}

void write_file(const Table& t, Format f, const std::string& path) {
  const std::string text = serialise(t, f);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) fail(ErrorCode::Io, "cannot open " + path + " for writing");
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!os) fail(ErrorCode::Io, "write to " + path + " failed");
}

Table nodes_table(LatticeKind, const std::vector<Node3>& nodes, double a) {
  Table t{"nodes", {"sheet", "l1", "l2", "n", "x", "y", "z"}, {}, false, a};
  t.rows.reserve(nodes.size());
  for (const auto& v : nodes)
    t.add_row({std::int64_t{v.base.sheet}, v.base.l1, v.base.l2, v.n, v.position.x, v.position.y, v.position.z});
  return t;
}

Table region_table(LatticeKind kind, const DislocationConfig& cfg, const std::vector<LatticePoint2>& points) {
  Table t{"region", {"sheet", "l1", "l2", "x", "y", "dist"}, {}, false, cfg.a};
  t.rows.reserve(points.size());
  for (const auto& p : points) {
    const Complex xy = planar(kind, cfg, p);
    t.add_row({std::int64_t{p.sheet}, p.l1, p.l2, xy.real(), xy.imag(), std::abs(offset(kind, cfg, p))});
  }
  return t;
}

Table energy_table(LatticeKind kind, const DislocationConfig& cfg, const std::vector<EnergyRecord>& records) {
  Table t{"energy",
          {"sheet", "l1", "l2", "x", "y", "dist", "exact_density", "principal_density", "ratio"},
          {},
          false,
          cfg.a};
  t.rows.reserve(records.size());
  for (const auto& r : records) {
    const Complex xy = planar(kind, cfg, r.node);
    t.add_row({std::int64_t{r.node.sheet}, r.node.l1, r.node.l2, xy.real(), xy.imag(), r.distance, r.exact_density,
               r.principal_density, r.ratio});
  }
  return t;
}

Table scan_table(const std::vector<ZetaResult>& scan) {
  Table t{"scan", {"N", "zeta"}, {}, false, 1.0};
  for (const auto& r : scan) t.add_row({r.N, r.value});
  return t;
}

Table grid_table(const ZetaGrid& g) {
  Table t{"grid", {"ix", "iy", "x", "y", "zeta"}, {}, false, 1.0};
  for (int iy = 0; iy < g.n; ++iy)
    for (int ix = 0; ix < g.n; ++ix)
      t.add_row({std::int64_t{ix}, std::int64_t{iy}, g.x[ix], g.y[iy], g.at(ix, iy)});
  return t;
}

}  // namespace dislokit
