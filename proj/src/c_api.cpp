#include "dislokit/dislokit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dislokit/energy.hpp"
#include "dislokit/error.hpp"
#include "dislokit/graph.hpp"
#include "dislokit/lattice.hpp"
#include "dislokit/table.hpp"
#include "dislokit/validate.hpp"
#include "dislokit/zeta.hpp"

struct dk_config {
  dislokit::LatticeKind kind;
  dislokit::DislocationConfig cfg;
};

struct dk_table {
  dislokit::Table table;
};

namespace {

using namespace dislokit;

thread_local std::string g_last_error;

dk_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return DK_ERR_INVALID_ARGUMENT;
    case ErrorCode::Domain: return DK_ERR_DOMAIN;
    case ErrorCode::Io: return DK_ERR_IO;
    case ErrorCode::Internal: return DK_ERR_INTERNAL;
  }
  return DK_ERR_INTERNAL;
}

template <class F>
dk_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return DK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DK_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

LatticeRing ring_of(dk_ring r) {
  if (r != DK_RING_GAUSS && r != DK_RING_EISENSTEIN) fail(ErrorCode::InvalidArgument, "unknown ring");
  return LatticeRing::of(r == DK_RING_GAUSS ? RingKind::Gauss : RingKind::Eisenstein);
}

Format format_of(dk_format f) {
  switch (f) {
    case DK_FORMAT_CSV: return Format::Csv;
    case DK_FORMAT_JSON: return Format::Json;
    case DK_FORMAT_XYZ: return Format::Xyz;
  }
  fail(ErrorCode::InvalidArgument, "unknown output format");
}

AdjacencyRule adjacency_of(dk_adjacency a) {
  return a == DK_ADJACENCY_SUBSET ? AdjacencyRule::Subset : AdjacencyRule::Meets;
}

AnnulusOptions options_of(const dk_zeta_options* o) {
  AnnulusOptions out;
  if (!o) return out;
  out.rule = o->rule == DK_ANNULUS_ADJACENCY ? AnnulusRule::EisensteinAdjacency : AnnulusRule::Plain;
  out.eps_fraction = o->eps_fraction;
  out.adjacency = adjacency_of(o->adjacency);
  return out;
}

RegionSpec region_of(const dk_region* r) { return {r->rho, r->N, r->eps}; }

std::vector<LatticePoint2> annulus_points(const dk_config& c, const dk_region& r) {
  if (c.kind == LatticeKind::SC) return sc_annulus(c.cfg, region_of(&r)).annulus;
  return bcc_core_and_annulus(c.cfg, region_of(&r), adjacency_of(r.adjacency)).annulus;
}

dk_table* wrap(Table t) { return new dk_table{std::move(t)}; }

}  // namespace

extern "C" {

const char* dk_version(void) { return "0.1.0"; }
const char* dk_last_error(void) { return g_last_error.c_str(); }

dk_status dk_config_create(dk_lattice lattice, double a, double z0_re, double z0_im, double kp, double kd,
                           dk_config** out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    if (lattice != DK_LATTICE_SC && lattice != DK_LATTICE_BCC) fail(ErrorCode::InvalidArgument, "unknown lattice");
    DislocationConfig cfg;
    cfg.a = a;
    cfg.z0 = {z0_re, z0_im};
    cfg.kp = kp;
    cfg.kd = kd;
    cfg.validate();
    *out = new dk_config{lattice == DK_LATTICE_SC ? LatticeKind::SC : LatticeKind::BCC, cfg};
  });
}

dk_status dk_config_set_delta(dk_config* cfg, double d1, double d2, double d3) {
  return guarded([&] {
    need(cfg, "cfg");
    DislocationConfig next = cfg->cfg;
    next.delta = {d1, d2, d3};
    next.validate();
    cfg->cfg = next;
  });
}

void dk_config_destroy(dk_config* cfg) { delete cfg; }

dk_status dk_lattice_export(const dk_config* cfg, double radius, int64_t n_begin, int64_t n_end, dk_table** out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(out, "out");
    *out = nullptr;
    const auto nodes = cfg->kind == LatticeKind::SC ? sc_nodes(cfg->cfg, radius, n_begin, n_end)
                                                    : bcc_nodes(cfg->cfg, radius, n_begin, n_end);
    *out = wrap(nodes_table(cfg->kind, nodes, cfg->cfg.a));
  });
}

dk_status dk_region_export(const dk_config* cfg, const dk_region* region, dk_table** out) {
  return guarded([&] {
    need(cfg, "cfg");
    need(region, "region");
    need(out, "out");
    *out = nullptr;
    *out = wrap(region_table(cfg->kind, cfg->cfg, annulus_points(*cfg, *region)));
  });
}

dk_status dk_energy_run(const dk_config* cfg, const dk_region* region, dk_edge_weight weight, int threads,
                        dk_table** records, dk_energy_summary* summary) {
  return guarded([&] {
    need(cfg, "cfg");
    need(region, "region");
    if (records) *records = nullptr;
    require_off_lattice(cfg->kind, cfg->cfg);
    const EdgeWeight w = weight == DK_WEIGHT_SHARED ? EdgeWeight::Shared : EdgeWeight::Owned;
    const auto points = annulus_points(*cfg, *region);
    const RegionalEnergy e = regional_energy(cfg->kind, cfg->cfg, points, w, threads);

    const bool sc = cfg->kind == LatticeKind::SC;
    const double d = planar_unit(cfg->kind, cfg->cfg.a);
    const LatticeRing ring = sc ? LatticeRing::gauss() : LatticeRing::eisenstein();
    const Complex z = (cfg->cfg.delta_c() - cfg->cfg.z0) / d;
    const double zeta = points.empty() ? 0.0 : truncated_zeta(ring, 2.0, z, points, threads).value;
    const double coeff = sc ? sc_principal_coefficient() : bcc_principal_coefficient();

    if (summary) {
      summary->exact = e.exact;
      summary->principal = e.principal;
      summary->ratio = e.principal > 0.0 ? e.exact / e.principal : 0.0;
      summary->zeta = zeta;
      summary->principal_from_zeta = cfg->cfg.kd * coeff * d * d * zeta;
      summary->terms = e.terms;
    }
    if (records) *records = wrap(energy_table(cfg->kind, cfg->cfg, energy_records(cfg->kind, cfg->cfg, points, w, threads)));
  });
}

dk_status dk_energy_summary_json(const dk_energy_summary* s, char** json) {
  return guarded([&] {
    need(s, "summary");
    need(json, "json");
    Table t{"summary", {"exact", "principal", "ratio", "zeta", "principal_from_zeta", "terms"}, {}, true, 1.0};
    t.add_row({s->exact, s->principal, s->ratio, s->zeta, s->principal_from_zeta, static_cast<std::int64_t>(s->terms)});
    *json = copy_string(to_json(t));
  });
}

dk_status dk_zeta_single(dk_ring ring, double s, double z_re, double z_im, double rho, double N,
                         const dk_zeta_options* opts, int threads, double* value, uint64_t* terms) {
  return guarded([&] {
    need(value, "value");
    const ZetaResult r = zeta_annulus(ring_of(ring), s, {z_re, z_im}, rho, N, options_of(opts), threads);
    *value = r.value;
    if (terms) *terms = r.terms;
  });
}

dk_status dk_zeta_explicit(dk_ring ring, double s, double z_re, double z_im, const int64_t* l1, const int64_t* l2,
                           size_t count, double* value) {
  return guarded([&] {
    need(value, "value");
    if (count > 0) {
      need(l1, "l1");
      need(l2, "l2");
    }
    std::vector<LatticePoint2> pts(count);
    for (size_t i = 0; i < count; ++i) pts[i] = {l1[i], l2[i], 0};
    *value = truncated_zeta(ring_of(ring), s, {z_re, z_im}, pts).value;
  });
}

dk_status dk_zeta_scan(dk_ring ring, double s, double z_re, double z_im, double rho, const double* Ns, size_t count,
                       const dk_zeta_options* opts, int threads, dk_table** out) {
  return guarded([&] {
    need(out, "out");
    need(Ns, "Ns");
    *out = nullptr;
    const auto scan = zeta_scan(ring_of(ring), s, {z_re, z_im}, rho, std::span<const double>(Ns, count),
                                options_of(opts), threads);
    *out = wrap(scan_table(scan));
  });
}

dk_status dk_zeta_grid(dk_ring ring, double s, double rho, double N, int cells, const dk_zeta_options* opts,
                       int threads, dk_table** out, double* min, double* max) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    const ZetaGrid g = zeta_grid(ring_of(ring), s, rho, N, cells, options_of(opts), threads);
    if (min) *min = g.min;
    if (max) *max = g.max;
    *out = wrap(grid_table(g));
  });
}

dk_status dk_validate(char** json, int* all_passed) {
  return guarded([&] {
    need(json, "json");
    const ValidationReport r = validate();
    *json = copy_string(r.to_json());
    if (all_passed) *all_passed = r.ok() ? 1 : 0;
  });
}

size_t dk_table_rows(const dk_table* t) { return t ? t->table.rows.size() : 0; }
size_t dk_table_columns(const dk_table* t) { return t ? t->table.columns.size() : 0; }

const char* dk_table_column_name(const dk_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) return nullptr;
  return t->table.columns[col].c_str();
}

dk_status dk_table_get_double(const dk_table* t, size_t row, size_t col, double* out) {
  return guarded([&] {
    need(t, "table");
    need(out, "out");
    *out = t->table.number(row, col);
  });
}

dk_status dk_table_write(const dk_table* t, dk_format format, const char* path) {
  return guarded([&] {
    need(t, "table");
    need(path, "path");
    write_file(t->table, format_of(format), path);
  });
}

dk_status dk_table_to_string(const dk_table* t, dk_format format, char** out) {
  return guarded([&] {
    need(t, "table");
    need(out, "out");
    *out = copy_string(serialise(t->table, format_of(format)));
  });
}

void dk_table_destroy(dk_table* t) { delete t; }

void dk_string_free(char* s) { std::free(s); }

}  // extern "C"
