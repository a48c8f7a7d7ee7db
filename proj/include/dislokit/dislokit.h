#ifndef DISLOKIT_DISLOKIT_H
#define DISLOKIT_DISLOKIT_H

/*
 * C interface of libdislokit. Every function returns a dk_status; on failure
 * dk_last_error() holds a message for the calling thread. Handles are opaque
 * and owned by the caller once returned. Strings handed out by the library
 * are released with dk_string_free.
 *
 * Lengths are in the same unit as the lattice constant a. Annulus radii rho
 * and N are in units of a (SC) or d1 = sqrt2 a (BCC).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(DISLOKIT_BUILDING_LIBRARY)
#define DK_API __attribute__((visibility("default")))
#else
#define DK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dk_status {
  DK_OK = 0,
  DK_ERR_INVALID_ARGUMENT = 1,
  DK_ERR_DOMAIN = 2,
  DK_ERR_IO = 3,
  DK_ERR_INTERNAL = 4,
  DK_ERR_INVARIANT = 5
} dk_status;

typedef enum dk_lattice { DK_LATTICE_SC = 0, DK_LATTICE_BCC = 1 } dk_lattice;
typedef enum dk_ring { DK_RING_GAUSS = 0, DK_RING_EISENSTEIN = 1 } dk_ring;
typedef enum dk_format { DK_FORMAT_CSV = 0, DK_FORMAT_JSON = 1, DK_FORMAT_XYZ = 2 } dk_format;
typedef enum dk_edge_weight { DK_WEIGHT_OWNED = 0, DK_WEIGHT_SHARED = 1 } dk_edge_weight;
typedef enum dk_annulus_rule { DK_ANNULUS_PLAIN = 0, DK_ANNULUS_ADJACENCY = 1 } dk_annulus_rule;
typedef enum dk_adjacency { DK_ADJACENCY_MEETS = 0, DK_ADJACENCY_SUBSET = 1 } dk_adjacency;

typedef struct dk_config dk_config;
typedef struct dk_table dk_table;

/* Annulus and core threshold. eps is a length; it is ignored for SC. */
typedef struct dk_region {
  double rho;
  double N;
  double eps;
  dk_adjacency adjacency;
} dk_region;

/* Annulus choice for zeta sums. NULL means plain with eps_fraction 0.4. */
typedef struct dk_zeta_options {
  dk_annulus_rule rule;
  double eps_fraction; /* core threshold as a fraction of d3/2 */
  dk_adjacency adjacency;
} dk_zeta_options;

typedef struct dk_energy_summary {
  double exact;
  double principal;
  double ratio; /* exact / principal, 0 for an empty region */
  double zeta;  /* zeta(2, (delta - z0)/d) over the same point set */
  double principal_from_zeta;
  uint64_t terms;
} dk_energy_summary;

DK_API const char* dk_version(void);
DK_API const char* dk_last_error(void);

DK_API dk_status dk_config_create(dk_lattice lattice, double a, double z0_re, double z0_im, double kp, double kd,
                                  dk_config** out);
DK_API dk_status dk_config_set_delta(dk_config* cfg, double d1, double d2, double d3);
DK_API void dk_config_destroy(dk_config* cfg);

/* Dislocated nodes with base point within radius of z0 and n in [n_begin, n_end).
 * Columns: sheet,l1,l2,n,x,y,z. */
DK_API dk_status dk_lattice_export(const dk_config* cfg, double radius, int64_t n_begin, int64_t n_end,
                                   dk_table** out);

/* Annulus points. Columns: sheet,l1,l2,x,y,dist. */
DK_API dk_status dk_region_export(const dk_config* cfg, const dk_region* region, dk_table** out);

/* Per-node energies over the annulus plus their compensated totals.
 * Columns: sheet,l1,l2,x,y,dist,exact_density,principal_density,ratio.
 * records may be NULL when only the summary is wanted. */
DK_API dk_status dk_energy_run(const dk_config* cfg, const dk_region* region, dk_edge_weight weight, int threads,
                               dk_table** records, dk_energy_summary* summary);
DK_API dk_status dk_energy_summary_json(const dk_energy_summary* summary, char** json);

DK_API dk_status dk_zeta_single(dk_ring ring, double s, double z_re, double z_im, double rho, double N,
                                const dk_zeta_options* opts, int threads, double* value, uint64_t* terms);
/* Sum over an explicit set of sheet-0 ring points l1 + l2 tau. */
DK_API dk_status dk_zeta_explicit(dk_ring ring, double s, double z_re, double z_im, const int64_t* l1,
                                  const int64_t* l2, size_t count, double* value);
/* Columns: N,zeta. */
DK_API dk_status dk_zeta_scan(dk_ring ring, double s, double z_re, double z_im, double rho, const double* Ns,
                              size_t count, const dk_zeta_options* opts, int threads, dk_table** out);
/* Columns: ix,iy,x,y,zeta. min and max may be NULL. */
DK_API dk_status dk_zeta_grid(dk_ring ring, double s, double rho, double N, int cells, const dk_zeta_options* opts,
                              int threads, dk_table** out, double* min, double* max);

/* Runs the invariant suites; json receives the report. */
DK_API dk_status dk_validate(char** json, int* all_passed);

DK_API size_t dk_table_rows(const dk_table* t);
DK_API size_t dk_table_columns(const dk_table* t);
DK_API const char* dk_table_column_name(const dk_table* t, size_t col);
DK_API dk_status dk_table_get_double(const dk_table* t, size_t row, size_t col, double* out);
DK_API dk_status dk_table_write(const dk_table* t, dk_format format, const char* path);
DK_API dk_status dk_table_to_string(const dk_table* t, dk_format format, char** out);
DK_API void dk_table_destroy(dk_table* t);

DK_API void dk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
