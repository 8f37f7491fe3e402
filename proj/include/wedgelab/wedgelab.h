#ifndef WEDGELAB_H
#define WEDGELAB_H

/* C interface to the wedgelab library.
 *
 * Objects are opaque handles created by *_read / *_parse / *_build style
 * functions and released with the matching *_free. Every fallible call
 * returns a wl_status; on failure wl_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 * Strings returned through char** out-parameters are heap copies owned by
 * the caller and released with wl_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WEDGELAB_BUILDING)
#    define WL_API __declspec(dllexport)
#  else
#    define WL_API __declspec(dllimport)
#  endif
#else
#  define WL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wl_status {
  WL_OK = 0,
  WL_ERR_INVALID_ARGUMENT = 1,
  WL_ERR_IO = 2,
  WL_ERR_PARSE = 3,
  WL_ERR_DUPLICATE_POINT = 4,
  WL_ERR_ORIGIN_POINT = 5,
  WL_ERR_CAP_EXCEEDED = 6,
  WL_ERR_COLLINEAR_PAIR = 7,
  WL_ERR_PROJECTION = 8,
  WL_ERR_COINCIDENT_LINES = 9,
  WL_ERR_ROTATION_EXHAUSTED = 10,
  WL_ERR_GENERATOR_EXHAUSTED = 11,
  WL_ERR_INTERNAL = 99
} wl_status;

typedef struct wl_point_set wl_point_set;
typedef struct wl_real_set wl_real_set;
typedef struct wl_line_family wl_line_family;

WL_API const char *wl_last_error(void);
WL_API const char *wl_status_name(wl_status status);
WL_API void wl_string_free(char *s);

/* Limits and knobs shared by the heavier entry points. */
typedef struct wl_options {
  size_t oracle_cap;        /* largest N for O(N^4) oracles (default 12) */
  size_t sumprod_cap;       /* largest |A| for representation counts (default 64) */
  size_t max_lines;         /* largest family for pairwise incidence work (default 400) */
  uint64_t triple_budget;   /* regulus triples before subsampling (default 34220) */
  size_t rotation_attempts; /* Pythagorean rotations tried (default 64) */
  int oriented;             /* build only positively oriented lines */
  unsigned workers;         /* 0 = one per hardware thread */
} wl_options;

WL_API void wl_options_default(wl_options *opts);

/* ---- point sets ---------------------------------------------------------- */

WL_API wl_status wl_point_set_read(const char *path, wl_point_set **out);
WL_API wl_status wl_point_set_parse(const char *text, wl_point_set **out);
WL_API wl_status wl_point_set_write(const wl_point_set *p, const char *path);
WL_API wl_status wl_point_set_format(const wl_point_set *p, char **out);
WL_API wl_status wl_point_set_perp(const wl_point_set *p, wl_point_set **out);
WL_API size_t wl_point_set_size(const wl_point_set *p);
WL_API void wl_point_set_free(wl_point_set *p);

typedef struct wl_generator_spec {
  const char *kind; /* grid, circle, random, collinear, file, product-grid */
  uint64_t n;
  uint64_t denominator; /* random only */
  int has_seed;
  uint64_t seed;
  const char *path; /* file, or the base set of product-grid; may be NULL */
} wl_generator_spec;

WL_API wl_status wl_generate(const wl_generator_spec *spec, wl_point_set **out);

/* cos = cos_num/denom, sin = sin_num/denom */
typedef struct wl_rotation {
  int64_t cos_num;
  int64_t sin_num;
  int64_t denom;
  uint64_t attempt;
} wl_rotation;

WL_API wl_status wl_normalize_rotation(const wl_point_set *p, size_t max_attempts,
                                       wl_point_set **out, wl_rotation *rotation);
WL_API wl_status wl_max_collinear(const wl_point_set *p, uint64_t *out);

/* ---- counting ------------------------------------------------------------ */

typedef struct wl_energy_report {
  uint64_t energy;
  uint64_t distinct_values;
  uint64_t total_pairs;
} wl_energy_report;

WL_API wl_status wl_distinct_areas(const wl_point_set *p, unsigned workers, uint64_t *out);
WL_API wl_status wl_distinct_areas_bipartite(const wl_point_set *p, const wl_point_set *q,
                                             unsigned workers, uint64_t *out);
WL_API wl_status wl_distinct_dot_products(const wl_point_set *p, unsigned workers, uint64_t *out);
WL_API wl_status wl_energy(const wl_point_set *p, unsigned workers, wl_energy_report *out);
/* {"total": .., "entries": [["s", n(s)], ...]} */
WL_API wl_status wl_wedge_histogram_json(const wl_point_set *p, unsigned workers, char **json);
WL_API wl_status wl_quadruple_count(const wl_point_set *p, int restricted, size_t cap, uint64_t *out);

/* ---- transformation lines ------------------------------------------------- */

WL_API wl_status wl_line_family_build(const wl_point_set *p, int oriented, wl_line_family **out);
/* 4D -> 3D by dropping x4; the input must come from a rotation-normalized set. */
WL_API wl_status wl_line_family_project(const wl_line_family *f, wl_line_family **out);
WL_API wl_status wl_line_family_read(const char *path, wl_line_family **out);
WL_API wl_status wl_line_family_write(const wl_line_family *f, const char *path);
WL_API wl_status wl_line_family_format(const wl_line_family *f, char **out);
WL_API size_t wl_line_family_size(const wl_line_family *f);
WL_API int wl_line_family_dim(const wl_line_family *f);
WL_API void wl_line_family_free(wl_line_family *f);

/* ---- verification (JSON report + pass flag) -------------------------------- */

WL_API wl_status wl_verify_correspondence(const wl_point_set *p, const wl_options *opts,
                                          char **json, int *passed);
/* Rotates, builds (opts->oriented) and checks the incidence hypotheses. */
WL_API wl_status wl_verify_gkt_points(const wl_point_set *p, const wl_options *opts,
                                      char **json, int *passed);
WL_API wl_status wl_verify_gkt_family(const wl_line_family *f, const wl_options *opts,
                                      char **json, int *passed);
WL_API wl_status wl_verify_invariants(const wl_point_set *p, const wl_options *opts,
                                      char **json, int *passed);

/* ---- sum-product ----------------------------------------------------------- */

WL_API wl_status wl_real_set_read(const char *path, wl_real_set **out);
WL_API wl_status wl_real_set_parse(const char *text, wl_real_set **out);
WL_API wl_status wl_real_set_range(size_t n, wl_real_set **out);
WL_API size_t wl_real_set_size(const wl_real_set *a);
WL_API void wl_real_set_free(wl_real_set *a);

/* sign: +1 for A.A + A.A, -1 for A.A - A.A */
WL_API wl_status wl_product_sumset(const wl_real_set *a, int sign, uint64_t *out);
WL_API wl_status wl_dio_solution_count(const wl_real_set *a, size_t cap, uint64_t *out);
WL_API wl_status wl_sumprod_report(const wl_real_set *a, const wl_options *opts, char **json,
                                   int *passed);

/* ---- full report ----------------------------------------------------------- */

WL_API wl_status wl_report(const wl_point_set *p, const wl_options *opts, char **json,
                           char **csv_row);
WL_API const char *wl_csv_header(void);

/* ---- files ----------------------------------------------------------------- */

/* Temp-and-rename write of text to path. */
WL_API wl_status wl_write_text(const char *path, const char *text);
/* Appends one CSV row, writing the header first when path is missing or empty. */
WL_API wl_status wl_append_csv_row(const char *path, const char *row);

#ifdef __cplusplus
}
#endif

#endif
