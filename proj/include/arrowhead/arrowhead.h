/*
 * C interface to the arrowhead library.
 *
 * Objects are opaque handles created by ah_*_create and released with the
 * matching ah_*_destroy. Every fallible call returns an ah_status; on failure
 * a message for the calling thread is available from ah_last_error() until
 * the next failing call on that thread. Strings returned through char** are
 * heap-allocated and must be released with ah_string_free.
 *
 * Vertex data is passed as arrays of 3^m + 1 doubles in chain order. Chain
 * indices are 1-based.
 */
#ifndef ARROWHEAD_H
#define ARROWHEAD_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(AH_BUILDING_LIBRARY)
#    define AH_API __declspec(dllexport)
#  else
#    define AH_API __declspec(dllimport)
#  endif
#else
#  define AH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ah_status {
  AH_OK = 0,
  AH_INVALID_ARGUMENT = 1,
  AH_SIZE_MISMATCH = 2,
  AH_DOMAIN_ERROR = 3,
  AH_RESOURCE_ERROR = 4,
  AH_CONSISTENCY_ERROR = 5,
  AH_NUMERIC_ERROR = 6,
  AH_IO_ERROR = 7,
  AH_INTERNAL_ERROR = 8,
  AH_STATUS_MAX_ENUM = 0x7fffffff
} ah_status;

typedef enum ah_scheme_kind {
  AH_SCHEME_RAW = 0,
  AH_SCHEME_GEOMETRIC = 1,
  AH_SCHEME_RENORMALIZED = 2,
  AH_SCHEME_KIND_MAX_ENUM = 0x7fffffff
} ah_scheme_kind;

typedef struct ah_scheme {
  ah_scheme_kind kind;
  double delta; /* used by AH_SCHEME_GEOMETRIC */
} ah_scheme;

typedef enum ah_shared_rule {
  AH_SHARED_HALF_SUM = 0, /* (1/8)(mu(T) + mu(T')) */
  AH_SHARED_ADDITIVE = 1, /* (1/4)(mu(T) + mu(T')) */
  AH_SHARED_RULE_MAX_ENUM = 0x7fffffff
} ah_shared_rule;

typedef struct ah_measure {
  double weights[3];
  ah_shared_rule shared_rule;
} ah_measure;

/* The *_MAX_ENUM members only pin the enum width; passing them is an error. */
typedef enum ah_method { AH_METHOD_NUMERIC = 0, AH_METHOD_EXACT = 1, AH_METHOD_MAX_ENUM = 0x7fffffff } ah_method;
typedef enum ah_boundary { AH_BOUNDARY_V1 = 0, AH_BOUNDARY_V0 = 1, AH_BOUNDARY_MAX_ENUM = 0x7fffffff } ah_boundary;
typedef enum ah_scaling {
  AH_SCALING_GEOMETRIC = 0,
  AH_SCALING_ARCLENGTH = 1,
  AH_SCALING_MAX_ENUM = 0x7fffffff
} ah_scaling;
typedef enum ah_format { AH_FORMAT_JSON = 0, AH_FORMAT_TEXT = 1, AH_FORMAT_MAX_ENUM = 0x7fffffff } ah_format;

typedef struct ah_level ah_level;
typedef struct ah_spectrum ah_spectrum;

AH_API const char* ah_version(void);
AH_API const char* ah_status_name(ah_status status);
AH_API const char* ah_last_error(void);
AH_API void ah_string_free(char* s);

/* Process-wide maximum level (default 12). */
AH_API int ah_depth_limit(void);
AH_API ah_status ah_set_depth_limit(int limit);

AH_API ah_scheme ah_default_scheme(void);
AH_API ah_measure ah_default_measure(void);

/* ---- curve ------------------------------------------------------------ */

AH_API ah_status ah_level_create(int m, ah_level** out);
AH_API void ah_level_destroy(ah_level* level);
AH_API int ah_level_m(const ah_level* level);
AH_API size_t ah_level_vertex_count(const ah_level* level);
/* Interleaved x, y; capacity counts doubles and must be >= 2 * vertex count. */
AH_API ah_status ah_level_vertices(const ah_level* level, double* xy, size_t capacity);
AH_API ah_status ah_level_arc_coordinate(const ah_level* level, size_t chain_index, double* out);
AH_API ah_status ah_level_csv(const ah_level* level, char** out);
/* overlay may be NULL; otherwise overlay_len must equal the vertex count. */
AH_API ah_status ah_level_svg(const ah_level* level, const double* overlay, size_t overlay_len, char** out);
AH_API ah_status ah_trapeze_count(const ah_level* level, size_t* out);
AH_API ah_status ah_trapeze_area(const ah_level* level, size_t j, double* out);

/* ---- measure ---------------------------------------------------------- */

AH_API ah_status ah_trapeze_measure(const ah_measure* measure, int m, size_t j, double* out);
AH_API ah_status ah_integrate(int m, const double* u, size_t n, const ah_measure* measure, double* out);
AH_API ah_status ah_spline_integral(int m, size_t chain_index, const ah_measure* measure, double* out);

/* ---- energy ----------------------------------------------------------- */

AH_API ah_status ah_conductance(ah_scheme scheme, int m, double* out);
AH_API ah_status ah_energy(int m, const double* u, const double* v, size_t n, ah_scheme scheme, double* out);
/* out_n must equal 3^m_to + 1. */
AH_API ah_status ah_harmonic_extension(int m_from, const double* u, size_t n, int m_to, double* out, size_t out_n);
AH_API ah_status ah_energy_ratio(int m, const double* u, size_t n, ah_scheme scheme, double* out);
/* CSV level,scheme,energy,ratio for the harmonic extensions of V_1 data. */
AH_API ah_status ah_energy_sequence_csv(const double boundary[4], int m_max, const ah_scheme* schemes,
                                        size_t n_schemes, char** out);
/* CSV chain_index,arc_coordinate,value. */
AH_API ah_status ah_vertex_function_csv(int m, const double* u, size_t n, char** out);

/* ---- laplacian -------------------------------------------------------- */

/* out receives 3^m - 1 values for chain indices 2 .. 3^m. */
AH_API ah_status ah_graph_laplacian(int m, const double* u, size_t n, double* out, size_t out_n);
AH_API ah_status ah_pointwise_laplacian(int m, const double* u, size_t n, ah_scheme scheme,
                                        const ah_measure* measure, double* out, size_t out_n);
/* CSV chain_index,arc_coordinate,f_m. */
AH_API ah_status ah_pointwise_laplacian_csv(int m, const double* u, size_t n, ah_scheme scheme,
                                            const ah_measure* measure, char** out);
AH_API ah_status ah_summation_by_parts(int m, const double* u, const double* v, size_t n, ah_scheme scheme,
                                       double* residual);

/* ---- spectrum --------------------------------------------------------- */

AH_API ah_status ah_spectrum_create(int m, ah_method method, ah_boundary boundary, ah_spectrum** out);
AH_API void ah_spectrum_destroy(ah_spectrum* spectrum);
AH_API size_t ah_spectrum_size(const ah_spectrum* spectrum);
AH_API ah_status ah_spectrum_values(const ah_spectrum* spectrum, double* out, size_t capacity);
/* CSV level,k,eigenvalue,multiplicity. */
AH_API ah_status ah_spectrum_csv(const ah_spectrum* spectrum, char** out);
/* Block eigenfunction (block 0..2, mode k >= 1) on V_1 boundary; out_n = 3^m + 1. */
AH_API ah_status ah_dirichlet_eigenfunction(int m, size_t block, size_t k, double* eigenvalue, double* out,
                                            size_t out_n);
AH_API ah_status ah_forbidden_check(int m, int* absent, double* margin);

AH_API ah_status ah_phi(double x, double* out);
AH_API ah_status ah_phi_inverse(double y, double* out);
AH_API ah_status ah_decimate_down(double lambda, double* out);
AH_API ah_status ah_decimate_up(double parent, double children[3]);
/* CSV parent,branch,child with the given number of significant digits. */
AH_API ah_status ah_decimate_up_csv(double parent, int significant_digits, char** out);
/* Extends an eigenfunction of level m-1 (n = 3^(m-1) + 1) to level m. */
AH_API ah_status ah_extend_eigenfunction(int m_from, const double* u, size_t n, double parent, double child,
                                         double* out, size_t out_n);

/* ---- counting --------------------------------------------------------- */

/* CSV x,N,scaling over levels 2..m_max. grid_points == 0 emits one row per
 * level at x_m = 4 s^m; otherwise the deepest level on a log grid. */
AH_API ah_status ah_counting_csv(int m_max, ah_method method, ah_scaling scaling, size_t grid_points, char** out);
/* Least-squares Weyl exponent over levels m_min..m_max (at least three). */
AH_API ah_status ah_weyl_fit(int m_min, int m_max, ah_scaling scaling, double* alpha, double* residual);

/* ---- report ----------------------------------------------------------- */

/* Full reproduction sweep up to the given depth (>= 4). Returns
 * AH_NUMERIC_ERROR with the partial document in *out if any section failed
 * to run; failed checks alone do not change the status. */
AH_API ah_status ah_report(int depth, ah_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ARROWHEAD_H */
