#ifndef EQCURV_EQCURV_H
#define EQCURV_EQCURV_H

#include <stddef.h>
#include <stdint.h>

#if defined(EQCURV_BUILDING_LIBRARY)
#define EQC_API __attribute__((visibility("default")))
#else
#define EQC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqc_status {
  EQC_OK = 0,
  EQC_DEGENERATE_METRIC = 1,
  EQC_NOT_SYMMETRIC = 2,
  EQC_DIMENSION_TOO_SMALL = 3,
  EQC_DIMENSION_MISMATCH = 4,
  EQC_UNKNOWN_SPACE = 5,
  EQC_NOT_GENERALIZED_CURVATURE = 6,
  EQC_NOT_ALGEBRAIC = 7,
  EQC_FORM_SYMMETRY_VIOLATION = 8,
  EQC_EMPTY_SPACE = 9,
  EQC_INCONCLUSIVE_RANK = 10,
  EQC_DEGENERATE_AT_POINT = 11,
  EQC_SCHEMA_ERROR = 12,
  EQC_LENGTH_MISMATCH = 13,
  EQC_INVALID_ARGUMENT = 14,
  EQC_INTERNAL_ERROR = 15
} eqc_status;

typedef enum eqc_space {
  EQC_SPACE_CO = 0,
  EQC_SPACE_R = 1,
  EQC_SPACE_A = 2,
  EQC_SPACE_S = 3,
  EQC_SPACE_F = 4,
  EQC_SPACE_P = 5,
  EQC_SPACE_T = 6
} eqc_space;

typedef enum eqc_mode { EQC_MODE_W = 0, EQC_MODE_A = 1, EQC_MODE_ST = 2 } eqc_mode;

typedef struct eqc_metric eqc_metric;
typedef struct eqc_tensor eqc_tensor;
typedef struct eqc_decomposition eqc_decomposition;

/* Status text ("ok", "DegenerateMetric", ...). Never NULL. */
EQC_API const char* eqc_status_string(int status);
/* Message of the last failing call on this thread; "" after success. */
EQC_API const char* eqc_last_error_message(void);
EQC_API const char* eqc_version(void);

/* Scalar products. entries: n*n row-major. */
EQC_API int eqc_metric_create(int n, const double* entries, eqc_metric** out);
EQC_API int eqc_metric_standard(int p, int q, eqc_metric** out);
EQC_API int eqc_metric_scaled(const eqc_metric* g, double factor, eqc_metric** out);
EQC_API int eqc_metric_dim(const eqc_metric* g);
EQC_API int eqc_metric_signature(const eqc_metric* g, int* p, int* q);
EQC_API int eqc_metric_entries(const eqc_metric* g, double* out, size_t len);
EQC_API void eqc_metric_free(eqc_metric* g);

/* Rank-4 tensors, n^4 entries row-major in (i,j,k,l). */
EQC_API int eqc_tensor_create(int n, const double* entries, size_t len, eqc_tensor** out);
EQC_API int eqc_tensor_zero(int n, eqc_tensor** out);
EQC_API int eqc_tensor_dim(const eqc_tensor* t);
EQC_API size_t eqc_tensor_size(const eqc_tensor* t);
EQC_API int eqc_tensor_entries(const eqc_tensor* t, double* out, size_t len);
EQC_API void eqc_tensor_free(eqc_tensor* t);

/* Algebra. Forms are n*n row-major. */
EQC_API int eqc_wedge(const double* h, const double* k, int n, double r, eqc_tensor** out);
EQC_API int eqc_dot(const double* h, const double* k, int n, eqc_tensor** out);
EQC_API int eqc_conjugate(const eqc_tensor* t, eqc_tensor** out);
EQC_API int eqc_bianchi_project(const eqc_tensor* t, eqc_tensor** out);
EQC_API int eqc_psi_mu(const eqc_tensor* t, eqc_tensor** psi, eqc_tensor** mu);
EQC_API int eqc_membership(const eqc_tensor* t, const eqc_metric* g, eqc_space space, double tol, int* member,
                           double* residual);
/* ric and ric_star receive n*n entries; tau may be NULL. */
EQC_API int eqc_ricci(const eqc_tensor* t, const eqc_metric* g, double* ric, double* ric_star, double* tau);
EQC_API int eqc_pairing(const eqc_tensor* a, const eqc_tensor* b, const eqc_metric* g, double* out);

/* Decompositions. W and A yield 8 components, ST yields 3 (u, z, w). */
EQC_API int eqc_decompose(eqc_mode mode, const eqc_tensor* r, const eqc_metric* g, double tol,
                          eqc_decomposition** out);
EQC_API int eqc_decomposition_count(const eqc_decomposition* d);
EQC_API int eqc_decomposition_component(const eqc_decomposition* d, int index, eqc_tensor** out);
EQC_API double eqc_decomposition_completeness(const eqc_decomposition* d);
EQC_API double eqc_decomposition_orthogonality(const eqc_decomposition* d);
EQC_API void eqc_decomposition_free(eqc_decomposition* d);

EQC_API int eqc_projective_part(const eqc_tensor* r, const eqc_metric* g, double tol, eqc_tensor** out);
EQC_API int eqc_sigma_split(const double* omega, const double* theta, const eqc_metric* g, eqc_tensor** out);
EQC_API int eqc_einstein_check(const eqc_tensor* r, const eqc_metric* g, double tol, int* verdict,
                               int* direct_verdict);

/* Sampling. space: co r a s f p t a_plus_s W1..W8 A1..A8. */
EQC_API int eqc_sample(const char* space, const eqc_metric* g, uint64_t seed, uint64_t index, eqc_tensor** out);
EQC_API int eqc_empirical_dimension(const char* space, const eqc_metric* g, int samples, uint64_t seed, int* dim,
                                    int* formula_dim, int* conclusive);

/* JSON entry points. Output strings are owned by the caller and released
   with eqc_free_string. */
EQC_API int eqc_decompose_json(const char* mode, const char* tensor_json, char** out);
EQC_API int eqc_sample_json(const char* space, int p, int q, uint64_t seed, char** out);
EQC_API int eqc_dims_json(int p, int q, int samples, uint64_t seed, char** out);
/* config_json: {"dims": [...], "signatures": [[p,q],...], "samples": k,
   "seed": s, "tol": t, "only": [...]}; every key optional. */
EQC_API int eqc_verify_json(const char* config_json, char** out, int* all_passed);
/* report: "curvature" or "triple". point: n coordinates. */
EQC_API int eqc_chart_json(const char* chart_json, const double* point, size_t len, const char* report, char** out);
EQC_API void eqc_free_string(char* s);

#ifdef __cplusplus
}
#endif

#endif
