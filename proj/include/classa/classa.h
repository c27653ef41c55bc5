#ifndef CLASSA_H
#define CLASSA_H

/* C interface to the planar matrix-generated Bezier curve library.
 *
 * Handles are opaque; every constructor has a matching _free. Functions
 * return CLASSA_OK on success and an error code otherwise, with a
 * human-readable detail available from classa_last_error() on the same
 * thread. Strings returned through char** are heap-allocated and released
 * with classa_string_free.
 */

#include <stddef.h>

#if defined(_WIN32)
#define CLASSA_API __declspec(dllexport)
#else
#define CLASSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum classa_status {
  CLASSA_OK = 0,
  CLASSA_ERR_PARSE = 1,
  CLASSA_ERR_IO = 2,
  CLASSA_ERR_BAD_ARGUMENT = 3,
  CLASSA_ERR_ZERO_SEED = 4,
  CLASSA_ERR_ZERO_VECTOR = 5,
  CLASSA_ERR_SINGULAR_SUBDIVISION = 6,
  CLASSA_ERR_VANISHING_SPEED = 7,
  CLASSA_ERR_COLLINEAR = 8,
  CLASSA_ERR_WRONG_VARIANT = 9,
  CLASSA_ERR_DEGENERATE = 10,
  CLASSA_ERR_UNKNOWN_ID = 11,
  CLASSA_ERR_INTERNAL = 12
} classa_status;

typedef enum classa_monotonicity {
  CLASSA_MONOTONE_DECREASING = 0,
  CLASSA_MONOTONE_INCREASING = 1,
  CLASSA_NON_MONOTONE = 2,
  CLASSA_DEGENERATE_LINE = 3
} classa_monotonicity;

typedef struct classa_spec classa_spec;
typedef struct classa_certification classa_certification;
typedef struct classa_audit classa_audit;

CLASSA_API const char* classa_status_name(classa_status status);
CLASSA_API const char* classa_monotonicity_name(classa_monotonicity kind);
/* Detail of the most recent failure on this thread; empty string if none. */
CLASSA_API const char* classa_last_error(void);
CLASSA_API void classa_string_free(char* text);

/* --- curve specs ------------------------------------------------------- */

CLASSA_API classa_status classa_spec_parse(const char* text, classa_spec** out);
CLASSA_API classa_status classa_spec_load(const char* path, classa_spec** out);
CLASSA_API void classa_spec_free(classa_spec* spec);

CLASSA_API int classa_spec_degree(const classa_spec* spec);
/* Row-major generator entries. */
CLASSA_API void classa_spec_generator(const classa_spec* spec, double out[4]);
CLASSA_API void classa_spec_seed(const classa_spec* spec, double out[2]);
/* Nonzero when the spec generates a straight segment. */
CLASSA_API int classa_spec_is_degenerate(const classa_spec* spec);

/* Control points as x0 y0 x1 y1 ...; *count receives degree + 1.  Returns
 * CLASSA_ERR_BAD_ARGUMENT when the capacity (in points) is too small. */
CLASSA_API classa_status classa_control_points(const classa_spec* spec, double* xy,
                                               size_t capacity, size_t* count);

CLASSA_API classa_status classa_point_at(const classa_spec* spec, double t, double out[2]);
CLASSA_API classa_status classa_curvature_at(const classa_spec* spec, double t, double* kappa);
CLASSA_API classa_status classa_curvature_derivative_at(const classa_spec* spec, double t,
                                                        double* dkappa);
CLASSA_API classa_status classa_endpoint_curvatures(const classa_spec* spec, double* kappa0,
                                                    double* kappa1);

/* --- rendering --------------------------------------------------------- */

CLASSA_API classa_status classa_render_csv(const classa_spec* spec, int samples, char** out);
CLASSA_API classa_status classa_render_svg(const classa_spec* spec, int samples, char** out);

/* --- certification ----------------------------------------------------- */

CLASSA_API classa_status classa_certify(const classa_spec* spec, int grid,
                                        classa_certification** out);
CLASSA_API void classa_certification_free(classa_certification* c);

CLASSA_API int classa_certificate_count(const classa_certification* c);
CLASSA_API const char* classa_certificate_name(const classa_certification* c, int i);
CLASSA_API int classa_certificate_holds(const classa_certification* c, int i);
CLASSA_API int classa_certificate_applicable(const classa_certification* c, int i);
CLASSA_API const char* classa_certificate_direction(const classa_certification* c, int i);
CLASSA_API const char* classa_certificate_reason(const classa_certification* c, int i);
CLASSA_API int classa_certificate_detail_count(const classa_certification* c, int i);
CLASSA_API const char* classa_certificate_detail_name(const classa_certification* c, int i,
                                                      int j);
CLASSA_API double classa_certificate_detail_value(const classa_certification* c, int i, int j);

CLASSA_API classa_monotonicity classa_verdict(const classa_certification* c);
CLASSA_API int classa_verdict_extrema_count(const classa_certification* c);
CLASSA_API double classa_verdict_extremum(const classa_certification* c, int i);

CLASSA_API int classa_any_certificate_holds(const classa_certification* c);
/* Nonzero when a held certificate contradicts the sampled verdict. */
CLASSA_API int classa_soundness_alarm(const classa_certification* c);

/* --- bundled example gallery ------------------------------------------- */

CLASSA_API int classa_example_count(void);
CLASSA_API const char* classa_example_id(int i);
CLASSA_API const char* classa_example_note(int i);
CLASSA_API classa_monotonicity classa_example_expected(int i);
CLASSA_API classa_status classa_example_spec(int i, classa_spec** out);

/* --- Class A matrix audit ---------------------------------------------- */

/* matrix: 4 (dim == 2) or 9 (dim == 3) row-major entries; seed may be NULL.
 * degree drives the area-chain length when a seed is present; grid sets the
 * resolution of the subdivision profile. */
CLASSA_API classa_status classa_audit_matrix(const double* matrix, int dim, const double* seed,
                                             int degree, int grid, classa_audit** out);
CLASSA_API classa_status classa_audit_sigmas(double sigma_min, double sigma_max, int grid,
                                             classa_audit** out);
CLASSA_API void classa_audit_free(classa_audit* audit);

CLASSA_API int classa_audit_has_expansion(const classa_audit* audit);
CLASSA_API int classa_audit_expansion_holds(const classa_audit* audit);
CLASSA_API double classa_audit_min_symmetric_eigenvalue(const classa_audit* audit);
CLASSA_API int classa_audit_singular_value_count(const classa_audit* audit);
CLASSA_API double classa_audit_singular_value(const classa_audit* audit, int i);
CLASSA_API int classa_audit_corrected_holds(const classa_audit* audit);
CLASSA_API int classa_audit_misprint_holds(const classa_audit* audit);
CLASSA_API double classa_audit_profile_min(const classa_audit* audit);
CLASSA_API double classa_audit_profile_min_t(const classa_audit* audit);
CLASSA_API double classa_audit_profile_slope0(const classa_audit* audit);
CLASSA_API int classa_audit_has_witness(const classa_audit* audit);
CLASSA_API double classa_audit_witness_t(const classa_audit* audit);
CLASSA_API int classa_audit_has_seed_ratio(const classa_audit* audit);
CLASSA_API double classa_audit_seed_ratio(const classa_audit* audit);
CLASSA_API int classa_audit_has_proposition(const classa_audit* audit);
CLASSA_API double classa_audit_proposition_lhs(const classa_audit* audit);
CLASSA_API double classa_audit_proposition_rhs(const classa_audit* audit);
CLASSA_API int classa_audit_proposition_hypothesis(const classa_audit* audit);
CLASSA_API int classa_audit_proposition_conclusion(const classa_audit* audit);

#ifdef __cplusplus
}
#endif

#endif /* CLASSA_H */
