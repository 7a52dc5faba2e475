/* usbp-dg public C API: upwind summation-by-parts operator construction and
 * the experiment harness behind a stable shared-library boundary.
 *
 * Conventions: every fallible function returns a usbp_status; on failure a
 * thread-local message is available from usbp_last_error(). Matrices are
 * written row-major. Strings returned through char** are heap-allocated and
 * must be released with usbp_string_free().
 */
#ifndef USBP_DG_C_API_H
#define USBP_DG_C_API_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  USBP_OK = 0,
  USBP_ERR_INVALID_ARGUMENT = 1,
  USBP_ERR_CONSTRUCTION = 2,
  USBP_ERR_INADMISSIBLE_STATE = 3,
  USBP_ERR_MESH = 4,
  USBP_ERR_BAD_CONFIG = 5,
  USBP_ERR_IO = 6,
  USBP_ERR_INTERNAL = 7
} usbp_status;

/* Opaque handle for a USBP operator pair (D+, D-, P, Q, B, S). */
typedef struct usbp_operator usbp_operator;

const char* usbp_version(void);

/* Message for the most recent failure on this thread ("" if none). */
const char* usbp_last_error(void);

/* Construct an operator pair.
 *   family:       "LGL", "GaussLegendre", or "Equidistant" (dense-norm, N=4)
 *   n_nodes:      nodes per element
 *   eigenvalues:  all N dissipation eigenvalues, or NULL with n_eigenvalues 0
 *                 to place lambda_top on the highest mode only
 */
usbp_status usbp_operator_create(const char* family, int n_nodes,
                                 const double* eigenvalues, int n_eigenvalues,
                                 double lambda_top, usbp_operator** out);

void usbp_operator_destroy(usbp_operator* op);

int usbp_operator_num_nodes(const usbp_operator* op);
int usbp_operator_degree(const usbp_operator* op);

/* Copy a named matrix ("P", "Q", "B", "D", "S", "Dplus", "Dminus", "Qplus",
 * "Qminus") into buffer (length must be N*N), or the node/weight vectors
 * ("nodes", "weights"; length N). */
usbp_status usbp_operator_matrix(const usbp_operator* op, const char* name,
                                 double* buffer, int length);

/* Run the full invariant suite. pass receives 0/1; max_residual the worst
 * over all checks; exactness_degree the observed exactness. Any output
 * pointer may be NULL. */
usbp_status usbp_operator_verify(const usbp_operator* op, int* pass,
                                 double* max_residual, int* exactness_degree);

/* Detailed verification report as JSON. */
usbp_status usbp_operator_verify_json(const usbp_operator* op, char** json);

/* Serialize / deserialize the documented operator JSON schema. */
usbp_status usbp_operator_to_json(const usbp_operator* op, char** json);
usbp_status usbp_operator_from_json(const char* json, usbp_operator** out);

/* Run one experiment from a JSON config (same schema the CLI builds):
 *   {"experiment": "convergence-advection" | "convergence-euler" | "spectrum"
 *                | "local-stability" | "free-stream" | "isentropic-vortex"
 *                | "kelvin-helmholtz" | "operator-dump",
 *    "N": int, "lambda": double, "splitting": str, "J": int or [int...],
 *    "cfl": double, "t_end": double, "seed": int, "out": str,
 *    "n_geo": [int...], "amplitude": double, "family": str, "scheme": str,
 *    "baseline": bool}
 * On success summary_json (if non-NULL) receives a result summary. */
usbp_status usbp_experiment_run(const char* config_json, char** summary_json);

void usbp_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* USBP_DG_C_API_H */
