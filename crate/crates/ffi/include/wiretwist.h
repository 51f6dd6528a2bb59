#ifndef WIRETWIST_H
#define WIRETWIST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every call.
 */
typedef enum WtStatus {
  WT_STATUS_OK = 0,
  WT_STATUS_INVALID_GEOMETRY = 1,
  WT_STATUS_INVALID_INPUT = 2,
  WT_STATUS_DOMAIN = 3,
  WT_STATUS_WRONG_SECTION_KIND = 4,
  WT_STATUS_QUADRATURE_NOT_CONVERGED = 5,
  WT_STATUS_DEGENERATE_FIT = 6,
  WT_STATUS_NULL_POINTER = 7,
  WT_STATUS_OUT_OF_BOUNDS = 8,
  WT_STATUS_PANIC = 9,
} WtStatus;

/**
 * Integration backend selector.
 */
typedef enum WtScheme {
  WT_SCHEME_ADAPTIVE_SIMPSON = 0,
  WT_SCHEME_GAUSS_LEGENDRE = 1,
} WtScheme;

/**
 * Table of section integrals over a DoE grid.
 */
typedef struct WtDoeTable WtDoeTable;

/**
 * Ring geometry and material.
 */
typedef struct WtRing WtRing;

/**
 * Sampled torque curve with its stiffness summary.
 */
typedef struct WtTorqueCurve WtTorqueCurve;

/**
 * Quadrature settings. Pass NULL wherever one is accepted to use the defaults.
 */
typedef struct WtQuadrature {
  /**
   * A `WtScheme` value.
   */
  uint32_t scheme;
  double rel_tol;
  /**
   * Bisection depth for Simpson, panel budget for Gauss-Legendre.
   */
  uint32_t cap;
} WtQuadrature;

/**
 * One DoE row. `gamma` in radians, `i_over_r4` dimensionless.
 */
typedef struct WtDoeRow {
  double rw_ratio;
  double l_ratio;
  double gamma;
  double x;
  double i_over_r4;
} WtDoeRow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Ring with a full circular wire section of radius `r` (mm).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum WtStatus wt_ring_new_circular(double ring_radius,
                                   uint32_t balls,
                                   double modulus,
                                   double r,
                                   struct WtRing **out);

/**
 * Ring with a wire-race section given in absolute dimensions (mm, rad).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum WtStatus wt_ring_new_wire_race(double ring_radius,
                                    uint32_t balls,
                                    double modulus,
                                    double r,
                                    double rw,
                                    double l,
                                    double gamma,
                                    struct WtRing **out);

/**
 * Ring with a wire-race section given by `r_w/r` and `L/r`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for a handle.
 */
enum WtStatus wt_ring_new_wire_race_ratios(double ring_radius,
                                           uint32_t balls,
                                           double modulus,
                                           double r,
                                           double rw_ratio,
                                           double l_ratio,
                                           double gamma,
                                           struct WtRing **out);

/**
 * # Safety
 * `ring` must be NULL or a handle from a `wt_ring_new_*` call not yet freed.
 */
void wt_ring_free(struct WtRing *ring);

/**
 * Section integral in mm^4.
 *
 * # Safety
 * `ring` must be a live handle, `quad` NULL or valid, `out` writable.
 */
enum WtStatus wt_section_integral(const struct WtRing *ring,
                                  const struct WtQuadrature *quad,
                                  double *out);

/**
 * Stiffness from the numerically integrated section, N·mm/rad.
 *
 * # Safety
 * `ring` must be a live handle, `quad` NULL or valid, `out` writable.
 */
enum WtStatus wt_stiffness_numeric(const struct WtRing *ring,
                                   const struct WtQuadrature *quad,
                                   double *out);

/**
 * Closed-form stiffness; circular sections only.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
enum WtStatus wt_stiffness_circular(const struct WtRing *ring, double *out);

/**
 * Engineering-formula stiffness. `out_of_range` may be NULL; when given it
 * receives 1 if the clearance lies outside the fitted range.
 *
 * # Safety
 * `ring` must be a live handle, `out` writable, `out_of_range` NULL or writable.
 */
enum WtStatus wt_stiffness_engineering(const struct WtRing *ring,
                                       double *out,
                                       int32_t *out_of_range);

/**
 * Torque in N·mm at twist `alpha` (rad).
 *
 * # Safety
 * `ring` must be a live handle, `quad` NULL or valid, `out` writable.
 */
enum WtStatus wt_torque(const struct WtRing *ring,
                        double alpha,
                        const struct WtQuadrature *quad,
                        double *out);

/**
 * Brute-force grid torque in N·mm.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
enum WtStatus wt_oracle_torque(const struct WtRing *ring,
                               double alpha,
                               size_t n_rho,
                               size_t n_theta,
                               double *out);

/**
 * Samples `2 n_steps + 1` twist angles on `[-alpha_max, alpha_max]`.
 *
 * # Safety
 * `ring` must be a live handle, `quad` NULL or valid, `out` writable.
 */
enum WtStatus wt_torque_curve_new(const struct WtRing *ring,
                                  double alpha_max,
                                  size_t n_steps,
                                  const struct WtQuadrature *quad,
                                  struct WtTorqueCurve **out);

/**
 * # Safety
 * `curve` must be NULL or a live handle.
 */
void wt_torque_curve_free(struct WtTorqueCurve *curve);

/**
 * Number of samples; 0 for NULL.
 *
 * # Safety
 * `curve` must be NULL or a live handle.
 */
size_t wt_torque_curve_len(const struct WtTorqueCurve *curve);

/**
 * # Safety
 * `curve` must be a live handle; `alpha` and `torque` writable.
 */
enum WtStatus wt_torque_curve_sample(const struct WtTorqueCurve *curve,
                                     size_t index,
                                     double *alpha,
                                     double *torque);

/**
 * Origin stiffness and the two end secants, N·mm/rad. Any out pointer may be NULL.
 *
 * # Safety
 * `curve` must be a live handle; each out pointer NULL or writable.
 */
enum WtStatus wt_torque_curve_stiffness(const struct WtTorqueCurve *curve,
                                        double *k_origin,
                                        double *k_secant_pos,
                                        double *k_secant_neg);

/**
 * Full-factorial DoE at `r = 1`. An empty list (length 0) selects the
 * default values for that factor. Gammas are in radians.
 *
 * # Safety
 * Each array must hold at least its stated length; `quad` NULL or valid;
 * `out` writable.
 */
enum WtStatus wt_doe_run(const double *rw_ratios,
                         size_t n_rw,
                         const double *clearances,
                         size_t n_clearances,
                         const double *gammas,
                         size_t n_gammas,
                         const struct WtQuadrature *quad,
                         struct WtDoeTable **out);

/**
 * # Safety
 * `table` must be NULL or a live handle.
 */
void wt_doe_free(struct WtDoeTable *table);

/**
 * Number of rows; 0 for NULL.
 *
 * # Safety
 * `table` must be NULL or a live handle.
 */
size_t wt_doe_len(const struct WtDoeTable *table);

/**
 * # Safety
 * `table` must be a live handle and `out` writable.
 */
enum WtStatus wt_doe_row(const struct WtDoeTable *table, size_t index, struct WtDoeRow *out);

/**
 * Anchored least-squares slope `c` and the largest absolute residual.
 * `max_residual` may be NULL.
 *
 * # Safety
 * `table` must be a live handle, `coefficient` writable, `max_residual` NULL or writable.
 */
enum WtStatus wt_doe_fit(const struct WtDoeTable *table, double *coefficient, double *max_residual);

/**
 * CSV text of the table. Release the string with [`wt_string_free`].
 *
 * # Safety
 * `table` must be a live handle and `out` writable.
 */
enum WtStatus wt_doe_to_csv(const struct WtDoeTable *table, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void wt_string_free(char *s);

/**
 * Message of the last failed call on this thread, or "" after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *wt_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *wt_status_str(enum WtStatus status);

/**
 * Library version as a static string.
 */
const char *wt_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WIRETWIST_H */
