#ifndef STA_H
#define STA_H

/* Generated by cbindgen. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum StaStatus {
  STA_STATUS_OK = 0,
  STA_STATUS_NULL_POINTER = 1,
  STA_STATUS_INVALID_ARGUMENT = 2,
  STA_STATUS_INVALID_TRAP = 3,
  STA_STATUS_NON_POSITIVE_WIDTH = 4,
  STA_STATUS_NON_REAL_FREQUENCY = 5,
  STA_STATUS_POWER_UNDEFINED = 6,
  STA_STATUS_NON_FINITE = 7,
  STA_STATUS_COLLAPSE = 8,
  STA_STATUS_DOMAIN = 9,
  STA_STATUS_INFEASIBLE = 10,
  STA_STATUS_BUFFER_TOO_SMALL = 11,
  STA_STATUS_PANIC = 12,
  STA_STATUS_INTERNAL = 13,
} StaStatus;

typedef enum StaFamily {
  STA_FAMILY_QUINTIC = 0,
  /**
   * `param_a = c3`, `param_b = c4`.
   */
  STA_FAMILY_SEPTIC = 1,
  STA_FAMILY_QUASI_OPTIMAL = 2,
  STA_FAMILY_DIRAC_IMPULSE = 3,
  /**
   * `param_a = tau_l`, `param_b = tau_s`.
   */
  STA_FAMILY_HYBRID_CAPS = 4,
  STA_FAMILY_LINEAR_BOTTOM = 5,
  /**
   * `param_a = omega1`, `param_b = omega2`; `t_f` is ignored.
   */
  STA_FAMILY_BANG_BANG = 6,
  STA_FAMILY_BANG_BANG_SYMMETRIC = 7,
  /**
   * `param_a = beta`; `t_f` is ignored.
   */
  STA_FAMILY_BANG_BANG_NA = 8,
  STA_FAMILY_CONSTANT_POWER = 9,
} StaFamily;

/**
 * Sampled series of a protocol.
 */
typedef enum StaSeries {
  STA_SERIES_TIME = 0,
  STA_SERIES_B = 1,
  STA_SERIES_BDOT = 2,
  STA_SERIES_BDDOT = 3,
  STA_SERIES_OMEGA2 = 4,
  STA_SERIES_ENERGY = 5,
  STA_SERIES_KINETIC = 6,
  STA_SERIES_POTENTIAL = 7,
} StaSeries;

/**
 * Opaque protocol handle.
 */
typedef struct StaProtocol StaProtocol;

typedef struct StaProtocolSpec {
  double gamma;
  uint32_t n;
  enum StaFamily family;
  double t_f;
  double param_a;
  double param_b;
} StaProtocolSpec;

typedef struct StaImpulse {
  double time;
  double strength;
} StaImpulse;

/**
 * Time averages of one protocol. Entries that do not apply are NaN.
 */
typedef struct StaEnergySummary {
  double avg_e;
  double avg_k;
  double avg_v;
  double avg_e2;
  double delta_delta;
  double delta_boundary;
  double impulse_energy;
  double e_initial;
  double e_final;
  double avg_ena;
  double power_integral;
  double peak_rel_power;
} StaEnergySummary;

typedef struct StaBounds {
  double e_nl;
  /**
   * NaN outside the domain of the closed form.
   */
  double e_nl_closed_form;
  double ena_l;
  double tf_max;
  double e_min;
  double e_nl_asymptote;
  double ena_l_asymptote;
} StaBounds;

typedef struct StaCapResult {
  double tau_l;
  double tau_s;
  double avg_ena;
  bool feasible;
  bool converged;
} StaCapResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sta_last_error(void);

/**
 * Static name of a status code.
 */
const char *sta_status_name(enum StaStatus status);

/**
 * Builds a protocol sampled on `nodes` points.
 *
 * # Safety
 * `spec` must point to a valid `StaProtocolSpec` and `out` to writable
 * storage for one handle.
 */
enum StaStatus sta_protocol_new(const struct StaProtocolSpec *spec,
                                size_t nodes,
                                struct StaProtocol **out_handle);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `handle` must come from [`sta_protocol_new`] and not be used afterwards.
 */
void sta_protocol_free(struct StaProtocol *handle);

/**
 * Number of samples and the duration of the protocol.
 *
 * # Safety
 * `handle` must be a live handle; the output pointers may be NULL.
 */
enum StaStatus sta_protocol_info(const struct StaProtocol *handle, size_t *len, double *t_f);

/**
 * Copies one series into `buf`, which must hold the full sample count.
 *
 * # Safety
 * `handle` must be live and `buf` must point to `cap` writable doubles.
 */
enum StaStatus sta_protocol_series(struct StaProtocol *handle,
                                   enum StaSeries series,
                                   double *buf,
                                   size_t cap);

/**
 * Copies the Dirac impulses. `count` always receives the number of
 * impulses; with a NULL `buf` nothing else is written.
 *
 * # Safety
 * `handle` must be live, `count` writable and `buf` NULL or valid for `cap`
 * elements.
 */
enum StaStatus sta_protocol_impulses(const struct StaProtocol *handle,
                                     struct StaImpulse *buf,
                                     size_t cap,
                                     size_t *count);

/**
 * Time averages, boundary energies and, where defined, the non-adiabatic
 * average and power integral.
 *
 * # Safety
 * `handle` must be live and `summary` writable.
 */
enum StaStatus sta_energy_summary(struct StaProtocol *handle, struct StaEnergySummary *summary);

/**
 * Lower bounds and reference values for a trap and duration.
 *
 * # Safety
 * `bounds` must be writable.
 */
enum StaStatus sta_bounds(double gamma, uint32_t n, double t_f, struct StaBounds *bounds);

/**
 * Optimizes the hybrid cap durations for a given `t_f`.
 *
 * # Safety
 * `result` must be writable.
 */
enum StaStatus sta_optimize_caps(double gamma, uint32_t n, double t_f, struct StaCapResult *result);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STA_H */
