#ifndef TRIGONAL_CAPI_H
#define TRIGONAL_CAPI_H

/* Generated by cbindgen from trigonal-capi; edit src/lib.rs instead. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum TrigStatus {
  /**
   * The call succeeded and out-parameters are populated.
   */
  TRIG_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  TRIG_STATUS_NULL_POINTER = 1,
  /**
   * Arguments were well-formed but rejected: unsupported genus, unknown
   * check name, guarded computation without `force`, or non-UTF-8 text.
   */
  TRIG_STATUS_INVALID_INPUT = 2,
  /**
   * The computation itself reported an error.
   */
  TRIG_STATUS_DOMAIN = 3,
  /**
   * A panic was caught at the boundary. Memory stays valid but the
   * out-parameters were not written.
   */
  TRIG_STATUS_PANIC = 4,
} TrigStatus;

/**
 * Vanishing-cycle diagram flavor.
 */
typedef enum TrigStyle {
  /**
   * Chain diagram, generators `t1..t{2g+2}`.
   */
  TRIG_STYLE_TRIGONAL = 0,
  /**
   * Ladder diagram, generators `T1..T{2g+2}`.
   */
  TRIG_STYLE_WEIERSTRASS = 1,
} TrigStyle;

/**
 * Rendering target for a presentation.
 */
typedef enum TrigFormat {
  /**
   * One generator-count line, then one line per relator.
   */
  TRIG_FORMAT_TEXT = 0,
  /**
   * A GAP script defining `G := F / rels;;`.
   */
  TRIG_FORMAT_GAP = 1,
  /**
   * Pretty-printed JSON.
   */
  TRIG_FORMAT_JSON = 2,
} TrigFormat;

/**
 * Outcome of a single report row.
 */
typedef enum TrigCheckStatus {
  TRIG_CHECK_STATUS_PASS = 0,
  TRIG_CHECK_STATUS_FAIL = 1,
  TRIG_CHECK_STATUS_INFO = 2,
} TrigCheckStatus;

/**
 * Opaque verification report. Obtain from `trig_verify` and friends,
 * inspect through the `trig_report_*` accessors, release with
 * [`trig_report_free`].
 */
typedef struct TrigReport TrigReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version; static storage, do not free.
 */
const char *trig_version(void);

/**
 * Seed the command-line tool uses when none is given.
 */
uint64_t trig_default_seed(void);

/**
 * Human-readable name of a status code; static storage, do not free.
 */
const char *trig_status_name(enum TrigStatus status);

/**
 * Message for the most recent failure on this thread; static until the
 * next failing call, do not free. Empty string if nothing failed yet.
 */
const char *trig_last_error_message(void);

/**
 * Renders the mapping-class presentation for genus `g` into `*out`.
 *
 * # Safety
 * `out` must be valid for writes or NULL.
 */
enum TrigStatus trig_presentation_render(uint64_t g,
                                         enum TrigStyle style,
                                         enum TrigFormat format,
                                         char **out);

/**
 * Runs the relator/bridge/centrality verification suite at genus `g`.
 *
 * `checks` selects check families by name, comma-separated; NULL means all
 * of them. `seed` feeds the sampled quadratic-form spot checks; pass
 * [`trig_default_seed`] to reproduce the command-line tool.
 *
 * # Safety
 * `checks` must be NULL or a NUL-terminated string; `out` must be valid
 * for writes or NULL.
 */
enum TrigStatus trig_verify(uint64_t g, const char *checks, uint64_t seed, struct TrigReport **out);

/**
 * Vanishing-lattice report at genus `g`: block decomposition, radical,
 * Arf invariant.
 *
 * # Safety
 * `out` must be valid for writes or NULL.
 */
enum TrigStatus trig_lattice(uint64_t g, struct TrigReport **out);

/**
 * Monodromy-image order report at genus `g`. Guarded to small genus
 * unless `force` is set.
 *
 * # Safety
 * `out` must be valid for writes or NULL.
 */
enum TrigStatus trig_order(uint64_t g, bool force, struct TrigReport **out);

/**
 * Branch-curve numerology and dual-curve report at genus `g`.
 *
 * # Safety
 * `out` must be valid for writes or NULL.
 */
enum TrigStatus trig_plucker(uint64_t g, struct TrigReport **out);

/**
 * Maroni stratification report at genus `g`: one row per stratum plus the
 * cokernel pattern.
 *
 * # Safety
 * `out` must be valid for writes or NULL.
 */
enum TrigStatus trig_maroni(uint64_t g, struct TrigReport **out);

/**
 * Whether every non-info row passed.
 *
 * # Safety
 * `report` must come from this library and not be freed; `out` must be
 * valid for writes. Either may be NULL, which is reported.
 */
enum TrigStatus trig_report_passed(const struct TrigReport *report, bool *out);

/**
 * Number of rows in the report.
 *
 * # Safety
 * Same contract as [`trig_report_passed`].
 */
enum TrigStatus trig_report_check_count(const struct TrigReport *report, size_t *out);

/**
 * Name of row `index`; caller-owned string.
 *
 * # Safety
 * Same contract as [`trig_report_passed`].
 */
enum TrigStatus trig_report_check_name(const struct TrigReport *report, size_t index, char **out);

/**
 * Outcome of row `index`.
 *
 * # Safety
 * Same contract as [`trig_report_passed`].
 */
enum TrigStatus trig_report_check_status(const struct TrigReport *report,
                                         size_t index,
                                         enum TrigCheckStatus *out);

/**
 * Details of row `index` (possibly empty); caller-owned string.
 *
 * # Safety
 * Same contract as [`trig_report_passed`].
 */
enum TrigStatus trig_report_check_details(const struct TrigReport *report,
                                          size_t index,
                                          char **out);

/**
 * Full report rendered as the command-line text format; caller-owned.
 *
 * # Safety
 * Same contract as [`trig_report_passed`].
 */
enum TrigStatus trig_report_to_text(const struct TrigReport *report, char **out);

/**
 * Full report rendered as pretty-printed JSON; caller-owned.
 *
 * # Safety
 * Same contract as [`trig_report_passed`].
 */
enum TrigStatus trig_report_to_json(const struct TrigReport *report, char **out);

/**
 * Releases a report handle. NULL is a no-op.
 *
 * # Safety
 * `report` must come from this library and not already be freed.
 */
void trig_report_free(struct TrigReport *report);

/**
 * Releases a string produced by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must come from this library and not already be freed.
 */
void trig_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIGONAL_CAPI_H */
