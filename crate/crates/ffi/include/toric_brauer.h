#ifndef TORIC_BRAUER_H
#define TORIC_BRAUER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Groups of a [`TbReport`].
 */
typedef enum TbGroup {
  TB_GROUP_CLASS_GROUP = 0,
  TB_GROUP_PICARD = 1,
  TB_GROUP_RELATIVE_BRAUER = 2,
  TB_GROUP_DESING_BRAUER = 3,
  TB_GROUP_H2 = 4,
} TbGroup;

typedef enum TbStatus {
  TB_STATUS_OK = 0,
  TB_STATUS_NULL_ARGUMENT = 1,
  TB_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed fan document.
   */
  TB_STATUS_SYNTAX = 3,
  /**
   * Well-formed document describing an invalid fan.
   */
  TB_STATUS_INVALID_FAN = 4,
  TB_STATUS_UNKNOWN_GENERATOR = 5,
  TB_STATUS_BAD_PARAMETERS = 6,
  /**
   * Nonzero Čech compositions; indicates a library bug.
   */
  TB_STATUS_INCONSISTENT = 7,
  /**
   * Index past the end, or a value that does not fit the output type.
   */
  TB_STATUS_OUT_OF_RANGE = 8,
  TB_STATUS_PANIC = 9,
} TbStatus;

typedef struct TbFan TbFan;

typedef struct TbReport TbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *tb_last_error(void);

/**
 * # Safety
 * `s` is null or a string returned by this library that was not yet freed.
 */
void tb_string_free(char *s);

/**
 * Parses and validates a fan document. Non-primitive rays are divided by
 * their gcd when `normalize_rays` is true.
 *
 * # Safety
 * `json` is a NUL-terminated string and `out` is writable.
 */
enum TbStatus tb_fan_parse(const char *json, bool normalize_rays, struct TbFan **out);

/**
 * Builds a named standard fan, e.g. `"projective"` with `{2}`.
 *
 * # Safety
 * `name` is a NUL-terminated string, `params` points to `n_params` values
 * (or is null when `n_params` is 0) and `out` is writable.
 */
enum TbStatus tb_fan_generate(const char *name,
                              const int64_t *params,
                              size_t n_params,
                              struct TbFan **out);

/**
 * # Safety
 * `fan` is null or a handle from this library that was not yet freed.
 */
void tb_fan_free(struct TbFan *fan);

/**
 * # Safety
 * `fan` is a live handle.
 */
size_t tb_fan_rank(const struct TbFan *fan);

/**
 * # Safety
 * `fan` is a live handle.
 */
size_t tb_fan_ray_count(const struct TbFan *fan);

/**
 * # Safety
 * `fan` is a live handle.
 */
size_t tb_fan_cone_count(const struct TbFan *fan);

/**
 * Writes the fan in the fan file format.
 *
 * # Safety
 * `fan` is a live handle and `out` is writable.
 */
enum TbStatus tb_fan_to_json(const struct TbFan *fan, char **out);

/**
 * Checks a fan document without rejecting it. `*violations` receives the
 * number of violations and `*report` one finding per line. A malformed
 * document fails with [`TbStatus::Syntax`].
 *
 * # Safety
 * `json` is a NUL-terminated string; `violations` and `report` are writable.
 */
enum TbStatus tb_validate(const char *json, bool normalize_rays, size_t *violations, char **report);

/**
 * Computes every group of the fan.
 *
 * # Safety
 * `fan` is a live handle and `out` is writable.
 */
enum TbStatus tb_report_compute(const struct TbFan *fan, struct TbReport **out);

/**
 * # Safety
 * `report` is null or a handle from this library that was not yet freed.
 */
void tb_report_free(struct TbReport *report);

/**
 * Rank of the unit characters.
 *
 * # Safety
 * `report` is a live handle.
 */
size_t tb_report_units_rank(const struct TbReport *report);

/**
 * Free rank of a group.
 *
 * # Safety
 * `report` is a live handle.
 */
size_t tb_report_group_rank(const struct TbReport *report, enum TbGroup group);

/**
 * Number of `Q/Z` summands of a group (always 0 for Cl, Pic and the
 * relative Brauer group).
 *
 * # Safety
 * `report` is a live handle.
 */
size_t tb_report_group_qz(const struct TbReport *report, enum TbGroup group);

/**
 * Length of the torsion chain `t₁ | t₂ | …` of a group.
 *
 * # Safety
 * `report` is a live handle.
 */
size_t tb_report_group_torsion_len(const struct TbReport *report, enum TbGroup group);

/**
 * Torsion coefficient `index` of a group. Fails with
 * [`TbStatus::OutOfRange`] past the end or when the value exceeds `i64`;
 * [`tb_report_group_torsion_string`] has no size limit.
 *
 * # Safety
 * `report` is a live handle and `out` is writable.
 */
enum TbStatus tb_report_group_torsion(const struct TbReport *report,
                                      enum TbGroup group,
                                      size_t index,
                                      int64_t *out);

/**
 * Torsion coefficient `index` of a group in decimal.
 *
 * # Safety
 * `report` is a live handle and `out` is writable.
 */
enum TbStatus tb_report_group_torsion_string(const struct TbReport *report,
                                             enum TbGroup group,
                                             size_t index,
                                             char **out);

/**
 * A group in text notation, e.g. `"Z (+) Z/2"`.
 *
 * # Safety
 * `report` is a live handle and `out` is writable.
 */
enum TbStatus tb_report_group_to_string(const struct TbReport *report,
                                        enum TbGroup group,
                                        char **out);

/**
 * The full report as the command-line tool prints it with
 * `--format structured`.
 *
 * # Safety
 * `report` is a live handle and `out` is writable.
 */
enum TbStatus tb_report_to_json(const struct TbReport *report, char **out);

/**
 * The full report in the command-line tool's text layout.
 *
 * # Safety
 * `report` is a live handle and `out` is writable.
 */
enum TbStatus tb_report_to_text(const struct TbReport *report, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORIC_BRAUER_H */
