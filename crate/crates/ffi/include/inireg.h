#ifndef INIREG_H
#define INIREG_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum IniregCommand {
  INIREG_COMMAND_INITIAL = 0,
  INIREG_COMMAND_BOUND = 1,
  INIREG_COMMAND_VERIFY = 2,
  INIREG_COMMAND_ORACLE_DEPTH = 3,
  INIREG_COMMAND_POLARIZE = 4,
  INIREG_COMMAND_REPORT = 5,
} IniregCommand;

typedef enum IniregStatus {
  INIREG_STATUS_OK = 0,
  INIREG_STATUS_NULL_ARGUMENT = 1,
  INIREG_STATUS_INVALID_UTF8 = 2,
  INIREG_STATUS_PARSE_ERROR = 3,
  INIREG_STATUS_UNKNOWN_FIXTURE = 4,
  INIREG_STATUS_UNIT_IDEAL = 5,
  INIREG_STATUS_SIZE_GUARD = 6,
  INIREG_STATUS_DEFECT = 7,
  INIREG_STATUS_UNAVAILABLE = 8,
  INIREG_STATUS_FAILED = 9,
  INIREG_STATUS_PANIC = 10,
} IniregStatus;

typedef enum IniregStrategy {
  INIREG_STRATEGY_GREEDY = 0,
  INIREG_STRATEGY_EXHAUSTIVE = 1,
} IniregStrategy;

/**
 * Parsed problem file.
 */
typedef struct IniregProblem IniregProblem;

/**
 * Result of running a command.
 */
typedef struct IniregReport IniregReport;

typedef struct IniregOptions {
  enum IniregStrategy strategy;
  uint32_t restarts;
  uint64_t seed;
  bool relaxed_degrees;
  bool polarize;
  bool oracle;
  bool force;
} IniregOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message on this thread, or null. The caller owns the
 * returned string and frees it with [`inireg_string_free`].
 */
char *inireg_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void inireg_string_free(char *s);

struct IniregOptions inireg_options_default(void);

/**
 * Parses a problem file.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum IniregStatus inireg_problem_parse(const char *text, struct IniregProblem **out);

/**
 * Loads a shipped example by name.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum IniregStatus inireg_problem_fixture(const char *name, struct IniregProblem **out);

/**
 * # Safety
 * `problem` must be null or a handle from this library, not yet freed.
 */
void inireg_problem_free(struct IniregProblem *problem);

/**
 * Runs `command`; `options` may be null for the defaults.
 *
 * # Safety
 * `problem` must be a live handle, `options` null or valid, `out` valid.
 */
enum IniregStatus inireg_run(const struct IniregProblem *problem,
                             enum IniregCommand command,
                             const struct IniregOptions *options,
                             struct IniregReport **out);

/**
 * # Safety
 * `report` must be null or a handle from this library, not yet freed.
 */
void inireg_report_free(struct IniregReport *report);

/**
 * Certified lower bound; `Unavailable` if the command produced none.
 *
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum IniregStatus inireg_report_bound(const struct IniregReport *report, uint64_t *out);

/**
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum IniregStatus inireg_report_oracle_depth(const struct IniregReport *report, uint64_t *out);

/**
 * # Safety
 * `report` must be a live handle and `out` a valid pointer.
 */
enum IniregStatus inireg_report_verified(const struct IniregReport *report, bool *out);

/**
 * The report as JSON (caller frees with [`inireg_string_free`]), or null.
 *
 * # Safety
 * `report` must be null or a live handle.
 */
char *inireg_report_json(const struct IniregReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INIREG_H */
