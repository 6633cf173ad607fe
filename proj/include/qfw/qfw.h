#ifndef QFW_QFW_H
#define QFW_QFW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every entry point. */
typedef enum {
  QFW_OK = 0,
  QFW_USAGE = 1,    /* bad command, wrong number of inputs, null argument */
  QFW_SCHEMA = 2,   /* input does not follow the document schema */
  QFW_INVALID = 3,  /* input is well-formed but fails a mathematical validator */
  QFW_INTERNAL = 4  /* an internal consistency check failed */
} qfw_status;

/* Overall verdict of a report. */
typedef enum { QFW_YES = 0, QFW_NO = 1, QFW_VACUOUS = 2, QFW_INCONSISTENT = 3 } qfw_verdict;

typedef struct qfw_context qfw_context;

qfw_context* qfw_context_new(uint64_t seed);
void qfw_context_free(qfw_context* ctx);
void qfw_context_set_depth(qfw_context* ctx, size_t depth);

/* Message of the last failed call on ctx; valid until the next call. */
const char* qfw_last_error(const qfw_context* ctx);

/* Runs a subcommand on n_inputs JSON documents. On QFW_OK, *report_json
   receives the serialized report (release with qfw_string_free) and *verdict
   its overall verdict. */
qfw_status qfw_run_command(qfw_context* ctx, const char* command, const char* const* inputs, size_t n_inputs,
                           char** report_json, qfw_verdict* verdict);

/* Re-checks every certificate in a report or report bundle. *ok is 1 when all
   pass. */
qfw_status qfw_verify_report(qfw_context* ctx, const char* report_json, int* ok);

/* Runs the fixture corpus found in fixtures_dir. *report_json receives the
   bundle, *failures the number of fixtures that did not pass. */
qfw_status qfw_run_battery(qfw_context* ctx, const char* fixtures_dir, char** report_json, size_t* failures);

/* Writes the built-in corpus as fixture files below out_dir. */
qfw_status qfw_export_fixtures(qfw_context* ctx, const char* out_dir);

void qfw_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
