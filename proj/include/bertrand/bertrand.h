/*
 * C interface to the bertrand certification library.
 *
 * All functions return a bp_status. On failure the context (when one is
 * passed) keeps a message retrievable with bp_context_last_error().
 * Reports are opaque; release them with bp_report_destroy().
 */
#ifndef BERTRAND_BERTRAND_H
#define BERTRAND_BERTRAND_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define BP_API __declspec(dllexport)
#else
#  define BP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bp_status {
    BP_OK = 0,
    BP_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown id, malformed input */
    BP_ERR_DOMAIN = 2,           /* argument outside the function's domain */
    BP_ERR_RANGE = 3,            /* n below a check's stated minimum, or bad range */
    BP_ERR_POSTULATE_VIOLATED = 4,
    BP_ERR_NOT_CERTIFIED = 5,    /* certified evaluation could not decide */
    BP_ERR_OVERFLOW = 6,
    BP_ERR_BUFFER_TOO_SMALL = 7,
    BP_ERR_IO = 8,
    BP_ERR_INTERNAL = 9
} bp_status;

typedef enum bp_verdict {
    BP_VERDICT_NONE = 0, /* value-only row */
    BP_VERDICT_CERTAIN_PASS = 1,
    BP_VERDICT_CERTAIN_FAIL = 2,
    BP_VERDICT_INDETERMINATE = 3,
    BP_VERDICT_EXACT_PASS = 4
} bp_verdict;

typedef enum bp_outcome { BP_OUTCOME_PASS = 0, BP_OUTCOME_FAIL = 1, BP_OUTCOME_INDETERMINATE = 2 } bp_outcome;

typedef enum bp_format { BP_FORMAT_TEXT = 0, BP_FORMAT_CSV = 1 } bp_format;

typedef enum bp_function {
    BP_FN_THETA = 0,
    BP_FN_PSI = 1,
    BP_FN_PSI_FROM_THETA = 2,
    BP_FN_LOG_FACTORIAL = 3,
    BP_FN_BINOMIAL = 4
} bp_function;

typedef struct bp_certified {
    double value;
    double err; /* true value lies in [value - err, value + err] */
} bp_certified;

typedef struct bp_row {
    const char* check_id; /* owned by the report */
    uint64_t n;
    bp_certified lhs;
    bp_certified rhs;
    int has_rhs;
    bp_verdict verdict;
    double margin;
} bp_row;

typedef struct bp_context bp_context;
typedef struct bp_report bp_report;

BP_API const char* bp_status_string(bp_status status);

BP_API bp_status bp_context_create(bp_context** out);
BP_API void bp_context_destroy(bp_context* ctx);
/* 0 threads = all hardware threads. */
BP_API bp_status bp_context_set_threads(bp_context* ctx, unsigned threads);
BP_API bp_status bp_context_set_segment_bytes(bp_context* ctx, uint64_t bytes);
BP_API bp_status bp_context_set_exact_cap(bp_context* ctx, uint64_t cap);
BP_API const char* bp_context_last_error(const bp_context* ctx);

/* Values. */
BP_API bp_status bp_is_prime(uint64_t k, int* out);
BP_API bp_status bp_next_prime_after(bp_context* ctx, uint64_t k, uint64_t* out);
BP_API bp_status bp_prime_count(bp_context* ctx, uint64_t limit, uint64_t* out);
BP_API bp_status bp_log_nat(uint64_t k, bp_certified* out);
BP_API bp_status bp_theta(bp_context* ctx, double x, bp_certified* out);
BP_API bp_status bp_psi(bp_context* ctx, double x, bp_certified* out);
BP_API bp_status bp_psi_from_theta(bp_context* ctx, double x, bp_certified* out);
BP_API bp_status bp_log_factorial(bp_context* ctx, uint64_t k, bp_certified* out);
/*
 * log N_n into *log_out. When n <= exact cap and digits is non-null, writes
 * the decimal expansion of N_n (NUL-terminated) and its length to
 * *digits_len; *digits_len is 0 above the cap. Returns
 * BP_ERR_BUFFER_TOO_SMALL with the required length when the buffer is short.
 */
BP_API bp_status bp_central_binomial(bp_context* ctx, uint64_t n, bp_certified* log_out, char* digits,
                                     size_t digits_capacity, size_t* digits_len);
BP_API bp_status bp_threshold(uint64_t* n_out, bp_certified* at_n, bp_certified* at_next);
BP_API bp_status bp_bertrand_witness(bp_context* ctx, uint64_t n, uint64_t* p_out);

/* Reports. */
BP_API bp_status bp_run_value(bp_context* ctx, bp_function fn, double x, bp_report** out);
BP_API bp_status bp_run_identity(bp_context* ctx, const char* check_id, uint64_t from, uint64_t to,
                                 bp_report** out);
BP_API bp_status bp_run_inequality(bp_context* ctx, const char* check_id, uint64_t from, uint64_t to,
                                   bp_report** out);
BP_API bp_status bp_run_induction(bp_context* ctx, uint64_t n_max, bp_report** out);
BP_API bp_status bp_run_threshold(bp_context* ctx, bp_report** out);
BP_API bp_status bp_run_bertrand(bp_context* ctx, uint64_t n, bp_report** out);
BP_API bp_status bp_run_bertrand_scan(bp_context* ctx, uint64_t n_max, bp_report** out);
BP_API bp_status bp_run_verify_all(bp_context* ctx, uint64_t n_max, bp_report** out);

BP_API void bp_report_destroy(bp_report* report);
BP_API bp_outcome bp_report_outcome(const bp_report* report);
BP_API size_t bp_report_row_count(const bp_report* report);
BP_API bp_status bp_report_row(const bp_report* report, size_t index, bp_row* out);
BP_API size_t bp_report_note_count(const bp_report* report);
BP_API const char* bp_report_note(const bp_report* report, size_t index);
/* Rendered text stays valid until the report is destroyed. */
BP_API bp_status bp_report_render(bp_report* report, bp_format format, const char** text, size_t* length);
/* path == NULL writes to standard output. */
BP_API bp_status bp_report_write(const bp_report* report, bp_format format, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* BERTRAND_BERTRAND_H */
