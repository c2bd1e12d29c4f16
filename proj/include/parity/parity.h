/* C interface to the parity functional-equation engine. */
#ifndef PARITY_PARITY_H
#define PARITY_PARITY_H

#include <stdint.h>

#if defined(PARITY_BUILDING_LIBRARY)
#define PARITY_API __attribute__((visibility("default")))
#else
#define PARITY_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct parity_engine parity_engine;

typedef enum parity_status {
    PARITY_OK = 0,
    PARITY_INVALID_ARGUMENT = 1,
    PARITY_PARSE = 2,
    PARITY_DOMAIN = 3,
    PARITY_DIVERGENT = 4,
    PARITY_UNSUPPORTED = 5,
    PARITY_PRECISION = 6,
    PARITY_IO = 7,
    PARITY_VERIFY_FAILED = 8,
    PARITY_INTERNAL = 9
} parity_status;

typedef enum parity_format { PARITY_FORMAT_TEXT = 0, PARITY_FORMAT_LATEX = 1, PARITY_FORMAT_JSON = 2 } parity_format;

typedef enum parity_form { PARITY_FORM_CANONICAL = 0, PARITY_FORM_COMPACT = 1 } parity_form;

typedef struct parity_verify_options {
    int samples;       /* sample points per index, >= 1 */
    double tolerance;  /* > 0 */
    unsigned digits;   /* working precision, >= 30 */
    uint64_t seed;
} parity_verify_options;

/* samples 3, tolerance 1e-10, 50 digits */
PARITY_API parity_verify_options parity_verify_defaults(void);

/* cache_dir may be NULL (no cache) or "" (default directory, PARITY_CACHE_DIR overrides). */
PARITY_API parity_status parity_engine_create(const char* cache_dir, parity_engine** out);
PARITY_API void parity_engine_destroy(parity_engine* engine);

/* Message of the last failing call on this thread; never NULL. */
PARITY_API const char* parity_last_error(void);
PARITY_API const char* parity_status_name(parity_status status);
PARITY_API const char* parity_version(void);

/* Every *out string is allocated by the library and released with parity_string_free. */
PARITY_API void parity_string_free(char* s);

/* index is "n1,n2,...", n1 pairing with the smallest summation variable.
   log_basis != 0 expands ber factors into powers of log and zeta(2). */
PARITY_API parity_status parity_feq(parity_engine* engine, const char* index, parity_form form, parity_format format,
                                    int log_basis, char** out);

/* Numeric check of one equation; PARITY_VERIFY_FAILED when the error exceeds the tolerance (the report is still written). */
PARITY_API parity_status parity_verify(parity_engine* engine, const char* index, const parity_verify_options* options,
                                       parity_format format, char** out);

/* Every index of weight <= max_weight; PARITY_VERIFY_FAILED when any index fails. */
PARITY_API parity_status parity_verify_all(parity_engine* engine, int max_weight, const parity_verify_options* options,
                                           parity_format format, char** out);

/* roots is "k1/N1,k2/N2,..."; the last pair (n_d, root) must not be (1, 1).
   closed_form != 0 adds the closed reduction when one applies. */
PARITY_API parity_status parity_reduce(parity_engine* engine, const char* index, const char* roots, int closed_form,
                                       parity_format format, char** out);

/* All canonical equations of weight <= max_weight, ordered by weight then index. */
PARITY_API parity_status parity_table(parity_engine* engine, int max_weight, parity_format format, char** out);

/* B_n as "p/q"; with polynomial != 0 the coefficients of B_n(x), lowest degree first. */
PARITY_API parity_status parity_bernoulli(int n, int polynomial, parity_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
