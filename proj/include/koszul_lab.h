#ifndef KOSZUL_LAB_H
#define KOSZUL_LAB_H

/* C interface to the Koszul verification toolkit. All functions return a
 * status code; koszul_last_error() holds a thread-local message for the most
 * recent failing call on the calling thread. Strings returned through
 * char** out parameters are heap-allocated and must be released with
 * koszul_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KOSZUL_API __declspec(dllexport)
#else
#define KOSZUL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handle for one semigroup configuration (n, d, optional puncture). */
typedef struct koszul_gamma koszul_gamma;

typedef enum koszul_status {
    KOSZUL_OK = 0,
    KOSZUL_INVALID_ARGUMENT = 1,
    KOSZUL_NOT_IN_SEMIGROUP = 2,
    KOSZUL_LIMIT_EXCEEDED = 3,
    KOSZUL_INTERNAL_ERROR = 4
} koszul_status;

/* Library version, static storage. */
KOSZUL_API const char* koszul_version(void);

/* Message for the last failing call on this thread; "" when none. The
 * pointer stays valid until the next library call on the same thread. */
KOSZUL_API const char* koszul_last_error(void);

/* puncture: n coordinates of the removed generator, or NULL for the full
 * Veronese configuration. */
KOSZUL_API koszul_status koszul_gamma_create(int32_t n, int32_t d, const int64_t* puncture,
                                             koszul_gamma** out);
KOSZUL_API void koszul_gamma_destroy(koszul_gamma* gamma);

/* Writes the classification name (for example "TWO_FULL_GOOD") into buf,
 * NUL-terminated. Fails with KOSZUL_INVALID_ARGUMENT when len is too small. */
KOSZUL_API koszul_status koszul_classification(const koszul_gamma* gamma, char* buf, size_t len);

/* Membership of lambda (n coordinates) in the punctured semigroup, or in the
 * full Veronese semigroup when use_full is nonzero. */
KOSZUL_API koszul_status koszul_member(const koszul_gamma* gamma, const int64_t* lambda,
                                       int32_t use_full, int32_t* out_member);

/* Multigraded Betti numbers at one lambda over the rationals: of the toric
 * ideal (reduced homology of the squarefree divisor complex in dimension i)
 * and of the residue field (reduced homology of the order complex in
 * dimension i - 2). */
KOSZUL_API koszul_status koszul_betti_ideal(const koszul_gamma* gamma, const int64_t* lambda,
                                            int32_t i, uint64_t* out_rank);
KOSZUL_API koszul_status koszul_betti_field(const koszul_gamma* gamma, const int64_t* lambda,
                                            int32_t i, uint64_t* out_rank);

/* Progress callback for long scans: done / total units. */
typedef void (*koszul_progress_fn)(uint64_t done, uint64_t total, void* user);

/* Runs one report command: points, member, two-full, min-chain, groebner,
 * betti-ideal, betti-field, koszul-scan, facet-lemmas, homology-lemma,
 * mv-scan. params_json is a JSON object (NULL means {}) with optional
 * members:
 *   lambda (array of ints or "1,2,3"), level, max_degree, max_links,
 *   min_level, max_level, nodes, form ("weak"|"strong"|"both"),
 *   field ("q"|"p:<prime>"), jobs, verify_oracles (bool),
 *   format ("json"|"csv"|"text").
 * Unknown members are rejected. gamma may be NULL only for homology-lemma.
 * progress may be NULL. *out_report receives the serialized report;
 * out_violations (optional) receives 1 when the report carries violation
 * records, else 0. */
KOSZUL_API koszul_status koszul_run(koszul_gamma* gamma, const char* command,
                                    const char* params_json, koszul_progress_fn progress,
                                    void* user, char** out_report, int32_t* out_violations);

KOSZUL_API void koszul_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
