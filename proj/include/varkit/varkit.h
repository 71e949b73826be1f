/* varkit - exact computations with group representations, identities and
 * dimension subgroups. C interface of the shared library.
 *
 * Conventions:
 *   - every function returns a vk_status; VK_OK means success
 *   - on failure vk_last_error() describes the problem (thread-local)
 *   - strings returned through char** are malloc'd; release with
 *     vk_string_free
 *   - vk_rep is an opaque handle; release with vk_rep_free
 *
 * Reports are TSV text with '#'-prefixed headers; identical inputs produce
 * byte-identical reports.
 */
#ifndef VARKIT_H
#define VARKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef VARKIT_API
#if defined(__GNUC__) || defined(__clang__)
#define VARKIT_API __attribute__((visibility("default")))
#else
#define VARKIT_API
#endif
#endif

typedef enum vk_status {
  VK_OK = 0,
  VK_ERR_PARSE = 1,       /* malformed input text */
  VK_ERR_DOMAIN = 2,      /* wrong coefficient domain, modulus or shape */
  VK_ERR_UNSUPPORTED = 3, /* operation undefined for this domain */
  VK_ERR_CAP = 4,         /* configured resource limit exceeded */
  VK_ERR_INVALID = 5,     /* bad argument value */
  VK_ERR_NULL = 6         /* required pointer argument was NULL */
} vk_status;

VARKIT_API const char* vk_version(void);
VARKIT_API const char* vk_last_error(void);
VARKIT_API void vk_string_free(char* s);

/* Lowers a resource limit for this process; raising is refused. Names:
 * "group" (closure size), "degree" (multilinear degree), "assign"
 * (exhaustive-check assignments). Defaults come from VARKIT_MAX_GROUP,
 * VARKIT_MAX_DEGREE and VARKIT_MAX_ASSIGN. */
VARKIT_API vk_status vk_tighten_limit(const char* name, int64_t value);

/* Representation files: kind=matrix with field=Q|F<p>, dim=<n> and `gen`
 * rows, or kind=perm with degree=<n> and `gen` cycle lists. */
typedef struct vk_rep vk_rep;

VARKIT_API vk_status vk_rep_parse(const char* text, vk_rep** out);
VARKIT_API void vk_rep_free(vk_rep* rep);
VARKIT_API vk_status vk_rep_format(const vk_rep* rep, char** out);
VARKIT_API vk_status vk_rep_dim(const vk_rep* rep, int32_t* out);
VARKIT_API vk_status vk_rep_generator_count(const vk_rep* rep, int32_t* out);
VARKIT_API vk_status vk_rep_group_order(const vk_rep* rep, int64_t* out);
VARKIT_API vk_status vk_rep_triangular_product(const vk_rep* left, const vk_rep* right, vk_rep** out);

/* Magnus expansion of a free-group word into truncated power series; with
 * vk_magnus_test additionally decides membership in the n-th integral
 * dimension subgroup (= n-th lower central term). */
VARKIT_API vk_status vk_magnus_expand(const char* word, int32_t letters, int32_t cutoff, char** report);
VARKIT_API vk_status vk_magnus_test(const char* word, int32_t letters, int32_t cutoff, int32_t test_n,
                                    int32_t* in_dn, char** report);

/* Dimension-subgroup series D_n over Z, Q or F_p of the finite group
 * generated by the representation; with_gamma adds the lower central
 * series comparison columns. coeff is "Z", "Q" or "F<p>". */
VARKIT_API vk_status vk_dimsub_report(const vk_rep* group, const char* coeff, int32_t nmax,
                                      int32_t with_gamma, char** report);

/* Canonical basis of the multilinear identity space at the given degree,
 * for an explicit matrix algebra (kind=algebra file text) or for the
 * enveloping algebra of a representation. */
VARKIT_API vk_status vk_identities_of_algebra(const char* algebra_text, int32_t degree, char** report);
VARKIT_API vk_status vk_identities_of_rep(const vk_rep* rep, int32_t degree, char** report);

/* Exhaustive identity check over the finite group closure. spec is
 * "action:<element>" (group-algebra element, e.g. "(y1-1)(y2-1)") or
 * "poly:<polynomial>" (e.g. "x1*x2 - x2*x1"). *holds is 1 or 0; a witness
 * assignment is included in the report when the identity fails. */
VARKIT_API vk_status vk_check_identity(const vk_rep* rep, const char* spec, int32_t* holds, char** report);

/* Verbal ideal of KG generated by multilinear polynomial identities
 * (';'-separated list) and the induced dimension subgroup D_sigma. */
VARKIT_API vk_status vk_verbal_report(const vk_rep* group, const char* coeff, const char* generators,
                                      char** report);

#ifdef __cplusplus
}
#endif

#endif /* VARKIT_H */
