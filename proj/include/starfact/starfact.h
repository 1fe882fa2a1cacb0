/* C interface to the star factorization library.
 *
 * Every call returns an sf_status. On failure sf_last_error() describes the
 * problem for the calling thread. Strings returned through char** are owned
 * by the caller and released with sf_string_free. Large integers are
 * returned as decimal strings. */
#ifndef STARFACT_H
#define STARFACT_H

#include <stddef.h>

#if defined(STARFACT_BUILDING_LIBRARY)
#define SF_API __attribute__((visibility("default")))
#else
#define SF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_PARSE = 1,
  SF_ERR_INVALID_ARGUMENT = 2,
  SF_ERR_DOMAIN = 3,
  SF_ERR_BOUND = 4,
  SF_ERR_DEFECT = 5,
  SF_ERR_INTERNAL = 6
} sf_status;

typedef struct sf_perm sf_perm;
typedef struct sf_factorization sf_factorization;
typedef struct sf_poset sf_poset;

/* Receives one line of output. Return nonzero to continue, 0 to stop. */
typedef int (*sf_text_callback)(const char* text, void* user);

SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);
SF_API void sf_string_free(char* text);

/* Permutations. n = 0 infers the size from the largest element. */
SF_API sf_status sf_perm_parse(const char* text, int n, sf_perm** out);
SF_API void sf_perm_free(sf_perm* perm);
SF_API int sf_perm_size(const sf_perm* perm);
SF_API int sf_perm_cycle_count(const sf_perm* perm);
SF_API sf_status sf_perm_format(const sf_perm* perm, char** out);

/* Star factorizations "(k i1)(k i2)...". pivot_if_empty is used only for the
 * empty product. */
SF_API sf_status sf_factorization_parse(const char* text, int n, int pivot_if_empty, sf_factorization** out);
SF_API void sf_factorization_free(sf_factorization* delta);
SF_API int sf_factorization_pivot(const sf_factorization* delta);
SF_API size_t sf_factorization_length(const sf_factorization* delta);
SF_API sf_status sf_factorization_format(const sf_factorization* delta, char** out);

SF_API sf_status sf_count_factorizations(const sf_perm* perm, char** decimal);
SF_API sf_status sf_enumerate_factorizations(const sf_perm* perm, int pivot, sf_text_callback visit, void* user);
SF_API sf_status sf_verify(const sf_factorization* delta, const sf_perm* perm, int* valid);
SF_API sf_status sf_cycle_word(const sf_factorization* delta, const sf_perm* perm, char** word);

/* Necklace bijection. Preimages use "necklace=<word>;origin=<i>;d=<list>". */
SF_API sf_status sf_preimage(const sf_factorization* delta, const sf_perm* perm, char** preimage);
SF_API sf_status sf_from_preimage(const char* preimage, const sf_perm* perm, int pivot, sf_factorization** out);
SF_API sf_status sf_shift_preimage(const char* preimage, const sf_perm* perm, int pivot, int new_pivot,
                                   int inverse, char** out);
SF_API sf_status sf_repivot(const sf_factorization* delta, const sf_perm* perm, int new_pivot,
                            sf_factorization** out);

/* Labeled noncrossing partitions and necklaces of type "x1,x2,...". */
SF_API sf_status sf_lnc_count(const char* type, char** decimal);
SF_API sf_status sf_lnc_enumerate(const char* type, sf_text_callback visit, void* user);
SF_API sf_status sf_lncn_count(const char* type, char** decimal);
SF_API sf_status sf_lncn_enumerate(const char* type, sf_text_callback visit, void* user);

/* The poset Star(n). */
SF_API sf_status sf_leq(const sf_perm* lower, const sf_perm* upper, int* result);
SF_API sf_status sf_covers(const sf_perm* perm, int upward, sf_text_callback visit, void* user);
SF_API sf_status sf_poset_build(int n, sf_poset** out);
SF_API sf_status sf_poset_interval(const sf_perm* lower, const sf_perm* upper, sf_poset** out);
SF_API sf_status sf_poset_cover_star(const sf_perm* perm, int upward, sf_poset** out);
SF_API void sf_poset_free(sf_poset* poset);
SF_API size_t sf_poset_vertex_count(const sf_poset* poset);
SF_API size_t sf_poset_edge_count(const sf_poset* poset);
SF_API sf_status sf_poset_vertex(const sf_poset* poset, size_t index, char** out);
SF_API sf_status sf_poset_dot(const sf_poset* poset, char** out);
SF_API sf_status sf_poset_json(const sf_poset* poset, char** out);

/* Writes "NC(d1) x NC(d2) ..." to structure and 1/0 to pass. */
SF_API sf_status sf_interval_iso(const sf_perm* lower, const sf_perm* upper, char** structure, int* pass);
/* Writes the noncrossing type from Kreweras block sizes, "NC(b1) x ...". */
SF_API sf_status sf_interval_type(const sf_perm* lower, const sf_perm* upper, char** structure);
SF_API sf_status sf_is_boolean_interval(const sf_perm* lower, const sf_perm* upper, int* result);
SF_API sf_status sf_count_boolean_above(const sf_perm* perm, char** decimal);
SF_API sf_status sf_count_boolean_below(const sf_perm* perm, char** decimal);

/* Runs the oracle agreement suite; each report arrives as a JSON line. */
SF_API sf_status sf_selftest(int max_n, sf_text_callback on_report, void* user, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* STARFACT_H */
