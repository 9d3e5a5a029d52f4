/* C interface for the cellkit cell-classification library.
 *
 * Conventions:
 *   - Every function returns a CELLKIT_* status code.
 *   - Results are UTF-8 JSON strings written through an out-parameter,
 *     allocated by the library and released with cellkit_string_free().
 *   - cellkit_last_error() describes the most recent failure on the
 *     calling thread; the pointer stays owned by the library.
 *   - Handles are opaque and released with their matching _free function.
 */

#ifndef CELLKIT_H
#define CELLKIT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CELLKIT_OK 0
#define CELLKIT_ERR_INVALID_ARGUMENT 1
#define CELLKIT_ERR_COMPUTE 2
#define CELLKIT_ERR_NULL_POINTER 3
#define CELLKIT_ERR_UTF8 4
#define CELLKIT_ERR_PANIC 5

/* Family selector: j needs odd n, i and i-tilde need even n. */
#define CELLKIT_KIND_J 0
#define CELLKIT_KIND_I 1
#define CELLKIT_KIND_I_TILDE 2

/* Weight selector for cellkit_hecke_new. */
#define CELLKIT_WEIGHT_EQUAL 0
#define CELLKIT_WEIGHT_UNEQUAL 1

/* Group selector for cellkit_hecke_cells_json. */
#define CELLKIT_GROUP_B 0
#define CELLKIT_GROUP_D 1

typedef struct CellkitHecke CellkitHecke;

/* Most recent failure message for this thread. Never free this pointer;
 * it is invalidated by the next failing call on the same thread. */
const char *cellkit_last_error(void);

/* Releases a string returned through any out_json parameter. Accepts
 * NULL. */
void cellkit_string_free(char *s);

/* Lists the coset-matrix family for (n, d, kind) with representative
 * window, reduced word, length and shape per matrix. */
int cellkit_enumerate_json(size_t n, size_t d, int kind, char **out_json);

/* Two-sided classification of the family, keyed by special partitions. */
int cellkit_classify_json(size_t n, size_t d, int kind, char **out_json);

/* Shape invariant, representative and length of one matrix. rows_json is
 * a JSON array of rows, e.g. "[[2,1,1],[2,3,2],[1,1,2]]". */
int cellkit_sigma_json(const char *rows_json, int kind, char **out_json);

/* Symbol attached to a signed permutation given by its window, e.g.
 * "[-1,-2]". */
int cellkit_sym_json(const char *window_json, char **out_json);

/* Builds the rank-d algebra with its canonical basis. Rank is capped at
 * 4. On success *out_handle owns the algebra. */
int cellkit_hecke_new(size_t d, int weight, CellkitHecke **out_handle);

/* Releases a handle from cellkit_hecke_new. Accepts NULL. */
void cellkit_hecke_free(CellkitHecke *h);

/* Left/right/two-sided cells of the algebra (CELLKIT_GROUP_B) or of its
 * index-two subalgebra (CELLKIT_GROUP_D; unequal weight only), with
 * elements rendered as reduced words. */
int cellkit_hecke_cells_json(const CellkitHecke *h, int group,
                             char **out_json);

/* Product of two canonical basis elements, expanded over the canonical
 * basis. Words look like "s0 s1"; "e" is the identity. */
int cellkit_hecke_product_json(const CellkitHecke *h, const char *x_word,
                               const char *y_word, char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* CELLKIT_H */
