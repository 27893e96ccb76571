#ifndef RATIONAL_TETRA_H
#define RATIONAL_TETRA_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RtStatus {
  RT_STATUS_OK = 0,
  RT_STATUS_NULL_POINTER = 1,
  RT_STATUS_INVALID_UTF8 = 2,
  RT_STATUS_PARSE = 3,
  RT_STATUS_INVALID_ARGUMENT = 4,
  RT_STATUS_NEGATIVE_LENGTH = 5,
  RT_STATUS_DEGENERATE = 6,
  RT_STATUS_POINT_AT_INFINITY = 7,
  RT_STATUS_PARALLEL_SLOPE = 8,
  RT_STATUS_VERIFICATION_FAILED = 9,
  RT_STATUS_INDEX_OUT_OF_RANGE = 10,
  RT_STATUS_PANIC = 11,
} RtStatus;

// Six edge lengths `d12, d13, d14, d23, d24, d34`.
typedef struct RtEdges RtEdges;

// A verified point on `y^2 = sign * CM`.
typedef struct RtPoint RtPoint;

// Sorted hits of an integer search.
typedef struct RtSearch RtSearch;

// Verdicts of a verification suite.
typedef struct RtVerdicts RtVerdicts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the
// next call into the library on the same thread.
const char *rt_last_error(void);

// Frees a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not be freed twice.
void rt_string_free(char *s);

// # Safety
// `edges` points to six NUL-terminated strings; `out` is writable.
enum RtStatus rt_edges_new(const char *const *edges, struct RtEdges **out);

// # Safety
// `edges` is null or came from this library.
void rt_edges_free(struct RtEdges *edges);

// `CM` of the tuple as a string.
//
// # Safety
// `edges` is a live handle; `out` is writable.
enum RtStatus rt_edges_cm(const struct RtEdges *edges, char **out);

// Realizability as a tetrahedron; `volume` is null unless it is rational.
//
// # Safety
// `edges` is a live handle; the out-pointers are writable.
enum RtStatus rt_edges_realizability(const struct RtEdges *edges,
                                     bool *realizable,
                                     bool *degenerate,
                                     char **volume);

// Point from `(a, b, c)` and `X`: on `y^2 = -CM`, or with `gaussian` on
// `y^2 = CM` with `y` in Q(i).
//
// # Safety
// `a`, `b`, `c` are strings, `x` points to four strings; `out` is writable.
enum RtStatus rt_point_from_parameters(const char *a,
                                       const char *b,
                                       const char *c,
                                       const char *const *x,
                                       bool gaussian,
                                       struct RtPoint **out);

// A known point `(edges, y)` on `y^2 = CM`, verified.
//
// # Safety
// `edges` is a live handle, `y` a string; `out` is writable.
enum RtStatus rt_point_seed(const struct RtEdges *edges, const char *y, struct RtPoint **out);

// Second point on the line of slope `t` through `seed`.
//
// # Safety
// `seed` is a live handle, `t` a string; `out` is writable.
enum RtStatus rt_point_descend(const struct RtPoint *seed, const char *t, struct RtPoint **out);

// `{"edges": [...], "y": "...", "sign": n}`.
//
// # Safety
// `point` is a live handle; `out` is writable.
enum RtStatus rt_point_to_json(const struct RtPoint *point, char **out);

// # Safety
// `point` is null or came from this library.
void rt_point_free(struct RtPoint *point);

// Triangle with rational sides and area from `(v, t)`, as JSON.
//
// # Safety
// `v`, `t` are strings; `out` is writable.
enum RtStatus rt_heron_point(const char *v, const char *t, char **out);

// Integer tuples with edges in `1..=max_edge` and square `CM`.
//
// # Safety
// `out` is writable.
enum RtStatus rt_search(int64_t max_edge,
                        bool include_degenerate,
                        bool canonical,
                        uintptr_t jobs,
                        struct RtSearch **out);

// # Safety
// `search` is a live handle or null (length 0).
uintptr_t rt_search_len(const struct RtSearch *search);

// Edges of hit `index` and its `y` as a decimal string.
//
// # Safety
// `search` is a live handle; `edges` has room for six values; `y` is writable.
enum RtStatus rt_search_hit(const struct RtSearch *search,
                            uintptr_t index,
                            int64_t *edges,
                            char **y);

// The hits in the CLI's CSV format.
//
// # Safety
// `search` is a live handle; `out` is writable.
enum RtStatus rt_search_to_csv(const struct RtSearch *search, char **out);

// # Safety
// `search` is null or came from this library.
void rt_search_free(struct RtSearch *search);

// Runs suite `name` (`cm`, `tetrahedroid`, `weddle`, `points` or `all`).
//
// # Safety
// `name` is a string; `out` is writable.
enum RtStatus rt_verify(const char *name, uint64_t seed, uintptr_t jobs, struct RtVerdicts **out);

// # Safety
// `verdicts` is a live handle or null (length 0).
uintptr_t rt_verdicts_len(const struct RtVerdicts *verdicts);

// Number of verdicts with status `fail`.
//
// # Safety
// `verdicts` is a live handle or null (count 0).
uintptr_t rt_verdicts_failures(const struct RtVerdicts *verdicts);

// The verdicts as a JSON array.
//
// # Safety
// `verdicts` is a live handle; `out` is writable.
enum RtStatus rt_verdicts_to_json(const struct RtVerdicts *verdicts, char **out);

// # Safety
// `verdicts` is null or came from this library.
void rt_verdicts_free(struct RtVerdicts *verdicts);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RATIONAL_TETRA_H */
