#ifndef LML_H
#define LML_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result of every fallible call.
 */
typedef enum LmlStatus {
  LML_STATUS_OK = 0,
  /*
   The computation finished with a negative answer (reject, ambiguity,
   relator violation); the JSON output is still written.
   */
  LML_STATUS_NEGATIVE = 1,
  LML_STATUS_RESOURCE_LIMIT = 2,
  LML_STATUS_INVALID_INPUT = 3,
  LML_STATUS_NULL_POINTER = 4,
  LML_STATUS_PANIC = 5,
} LmlStatus;

/*
 A finite simple graph.
 */
typedef struct LmlGraph LmlGraph;

/*
 A group with its generating set `S` and presentation.
 */
typedef struct LmlGroup LmlGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 The message of the last failed call on this thread, or null. The
 pointer stays valid until the next failing call on the same thread.
 */
const char *lml_last_error(void);

/*
 Releases a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void lml_string_free(char *s);

/*
 The free group of the given rank on `x, y, z, ...`.

 # Safety
 `out` must be valid for writes.
 */
enum LmlStatus lml_group_new_free(size_t rank, struct LmlGroup **out);

/*
 `Z^d` with its standard generators.

 # Safety
 `out` must be valid for writes.
 */
enum LmlStatus lml_group_new_free_abelian(size_t d, struct LmlGroup **out);

/*
 `BS(m, n) = <a, b | a b^m a^-1 = b^n>`.

 # Safety
 `out` must be valid for writes.
 */
enum LmlStatus lml_group_new_baumslag_solitar(uint32_t m, uint32_t n, struct LmlGroup **out);

/*
 The finite group of a presentation file, acting on itself by coset
 enumeration. An `S` line in the file becomes the generating set.

 # Safety
 `text` must be a nul-terminated string and `out` valid for writes.
 */
enum LmlStatus lml_group_new_finite(const char *text, size_t max_cosets, struct LmlGroup **out);

/*
 Replaces `S` by the words of `gens`, written `w | w | ...`.

 # Safety
 `group` must be a live handle and `gens` a nul-terminated string.
 */
enum LmlStatus lml_group_set_generators(struct LmlGroup *group, const char *gens);

/*
 Uses `a, b, a^-1, b^-1, a^2, a^-2, ab, b^-1 a^-1, b^4, b^-4` as `S`.

 # Safety
 `group` must be a live handle.
 */
enum LmlStatus lml_group_use_bs_generators(struct LmlGroup *group);

/*
 Caps the vertices any single ball or search may create.

 # Safety
 `group` must be a live handle.
 */
enum LmlStatus lml_group_set_max_vertices(struct LmlGroup *group, size_t max_vertices);

/*
 `|S|`, or 0 for a null handle.

 # Safety
 `group` must be null or a live handle.
 */
size_t lml_group_generator_count(const struct LmlGroup *group);

/*
 # Safety
 `group` must be null or a handle not yet freed.
 */
void lml_group_free(struct LmlGroup *group);

/*
 Whether `word` is the identity.

 # Safety
 `group` must be a live handle, `word` a nul-terminated string and `out`
 valid for writes.
 */
enum LmlStatus lml_is_identity(const struct LmlGroup *group, const char *word, bool *out);

/*
 `d(e, word)` in the Cayley graph over `S`.

 # Safety
 `group` must be a live handle, `word` a nul-terminated string and `out`
 valid for writes.
 */
enum LmlStatus lml_distance(const struct LmlGroup *group, const char *word, size_t *out);

/*
 The ball `B(e, radius)` as JSON.

 # Safety
 `group` must be a live handle and `out_json` valid for writes.
 */
enum LmlStatus lml_ball_json(const struct LmlGroup *group, size_t radius, char **out_json);

/*
 The fixing-radius scan from `r` to `bound` as JSON.

 # Safety
 `group` must be a live handle and `out_json` valid for writes.
 */
enum LmlStatus lml_fixing_radius_json(const struct LmlGroup *group,
                                      size_t r,
                                      size_t bound,
                                      char **out_json);

/*
 Parses a graph file (`n m` then `m` edge lines).

 # Safety
 `text` must be a nul-terminated string and `out` valid for writes.
 */
enum LmlStatus lml_graph_parse(const char *text, struct LmlGraph **out);

/*
 The cycle `C_n`, `n >= 3`.

 # Safety
 `out` must be valid for writes.
 */
enum LmlStatus lml_graph_cycle(size_t n, struct LmlGraph **out);

/*
 The `w × h` torus grid.

 # Safety
 `out` must be valid for writes.
 */
enum LmlStatus lml_graph_torus(size_t w, size_t h, struct LmlGraph **out);

/*
 The `w × h` Klein-bottle grid.

 # Safety
 `out` must be valid for writes.
 */
enum LmlStatus lml_graph_klein(size_t w, size_t h, struct LmlGraph **out);

/*
 Vertex count, or 0 for a null handle.

 # Safety
 `graph` must be null or a live handle.
 */
size_t lml_graph_vertex_count(const struct LmlGraph *graph);

/*
 Edge count, or 0 for a null handle.

 # Safety
 `graph` must be null or a live handle.
 */
size_t lml_graph_edge_count(const struct LmlGraph *graph);

/*
 The graph in the graph file format.

 # Safety
 `graph` must be a live handle and `out` valid for writes.
 */
enum LmlStatus lml_graph_to_text(const struct LmlGraph *graph, char **out);

/*
 # Safety
 `graph` must be null or a handle not yet freed.
 */
void lml_graph_free(struct LmlGraph *graph);

/*
 Checks `graph` as a perfect finite `radius`-local model of the Cayley
 graph. Returns `Ok` on acceptance and `Negative` on rejection; the
 verdict JSON is written in both cases. `out_json` may be null.

 # Safety
 Handles must be live; `out_json` must be null or valid for writes.
 */
enum LmlStatus lml_verify(const struct LmlGroup *group,
                          const struct LmlGraph *graph,
                          size_t radius,
                          char **out_json);

/*
 Recovers a Schreier graph structure from `graph`. Returns `Ok` on
 success and `Negative` otherwise; the result JSON is written in both
 cases. `out_json` may be null.

 # Safety
 Handles must be live; `out_json` must be null or valid for writes.
 */
enum LmlStatus lml_reconstruct(const struct LmlGroup *group,
                               const struct LmlGraph *graph,
                               size_t radius,
                               char **out_json);

/*
 The witness report for `BS(m, n)` over the ten-element generating set,
 scanning transitive actions up to `max_degree`. Returns `Negative` when
 the witness survives some action.

 # Safety
 `out_json` must be valid for writes.
 */
enum LmlStatus lml_witness_json(uint32_t m, uint32_t n, size_t max_degree, char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LML_H */
