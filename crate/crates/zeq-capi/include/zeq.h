/* C interface for the zeq digraph zeta library.
 *
 * Maintained by hand alongside crates/zeq-capi/src/lib.rs.
 *
 * Conventions:
 *   - every fallible call returns a ZeqStatus and writes results through
 *     out parameters, which are left null or untouched on failure;
 *   - strings returned by the library are NUL-terminated, owned by the
 *     caller, and released with zeq_string_free;
 *   - digraph handles are opaque and released with zeq_digraph_free.
 *
 * Digraph text format: first line "n <N>", then one "u v" line per edge
 * with 1-based vertex numbers; repeated lines raise multiplicity.
 */

#ifndef ZEQ_H
#define ZEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ZeqStatus {
  ZEQ_STATUS_OK = 0,
  ZEQ_STATUS_NULL_ARGUMENT = 1,
  ZEQ_STATUS_INVALID_UTF8 = 2,
  ZEQ_STATUS_PARSE_ERROR = 3,
  ZEQ_STATUS_GRAPH_ERROR = 4,
  ZEQ_STATUS_INTERNAL = 5,
} ZeqStatus;

typedef enum ZeqEtaVariant {
  /* Five-variable digraph polynomial. */
  ZEQ_ETA_VARIANT_ETA = 0,
  /* Two-variable graph polynomial; the digraph must be symmetric. */
  ZEQ_ETA_VARIANT_ETA_BAR = 1,
  /* Completed polynomial with the all-ones perturbation. */
  ZEQ_ETA_VARIANT_ETA_COMPLETE = 2,
} ZeqEtaVariant;

typedef enum ZeqMode {
  ZEQ_MODE_DIGRAPH = 0,
  ZEQ_MODE_GRAPH = 1,
} ZeqMode;

/* Opaque digraph handle. */
typedef struct ZeqDigraph ZeqDigraph;

/* Library version as a static NUL-terminated string; do not free. */
const char *zeq_version(void);

/* Parses edge-list text into a new digraph handle. */
ZeqStatus zeq_digraph_parse(const char *text, ZeqDigraph **out);

/* Releases a digraph handle; a null pointer is ignored. */
void zeq_digraph_free(ZeqDigraph *g);

/* Writes the vertex count of a digraph. */
ZeqStatus zeq_digraph_vertex_count(const ZeqDigraph *g, size_t *n);

/* Prints a digraph back to edge-list text. */
ZeqStatus zeq_digraph_format(const ZeqDigraph *g, char **out);

/* Computes a characteristic polynomial in canonical text form. */
ZeqStatus zeq_eta(const ZeqDigraph *g, ZeqEtaVariant variant, char **out);

/* Decides zeta-equivalence of two digraphs; writes 1 or 0. */
ZeqStatus zeq_equivalent(const ZeqDigraph *a, const ZeqDigraph *b,
                         ZeqMode mode, int *out);

/* Releases a string returned by this library; a null pointer is ignored. */
void zeq_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* ZEQ_H */
