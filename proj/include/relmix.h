/*
 * relmix C API: exact lattice and relative mixed volumes of lattice
 * polyhedra whose recession cone is the positive orthant.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return RELMIX_OK on success; on failure a status code is
 * returned and relmix_last_error() describes the problem (thread-local,
 * valid until the next failing call on the same thread).
 *
 * Volumes and mixed volumes are arbitrary-precision integers and are
 * returned as decimal strings. Every char* output parameter receives a
 * newly allocated string that the caller releases with relmix_string_free().
 */

#ifndef RELMIX_H
#define RELMIX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RELMIX_API __declspec(dllexport)
#else
#define RELMIX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relmix_status {
  RELMIX_OK = 0,
  /* invalid document or argument (parse failure, invariant violation,
     dimension mismatch, unbounded complement, ...) */
  RELMIX_ERR_INPUT = 2,
  /* enumeration search space exceeds the cap */
  RELMIX_ERR_SEARCH_TOO_LARGE = 3,
  /* the two mixed-volume algorithms disagreed */
  RELMIX_ERR_ORACLE_MISMATCH = 4,
  /* a verified identity failed on concrete data */
  RELMIX_ERR_PROPERTY_VIOLATION = 5,
  /* null handle or output pointer */
  RELMIX_ERR_NULL_ARGUMENT = 6,
  /* unexpected internal failure */
  RELMIX_ERR_INTERNAL = 7
} relmix_status;

typedef enum relmix_method {
  RELMIX_METHOD_BOTH = 0,    /* run both algorithms, fail on disagreement */
  RELMIX_METHOD_IE = 1,      /* inclusion-exclusion */
  RELMIX_METHOD_SUPPORT = 2  /* support-function formula */
} relmix_method;

/* A lattice polyhedron conv(generators) + positive orthant. */
typedef struct relmix_poly relmix_poly;
/* An ordered tuple of n such polyhedra in dimension n. */
typedef struct relmix_tuple relmix_tuple;
/* Result of a minimal-tuple enumeration. */
typedef struct relmix_classes relmix_classes;

RELMIX_API const char* relmix_version(void);

/* Message for the most recent failure on this thread ("" if none). */
RELMIX_API const char* relmix_last_error(void);

RELMIX_API void relmix_string_free(char* s);

/* ---- polyhedra ---- */

/* Parses {"dim": n, "generators": [[...], ...]}. */
RELMIX_API relmix_status relmix_poly_parse(const char* json_text,
                                           relmix_poly** out);

/* Builds from a flat row-major coordinate array (count rows of dim each). */
RELMIX_API relmix_status relmix_poly_create(int dim, const long long* coords,
                                            size_t count, relmix_poly** out);

RELMIX_API void relmix_poly_free(relmix_poly* p);

RELMIX_API int relmix_poly_dim(const relmix_poly* p);

/* Canonical document (generators in canonical order). */
RELMIX_API relmix_status relmix_poly_to_json(const relmix_poly* p, char** out);

/* Lattice volume of C \ B as a decimal string. */
RELMIX_API relmix_status relmix_poly_complement_volume(const relmix_poly* p,
                                                       char** out);

/* ---- tuples ---- */

/* Parses {"dim": n, "polyhedra": [{"generators": [...]}, ...]}. */
RELMIX_API relmix_status relmix_tuple_parse(const char* json_text,
                                            relmix_tuple** out);

RELMIX_API void relmix_tuple_free(relmix_tuple* t);

RELMIX_API int relmix_tuple_dim(const relmix_tuple* t);

RELMIX_API relmix_status relmix_tuple_to_json(const relmix_tuple* t,
                                              char** out);

/* Relative mixed volume as a decimal string. */
RELMIX_API relmix_status relmix_tuple_rmv(const relmix_tuple* t,
                                          relmix_method method, char** out);

/* Line-oriented `key: value` classification report (rmv, interlacing,
 * volume-one certificate, minimality). */
RELMIX_API relmix_status relmix_tuple_classify(const relmix_tuple* t,
                                               char** out);

/* ---- enumeration of minimal tuples ---- */

RELMIX_API relmix_status relmix_enumerate_minimal(int dim, int volume,
                                                  uint64_t cap, int jobs,
                                                  relmix_classes** out);

RELMIX_API void relmix_classes_free(relmix_classes* c);

RELMIX_API size_t relmix_classes_count(const relmix_classes* c);

/* Canonical tuple document of class `index`. */
RELMIX_API relmix_status relmix_classes_tuple_json(const relmix_classes* c,
                                                   size_t index, char** out);

/* 16-hex-digit hash of the canonical document. */
RELMIX_API relmix_status relmix_classes_hash(const relmix_classes* c,
                                             size_t index, char** out);

/* Relative mixed volume of the class, as a decimal string. */
RELMIX_API relmix_status relmix_classes_rmv(const relmix_classes* c,
                                            size_t index, char** out);

/* ---- verification suites ---- */

/* suite is one of "v1", "int", "lemma3", "stability". The report is returned
 * even on RELMIX_ERR_PROPERTY_VIOLATION (which signals failures > 0). */
RELMIX_API relmix_status relmix_verify(const char* suite, int dim, int bound,
                                       char** out_report);

/* ---- rendering ---- */

/* Deterministic SVG overlay of 2-dimensional polyhedra. */
RELMIX_API relmix_status relmix_render_svg(const relmix_poly* const* polys,
                                           size_t count, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RELMIX_H */
