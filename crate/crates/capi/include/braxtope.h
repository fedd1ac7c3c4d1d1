#pragma once

/* Generated by cbindgen from the Rust sources; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every C-ABI call.
typedef enum BraxStatus {
  BRAX_STATUS_OK = 0,
  // A parameter violates a precondition (bad d/n/r, unknown suite).
  BRAX_STATUS_INVALID_ARGUMENT = 1,
  // Construction failed on otherwise plausible input.
  BRAX_STATUS_CONSTRUCTION_FAILED = 2,
  // A verification check failed; the report buffer still holds details.
  BRAX_STATUS_CHECK_FAILED = 3,
  BRAX_STATUS_NULL_POINTER = 4,
  // Buffer too small; `written` holds the required size.
  BRAX_STATUS_BUFFER_TOO_SMALL = 5,
  BRAX_STATUS_INTERNAL_ERROR = 6,
} BraxStatus;

// Family kinds accepted by brax_family_to_json.
typedef enum BraxKind {
  BRAX_KIND_BRAXTOPE = 0,
  BRAX_KIND_MULTIPLEX = 1,
  BRAX_KIND_CYCLIC = 2,
  BRAX_KIND_RD_BRAXTOPE = 3,
} BraxKind;

// Opaque facet family handle.
typedef struct BraxFamily BraxFamily;

// Opaque face lattice handle.
typedef struct BraxLattice BraxLattice;

// Opaque exact realization handle.
typedef struct BraxRealization BraxRealization;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Retrieve the message for the most recent failure on this thread.
//
// # Safety
// `buffer` must point to `capacity` writable bytes (or be null to
// size), and `written` must be a valid pointer.
enum BraxStatus brax_last_error_message(char *buffer, uintptr_t capacity, uintptr_t *written);

// Facet family of the braxtope Q^{d,n}.
//
// # Safety
// `out` must be a valid pointer; the result must be released with
// brax_family_free.
enum BraxStatus brax_family_braxtope(uint32_t d, uint32_t n, struct BraxFamily **out);

// Facet family of the d-multiplex on n+1 vertices.
//
// # Safety
// As for brax_family_braxtope.
enum BraxStatus brax_family_multiplex(uint32_t d, uint32_t n, struct BraxFamily **out);

// Facet family of the cyclic d-polytope on n+1 vertices.
//
// # Safety
// As for brax_family_braxtope.
enum BraxStatus brax_family_cyclic(uint32_t d, uint32_t n, struct BraxFamily **out);

// Facet family of the (r,d)-braxtope on n+1 vertices.
//
// # Safety
// As for brax_family_braxtope.
enum BraxStatus brax_family_rd_braxtope(uint32_t r,
                                        uint32_t d,
                                        uint32_t n,
                                        struct BraxFamily **out);

// Number of facets in the family.
//
// # Safety
// `family` must be a live handle and `out` a valid pointer.
enum BraxStatus brax_family_facet_count(const struct BraxFamily *family, uintptr_t *out);

// Copy the vertex indices of facet `index` (ascending) into `buffer`.
//
// # Safety
// `family` must be a live handle; `buffer` must point to `capacity`
// writable u32 slots (or be null to size); `written` must be valid.
enum BraxStatus brax_family_facet(const struct BraxFamily *family,
                                  uintptr_t index,
                                  uint32_t *buffer,
                                  uintptr_t capacity,
                                  uintptr_t *written);

// Serialize the family as a polytope document of the given kind.
// `r` is read only for `RdBraxtope`; `d` names the dimension.
//
// # Safety
// `family` must be a live handle; buffer contract as in
// brax_last_error_message.
enum BraxStatus brax_family_to_json(const struct BraxFamily *family,
                                    enum BraxKind kind,
                                    uint32_t r,
                                    uint32_t d,
                                    char *buffer,
                                    uintptr_t capacity,
                                    uintptr_t *written);

// Release a family handle. Null is a no-op.
//
// # Safety
// `family` must be null or a handle not yet freed.
void brax_family_free(struct BraxFamily *family);

// Build the face lattice of a family by intersection closure.
//
// # Safety
// `family` must be a live handle; `out` must be valid; release the
// result with brax_lattice_free.
enum BraxStatus brax_lattice_build(const struct BraxFamily *family, struct BraxLattice **out);

// Dimension of the lattice's polytope.
//
// # Safety
// `lattice` must be a live handle and `out` a valid pointer.
enum BraxStatus brax_lattice_dim(const struct BraxLattice *lattice, uint32_t *out);

// Copy the f-vector (f_0..f_{d-1}) into `buffer`.
//
// # Safety
// `lattice` must be a live handle; `buffer` must point to `capacity`
// writable u64 slots (or be null to size); `written` must be valid.
enum BraxStatus brax_lattice_f_vector(const struct BraxLattice *lattice,
                                      uint64_t *buffer,
                                      uintptr_t capacity,
                                      uintptr_t *written);

// Release a lattice handle. Null is a no-op.
//
// # Safety
// `lattice` must be null or a handle not yet freed.
void brax_lattice_free(struct BraxLattice *lattice);

// Realize Q^{d,n} with exact rational coordinates. The hull of the
// result is verified against the generated facet family before it is
// returned.
//
// # Safety
// `out` must be valid; release the result with
// brax_realization_free.
enum BraxStatus brax_realize(uint32_t d, uint32_t n, uint64_t seed, struct BraxRealization **out);

// Number of vertices in the realization.
//
// # Safety
// `realization` must be a live handle and `out` a valid pointer.
enum BraxStatus brax_realization_vertex_count(const struct BraxRealization *realization,
                                              uintptr_t *out);

// One coordinate as a NUL-terminated "p/q" string.
//
// # Safety
// `realization` must be a live handle; buffer contract as in
// brax_last_error_message.
enum BraxStatus brax_realization_coordinate(const struct BraxRealization *realization,
                                            uintptr_t vertex,
                                            uintptr_t coordinate,
                                            char *buffer,
                                            uintptr_t capacity,
                                            uintptr_t *written);

// Release a realization handle. Null is a no-op.
//
// # Safety
// `realization` must be null or a handle not yet freed.
void brax_realization_free(struct BraxRealization *realization);

// Run a verification suite ("all", "prop1", "braxial", "shelling",
// "geometry", "conjectures") against generated parameters, writing the
// JSON report into `buffer`. Returns `Ok` when every check passed,
// `CheckFailed` when at least one failed (the report still describes
// all of them).
//
// # Safety
// `suite` must be a NUL-terminated string; buffer contract as in
// brax_last_error_message.
enum BraxStatus brax_verify(uint32_t d,
                            uint32_t n,
                            const char *suite,
                            uint64_t seed,
                            char *buffer,
                            uintptr_t capacity,
                            uintptr_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
