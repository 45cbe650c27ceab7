#ifndef CHARKIT_H
#define CHARKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CharkitStatus {
  CHARKIT_STATUS_OK = 0,
  CHARKIT_STATUS_NULL_POINTER = 1,
  CHARKIT_STATUS_INVALID_UTF8 = 2,
  CHARKIT_STATUS_INVALID_ARGUMENT = 3,
  CHARKIT_STATUS_DATA_ERROR = 4,
  CHARKIT_STATUS_COMPUTATION_FAILED = 5,
  // The computation finished but an invariant check failed.
  CHARKIT_STATUS_CHECK_FAILED = 6,
  CHARKIT_STATUS_PANIC = 7,
} CharkitStatus;

// The trace and family datasets of `E7`.
typedef struct CharkitE7Data CharkitE7Data;

// A root system with its reflection tables.
typedef struct CharkitRootSystem CharkitRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failure on this thread; empty after success. Valid
// until the next call into this library on the same thread.
const char *charkit_last_error(void);

// Static description of a status code.
const char *charkit_status_string(enum CharkitStatus status);

// Release a string returned by this library.
//
// # Safety
// `s` must be null or a pointer obtained from this library, freed once.
void charkit_string_free(char *s);

// Build the root system of a type such as `"E7"` or `"A2xB3"`.
//
// # Safety
// `type_label` must be a NUL-terminated string and `out` valid for writes.
enum CharkitStatus charkit_root_system_new(const char *type_label, struct CharkitRootSystem **out);

// # Safety
// `rs` must be null or a handle from [`charkit_root_system_new`], freed once.
void charkit_root_system_free(struct CharkitRootSystem *rs);

// Rank and number of positive roots.
//
// # Safety
// `rs` must be a live handle; the out-pointers must be valid for writes.
enum CharkitStatus charkit_root_system_info(const struct CharkitRootSystem *rs,
                                            size_t *rank,
                                            size_t *num_positive);

// Conjugator between the Coxeter elements of two 0-based node orderings,
// as JSON `{"word": [...], "moves": [...], "verified": bool}`. Returns
// `CheckFailed` (with the JSON still written) if verification fails.
//
// # Safety
// `rs` must be a live handle, `source` and `target` valid for `len` reads,
// and `out_json` valid for writes.
enum CharkitStatus charkit_coxeter_conjugator(const struct CharkitRootSystem *rs,
                                              const size_t *source,
                                              const size_t *target,
                                              size_t len,
                                              char **out_json);

// Character table of a group given by name (`"S4"`) or generators
// (`"perm:(1,2);(1,2,3)"`), as JSON with rows of cyclotomic strings.
//
// # Safety
// `group` must be a NUL-terminated string and `out_json` valid for writes.
enum CharkitStatus charkit_character_table_json(const char *group, char **out_json);

// Fourier matrix of `M(G)` as JSON `{"m_set", "matrix", "eigenvalues"}`.
//
// # Safety
// `group` must be a NUL-terminated string and `out_json` valid for writes.
enum CharkitStatus charkit_fourier_matrix_json(const char *group, char **out_json);

// Load the `E7` datasets. A null path selects `$CHARKIT_DATA` or the
// bundled copy.
//
// # Safety
// Paths must be null or NUL-terminated strings; `out` valid for writes.
enum CharkitStatus charkit_e7_data_load(const char *traces_path,
                                        const char *families_path,
                                        struct CharkitE7Data **out);

// # Safety
// `data` must be null or a handle from [`charkit_e7_data_load`], freed once.
void charkit_e7_data_free(struct CharkitE7Data *data);

// The sign `ξ` and the audit trail as JSON.
//
// # Safety
// `data` must be a live handle; `xi` and `out_json` valid for writes
// (`out_json` may be null).
enum CharkitStatus charkit_e7_solve_signs(const struct CharkitE7Data *data,
                                          int8_t *xi,
                                          char **out_json);

// Values of the cuspidal family at the four regular unipotent classes.
//
// # Safety
// `data` must be a live handle and `out_json` valid for writes.
enum CharkitStatus charkit_e7_final_table_json(const struct CharkitE7Data *data,
                                               int8_t xi,
                                               char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARKIT_H */
