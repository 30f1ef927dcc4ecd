#ifndef VKNOTOID_H
#define VKNOTOID_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum VkStatus {
  VK_STATUS_OK = 0,
  // A required pointer argument was null.
  VK_STATUS_NULL = 1,
  VK_STATUS_PARSE = 2,
  // Axiom check failed.
  VK_STATUS_AXIOM = 3,
  // Biquandle and bracket sizes differ.
  VK_STATUS_DIMENSION = 4,
  VK_STATUS_UTF8 = 5,
  VK_STATUS_PANIC = 6,
  // Output buffer too small.
  VK_STATUS_BUFFER = 7,
} VkStatus;

typedef struct VkBiquandle VkBiquandle;

typedef struct VkBracket VkBracket;

typedef struct VkDiagram VkDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent error on this thread, or null. Valid until
// the next failing call on the same thread.
const char *vk_last_error(void);

// # Safety
// `s` must be null or a string returned by this library.
void vk_string_free(char *s);

// Parses a diagram file (`name ...` / `code ...`).
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum VkStatus vk_diagram_parse(const char *src, struct VkDiagram **out);

// # Safety
// `d` must be null or a handle from `vk_diagram_parse`.
void vk_diagram_free(struct VkDiagram *d);

// Canonical code string of the diagram.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum VkStatus vk_diagram_code(const struct VkDiagram *d, char **out);

// Parses a biquandle operation matrix.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum VkStatus vk_biquandle_parse(const char *src, struct VkBiquandle **out);

// # Safety
// `x` must be null or a handle from `vk_biquandle_parse`.
void vk_biquandle_free(struct VkBiquandle *x);

// # Safety
// `x` must be a live handle; `out` must be writable.
enum VkStatus vk_biquandle_size(const struct VkBiquandle *x, size_t *out);

// `VK_STATUS_OK` if every biquandle axiom holds, `VK_STATUS_AXIOM`
// otherwise.
//
// # Safety
// `x` must be a live handle.
enum VkStatus vk_biquandle_verify(const struct VkBiquandle *x);

// Parses a bracket file.
//
// # Safety
// `src` must be a NUL-terminated string; `out` must be writable.
enum VkStatus vk_bracket_parse(const char *src, struct VkBracket **out);

// # Safety
// `b` must be null or a handle from `vk_bracket_parse`.
void vk_bracket_free(struct VkBracket *b);

// Checks the bracket equations against `x`.
//
// # Safety
// Both handles must be live.
enum VkStatus vk_bracket_verify(const struct VkBracket *b, const struct VkBiquandle *x);

// # Safety
// Handles must be live; `out` must be writable.
enum VkStatus vk_counting_invariant(const struct VkDiagram *d,
                                    const struct VkBiquandle *x,
                                    uint64_t *out);

// Writes the n×n counting matrix row-major into `buf`, which must hold
// `len ≥ n²` entries.
//
// # Safety
// Handles must be live; `buf` must point to `len` writable `u64`s.
enum VkStatus vk_counting_matrix(const struct VkDiagram *d,
                                 const struct VkBiquandle *x,
                                 uint64_t *buf,
                                 size_t len);

// Bracket polynomial in canonical form, e.g. `2u^3+u^2`.
//
// # Safety
// Handles must be live; `out` must be writable.
enum VkStatus vk_bracket_polynomial(const struct VkDiagram *d,
                                    const struct VkBiquandle *x,
                                    const struct VkBracket *b,
                                    char **out);

// Bracket matrix as a JSON array of rows of polynomial strings.
//
// # Safety
// Handles must be live; `out` must be writable.
enum VkStatus vk_bracket_matrix_json(const struct VkDiagram *d,
                                     const struct VkBiquandle *x,
                                     const struct VkBracket *b,
                                     char **out);

// Fundamental bracket, one state per line.
//
// # Safety
// `d` must be live; `out` must be writable.
enum VkStatus vk_fundamental_bracket(const struct VkDiagram *d, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VKNOTOID_H */
