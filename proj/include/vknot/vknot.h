/* vknot -- Gauss-diagram calculus for virtual knots.
 *
 * C interface to the vknot shared library. Diagrams are opaque handles
 * created by vk_parse and released with vk_diagram_free. Functions return
 * VK_OK or an error code; vk_last_error_message / vk_last_error_token
 * give details for the calling thread's most recent failure. Strings
 * returned through char** are heap-allocated and must be released with
 * vk_string_free.
 *
 * Gauss codes follow the grammar
 *     code  := "" | token ("," token)*
 *     token := ("O" | "U") id sign      e.g. "O1-,O2-,U1-,U2-"
 * with O marking the overpass and U the underpass visit of a crossing.
 */
#ifndef VKNOT_H
#define VKNOT_H

#include <stddef.h>

#if defined(_WIN32)
#define VKNOT_API __declspec(dllexport)
#else
#define VKNOT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vk_status {
    VK_OK = 0,
    VK_ERR_BAD_TOKEN = 1,
    VK_ERR_ODD_OCCURRENCE = 2,
    VK_ERR_SIGN_MISMATCH = 3,
    VK_ERR_UNKNOWN_CHORD = 4,
    VK_ERR_SAME_CHORD = 5,
    VK_ERR_ROLE_MISMATCH = 6,
    VK_ERR_OUT_OF_RANGE = 7,
    VK_ERR_NOT_APPLICABLE = 8,
    VK_ERR_DEGENERATE_REGION = 9,
    VK_ERR_CAP_EXCEEDED = 10,
    VK_ERR_INVALID_WITNESS = 11,
    VK_ERR_BAD_MOVE_SPEC = 12,
    VK_ERR_BAD_ARGUMENT = 13,
    VK_ERR_INTERNAL = 14
} vk_status;

typedef struct vk_diagram vk_diagram;

/* Parsing and rendering. */
VKNOT_API vk_status vk_parse(const char* code, vk_diagram** out);
VKNOT_API void vk_diagram_free(vk_diagram* d);
VKNOT_API vk_status vk_render(const vk_diagram* d, char** out);
VKNOT_API vk_status vk_canonical(const vk_diagram* d, vk_diagram** out);
VKNOT_API int vk_chord_count(const vk_diagram* d);

/* Invariants. */
VKNOT_API int vk_is_parallel(const vk_diagram* d);
VKNOT_API vk_status vk_writhe(const vk_diagram* d, int* out);
VKNOT_API vk_status vk_odd_writhe(const vk_diagram* d, int* out);
VKNOT_API vk_status vk_arc_shift_lower_bound(const vk_diagram* d, int* out);
VKNOT_API vk_status vk_invariants_json(const vk_diagram* d, char** json_out);

/* Rewriting. Move specs: as:<i>, ass:<chord>, f:<i>, fd:<i>, r1d:<chord>,
 * r1i:<pos>:<sign>:<OU|UO>, r2d:<a>:<b>, r2i:<posA>:<posB>:<variant>,
 * r3:<i>:<j>:<k>:<variant>, delta:<i>:<j>:<k>. Positions refer to the
 * diagram as rendered. */
VKNOT_API vk_status vk_apply(const vk_diagram* d, const char* move_spec, vk_diagram** out);

/* Planar realization as a 4-valent map ("--regions" content included when
 * with_regions is nonzero). */
VKNOT_API vk_status vk_realize_json(const vk_diagram* d, int with_regions, char** json_out);

/* Bounded unknotting search. family is "arcshift", "forbidden" or "ras";
 * max_states <= 0 selects the default budget of 200000. */
VKNOT_API vk_status vk_unknot_json(const vk_diagram* d, const char* family, int max_chords,
                                   long max_states, char** json_out);

/* Full per-knot record: invariants plus search bounds for the requested
 * families (comma list, e.g. "arcshift,forbidden,ras") and the
 * region-vs-forbidden bound comparison. */
VKNOT_API vk_status vk_corpus_record_json(const vk_diagram* d, const char* name,
                                          const char* families, int max_chords,
                                          long max_states, char** json_out);

/* Exhaustive proposition suite over diagrams with up to max_chords
 * chords (0..4). */
VKNOT_API vk_status vk_selftest_json(int max_chords, char** json_out);

VKNOT_API void vk_string_free(char* s);
VKNOT_API const char* vk_status_name(vk_status s);

/* Thread-local details of the most recent failure. Token is the 1-based
 * index of the offending token for parse errors, -1 otherwise. */
VKNOT_API const char* vk_last_error_message(void);
VKNOT_API int vk_last_error_token(void);

#ifdef __cplusplus
}
#endif

#endif
