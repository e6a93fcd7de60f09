#ifndef OMF_H
#define OMF_H

/* C interface to the exact modular-form engine. Values and verification
 * reports are opaque handles; every function that can fail returns a
 * status code and leaves a message retrievable with omf_last_error().
 * All series data is exact rational arithmetic; q_max and s_max are
 * inclusive expansion orders. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define OMF_API __declspec(dllexport)
#else
#define OMF_API __attribute__((visibility("default")))
#endif

typedef enum {
  OMF_OK = 0,
  OMF_ERR_INVALID = 1, /* unknown name or bad argument */
  OMF_ERR_DOMAIN = 2,  /* mathematical domain error */
  OMF_ERR_INTERNAL = 3
} omf_status;

typedef struct omf_value omf_value;
typedef struct omf_report omf_report;

/* Message describing the most recent failure on this thread. */
OMF_API const char* omf_last_error(void);

/* Newline-separated catalogue of expandable names; free the string with
 * omf_string_free. */
OMF_API omf_status omf_catalogue(char** out);
OMF_API void omf_string_free(char* s);

/* Expand a named form at the requested orders. */
OMF_API omf_status omf_expand(const char* name, long q_max, long s_max,
                      omf_value** out);
OMF_API const char* omf_value_name(const omf_value* v);
OMF_API const char* omf_value_note(const omf_value* v);
OMF_API const char* omf_value_text(const omf_value* v);
OMF_API const char* omf_value_json(const omf_value* v);
OMF_API void omf_value_free(omf_value* v);

/* Run one verification suite. Suites: rank13, rank14, rank15, rank16,
 * rank17, rank18, deep, restrictions, borcherds, root-differences,
 * properties, boundary, symbolic. Nonpositive q_max or s_max selects the
 * suite's default window. */
OMF_API omf_status omf_verify(const char* suite, long q_max, long s_max,
                      omf_report** out);
/* Newline-separated list of suite names. */
OMF_API omf_status omf_suites(char** out);

/* Timed representative workloads (five-variable Laurent products at two
 * truncations, Hecke operator batches). Returns a JSON document with
 * wall-clock milliseconds and exact coefficient counts; the counts are
 * deterministic across runs. Free with omf_string_free. */
OMF_API omf_status omf_bench(char** json_out);

OMF_API int omf_report_pass(const omf_report* r);
OMF_API size_t omf_report_size(const omf_report* r);
OMF_API const char* omf_report_label(const omf_report* r, size_t i);
OMF_API int omf_report_check_pass(const omf_report* r, size_t i);
OMF_API const char* omf_report_detail(const omf_report* r, size_t i);
OMF_API const char* omf_report_text(const omf_report* r);
OMF_API const char* omf_report_json(const omf_report* r);
OMF_API void omf_report_free(omf_report* r);

#ifdef __cplusplus
}
#endif

#endif /* OMF_H */
