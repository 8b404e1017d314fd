#ifndef S3REC_H
#define S3REC_H

/* C interface to the s3rec library. Every report is returned as a JSON
 * string (schema "s3rec-report/1", see docs/report-schema.md) that the
 * caller releases with s3rec_string_free. Functions return a status code;
 * on failure s3rec_last_error() describes the problem (per thread). */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define S3REC_API __declspec(dllexport)
#else
#define S3REC_API __attribute__((visibility("default")))
#endif

typedef struct s3rec_triangulation s3rec_triangulation;

typedef enum {
    S3REC_OK = 0,
    S3REC_ERR_PARSE = 1,     /* malformed gluing table; see line/column */
    S3REC_ERR_INPUT = 2,     /* well-formed but unusable input */
    S3REC_ERR_BUDGET = 3,    /* resource budget exhausted */
    S3REC_ERR_ARGUMENT = 4,  /* bad argument (null pointer, wrong dimension, ...) */
    S3REC_ERR_INTERNAL = 5
} s3rec_status;

/* Outcome of a command, matching the CLI exit codes. */
typedef enum {
    S3REC_AFFIRMATIVE = 0,
    S3REC_NEGATIVE = 1,
    S3REC_INCONCLUSIVE = 2
} s3rec_outcome;

typedef enum { S3REC_TEXT = 0, S3REC_JSON = 1 } s3rec_format;

S3REC_API const char* s3rec_version(void);

S3REC_API s3rec_status s3rec_load(const char* path, s3rec_triangulation** out);
S3REC_API s3rec_status s3rec_parse(const char* text, s3rec_triangulation** out);
S3REC_API void s3rec_free(s3rec_triangulation* t);

/* 3 for triangulated 3-manifolds, 2 for surfaces. */
S3REC_API int s3rec_dimension(const s3rec_triangulation* t);
S3REC_API int s3rec_size(const s3rec_triangulation* t);

/* Gluing table text, as accepted by s3rec_parse. */
S3REC_API s3rec_status s3rec_serialize(const s3rec_triangulation* t, char** out);

S3REC_API s3rec_status s3rec_check(const s3rec_triangulation* t, s3rec_format fmt, s3rec_outcome* outcome, char** out);
S3REC_API s3rec_status s3rec_homology(const s3rec_triangulation* t, s3rec_format fmt, s3rec_outcome* outcome, char** out);

/* almost: 0 normal, 1 almost normal; hilbert: 0 vertex solutions, 1 Hilbert basis. */
S3REC_API s3rec_status s3rec_enumerate(const s3rec_triangulation* t, int almost, int hilbert, long budget, int threads,
                                       s3rec_format fmt, s3rec_outcome* outcome, char** out);

S3REC_API s3rec_status s3rec_recognize(const s3rec_triangulation* t, long budget, int threads, s3rec_format fmt,
                                       s3rec_outcome* outcome, char** out);

/* Surfaces only. depth < 0 uses each curve's weight as the search depth. */
S3REC_API s3rec_status s3rec_plcurve(const s3rec_triangulation* t, long max_weight, int depth, s3rec_format fmt,
                                     s3rec_outcome* outcome, char** out);

/* Re-checks a JSON report produced by any command above against t.
 * Malformed reports give S3REC_ERR_INPUT. */
S3REC_API s3rec_status s3rec_verify(const s3rec_triangulation* t, const char* report_json, s3rec_format fmt,
                                    s3rec_outcome* outcome, char** out);

S3REC_API const char* s3rec_last_error(void);
/* 1-based position of the last parse error, 0 when not applicable. */
S3REC_API int s3rec_last_error_line(void);
S3REC_API int s3rec_last_error_column(void);

S3REC_API void s3rec_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
