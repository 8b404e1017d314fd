/* Exercises the C interface from C. */
#include "s3rec/s3rec.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

static s3rec_triangulation* load(const char* name)
{
    char path[1024];
    s3rec_triangulation* t = NULL;
    snprintf(path, sizeof path, "%s/%s", S3REC_DATA_DIR, name);
    if (s3rec_load(path, &t) != S3REC_OK) {
        fprintf(stderr, "cannot load %s: %s\n", path, s3rec_last_error());
        exit(1);
    }
    return t;
}

int main(void)
{
    s3rec_outcome outcome;
    char* out = NULL;
    char* report = NULL;

    s3rec_triangulation* s3 = load("s3_boundary4simplex.tri");
    EXPECT(s3rec_dimension(s3) == 3);
    EXPECT(s3rec_size(s3) == 5);
    EXPECT(s3rec_recognize(s3, 1000000, 2, S3REC_JSON, &outcome, &report) == S3REC_OK);
    EXPECT(outcome == S3REC_AFFIRMATIVE);
    EXPECT(strstr(report, "\"verdict\": \"YesSphere\"") != NULL);
    EXPECT(s3rec_verify(s3, report, S3REC_TEXT, &outcome, &out) == S3REC_OK);
    EXPECT(outcome == S3REC_AFFIRMATIVE);
    s3rec_string_free(out);

    s3rec_triangulation* lens = load("lens_3_1.tri");
    EXPECT(s3rec_verify(lens, report, S3REC_TEXT, &outcome, &out) == S3REC_OK);
    EXPECT(outcome == S3REC_NEGATIVE);
    s3rec_string_free(out);
    s3rec_string_free(report);

    EXPECT(s3rec_homology(lens, S3REC_JSON, &outcome, &out) == S3REC_OK);
    EXPECT(outcome == S3REC_NEGATIVE);
    EXPECT(strstr(out, "\"text\": \"Z/3\"") != NULL);
    s3rec_string_free(out);

    EXPECT(s3rec_recognize(s3, 2, 1, S3REC_TEXT, &outcome, &out) == S3REC_OK);
    EXPECT(outcome == S3REC_INCONCLUSIVE);
    s3rec_string_free(out);
    EXPECT(s3rec_enumerate(s3, 0, 1, 2, 1, S3REC_JSON, &outcome, &out) == S3REC_ERR_BUDGET);

    /* Wrong dimension and bad arguments. */
    EXPECT(s3rec_plcurve(s3, 4, -1, S3REC_TEXT, &outcome, &out) == S3REC_ERR_ARGUMENT);
    EXPECT(s3rec_check(NULL, S3REC_TEXT, &outcome, &out) == S3REC_ERR_ARGUMENT);
    EXPECT(s3rec_verify(s3, "{not json", S3REC_TEXT, &outcome, &out) == S3REC_ERR_INPUT);
    EXPECT(s3rec_verify(s3, "{\"schema\":\"other\",\"command\":\"check\"}", S3REC_TEXT, &outcome, &out) == S3REC_ERR_INPUT);

    s3rec_triangulation* surf = load("tetrahedron_boundary.tri");
    EXPECT(s3rec_dimension(surf) == 2);
    EXPECT(s3rec_plcurve(surf, 4, -1, S3REC_JSON, &outcome, &out) == S3REC_OK);
    EXPECT(strstr(out, "UnstablePLGeodesic") != NULL);
    EXPECT(s3rec_verify(surf, out, S3REC_TEXT, &outcome, &report) == S3REC_OK);
    EXPECT(outcome == S3REC_AFFIRMATIVE);
    s3rec_string_free(report);
    s3rec_string_free(out);

    /* Parse errors report a position. */
    s3rec_triangulation* bad = NULL;
    EXPECT(s3rec_parse("dim 3\ncount 1\nsimplex 0: f0=(0,1x23) f1=- f2=- f3=-\n", &bad) == S3REC_ERR_PARSE);
    EXPECT(bad == NULL);
    EXPECT(s3rec_last_error_line() == 3);
    EXPECT(s3rec_last_error_column() == 18);

    /* Serialization round trip. */
    EXPECT(s3rec_serialize(lens, &out) == S3REC_OK);
    s3rec_triangulation* again = NULL;
    EXPECT(s3rec_parse(out, &again) == S3REC_OK);
    EXPECT(s3rec_size(again) == 2);
    s3rec_string_free(out);

    s3rec_free(again);
    s3rec_free(surf);
    s3rec_free(lens);
    s3rec_free(s3);
    s3rec_free(NULL);
    if (failures == 0) printf("capi: all checks passed\n");
    return failures == 0 ? 0 : 1;
}
