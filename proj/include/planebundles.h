/* C interface to the planebundles engine.
 *
 * All computations are exact (rationals or a prime field F_q, q >= 5 prime).
 * Bundles are opaque handles created from a family literal or a bundle file;
 * reports come back as heap strings in JSON or text, released with
 * pb_string_free. Every function returns PB_OK or an error code, with a
 * human-readable message available from pb_last_error() on the same thread.
 */
#ifndef PLANEBUNDLES_H
#define PLANEBUNDLES_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pb_bundle pb_bundle;

typedef enum pb_status {
  PB_OK = 0,
  PB_ERROR_INVALID_ARGUMENT = 1,
  PB_ERROR_PARSE = 2,
  PB_ERROR_NOT_LOCALLY_FREE = 3,
  PB_ERROR_UNSUPPORTED = 4,
  PB_ERROR_PRECONDITION = 5,
  PB_ERROR_IO = 6,
  PB_ERROR_INTERNAL = 7
} pb_status;

/* Message describing the most recent failure on this thread. */
const char* pb_last_error(void);

void pb_string_free(char* s);
void pb_bundle_free(pb_bundle* b);

/* family: "en:3", "kaneyama:1,2,3", "nf:2,4", "ex61:r=2,k=1,c1=0,f=z^6",
 * "ex62:r=1,f=z^3"; field: "Q" or "Fp:<prime>". */
pb_status pb_bundle_from_family(const char* family, const char* field, pb_bundle** out);

/* Load the line-oriented bundle file format; field may be NULL, otherwise it
 * must agree with the file's field line. */
pb_status pb_bundle_from_file(const char* path, const char* field, pb_bundle** out);

pb_status pb_bundle_chern(const pb_bundle* b, long long* c1, long long* c2);

/* line literal: "[c1,c2,c3]". */
pb_status pb_splitting(const pb_bundle* b, const char* line, long long* a_out, long long* b_out);

/* format: "json" or "text" for every report below. */
pb_status pb_chern_report(const pb_bundle* b, const char* format, char** out);

pb_status pb_splitting_report(const pb_bundle* b, const char* line, const char* format,
                              char** out);

/* exhaustive != 0 scans every line (prime fields only); otherwise `samples`
 * seeded random lines. */
pb_status pb_scan_report(const pb_bundle* b, int exhaustive, unsigned long long samples,
                         unsigned long long seed, const char* format, char** out);

pb_status pb_sections_report(const pb_bundle* b, long long twist, const char* format, char** out);

/* group: "Gp", "GL", "B", "T" or "PGL3"; point literal "a:b:c" and line
 * literal "[a,b,c]" adapt the subgroup frame (NULL picks the defaults
 * p=(1:0:0), L=[0,0,1]). */
pb_status pb_invariance_report(const pb_bundle* b, const char* group, const char* point,
                               const char* line, unsigned long long samples,
                               unsigned long long seed, const char* format, char** out);

/* Invariance under one explicit element, given as nine comma-separated
 * integers row-major, e.g. "1,1,0,0,1,0,0,0,1". */
pb_status pb_invariance_element_report(const pb_bundle* b, const char* element,
                                       unsigned long long seed, const char* format, char** out);

pb_status pb_isomorphic_report(const pb_bundle* a, const pb_bundle* b, unsigned long long seed,
                               const char* format, char** out);

/* Runs the whole verification suite. corrupt may name a check to perturb
 * (harness self-test); NULL runs it honestly. all_passed may be NULL. */
pb_status pb_verify_paper(int quick, unsigned long long seed, const char* corrupt,
                          const char* format, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* PLANEBUNDLES_H */
