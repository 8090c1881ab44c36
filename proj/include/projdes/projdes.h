/* C interface to the projective design library.
 *
 * All functions returning pd_status follow one convention:
 *   PD_OK        computation succeeded (and, for checks, the check passed)
 *   PD_FAIL      computation succeeded but the check failed
 *   PD_EINVAL    invalid input (bad file, bad parameters, parse error)
 *   PD_EINTERNAL unexpected internal error
 * On PD_EINVAL / PD_EINTERNAL a thread-local message is available from
 * pd_last_error(). Strings returned through char** are heap-allocated and
 * must be released with pd_string_free().
 */
#ifndef PROJDES_H
#define PROJDES_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pd_status {
  PD_OK = 0,
  PD_FAIL = 1,
  PD_EINVAL = 2,
  PD_EINTERNAL = 3
} pd_status;

/* Opaque handle to a finite point set in a projective space. */
typedef struct pd_design pd_design;

const char* pd_version(void);

/* Thread-local message for the most recent failing call; never NULL. */
const char* pd_last_error(void);

void pd_string_free(char* s);
void pd_design_free(pd_design* d);

/* Design files are JSON: {"field": "R"|"C"|"H", "n": int,
 * "backend": "exact"|"float", "points": [[scalar, ...], ...]}. */
pd_status pd_design_load(const char* path, pd_design** out);
pd_status pd_design_from_json(const char* text, pd_design** out);
pd_status pd_design_save(const pd_design* d, const char* path);
pd_status pd_design_to_json(const pd_design* d, char** out);

/* Built-in constructions: "cp1-5design" (t ignored) or "rp1-polygon"
 * (t >= 1 required). */
pd_status pd_design_construct(const char* which, int t, pd_design** out);

/* Numeric image of an exact design (float designs copy unchanged). */
pd_status pd_design_to_float(const pd_design* d, pd_design** out);

/* Number of points; -1 on NULL. */
int pd_design_size(const pd_design* d);

/* format is "text" or "json" ("csv" additionally for census/rationality);
 * NULL means "text". tol <= 0 selects the documented defaults. Reports are
 * written to *report when non-NULL.
 *
 * pd_verify / pd_bma return PD_FAIL when the design check fails;
 * *verified / *ok (when non-NULL) receive 1 or 0 accordingly. */
pd_status pd_verify(const pd_design* d, int t, double tol, const char* format,
                    int* verified, char** report);
pd_status pd_bma(const pd_design* d, int t, double tol, const char* format,
                 int* ok, char** report);

/* Rank-comparison sweep over fields "R", "C", "H" (subset string such as
 * "RC"; NULL means all three), 1 <= n <= n_max, 2 <= s <= s_max. */
pd_status pd_census(const char* fields, int n_max, int s_max, int jobs,
                    const char* format, char** report);

pd_status pd_rationality(int t_max, const char* format, char** report);

/* Cardinality bound, annihilator polynomial and its roots at (field, n, t). */
pd_status pd_bound(const char* field, int n, int t, const char* format, char** report);

/* Angle set, derived s/e/parity and the matching cardinality bound. */
pd_status pd_design_info(const pd_design* d, double tol, const char* format, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROJDES_H */
