/*
 * homcss C API.
 *
 * Every call returns an hc_status. On failure the thread-local message from
 * hc_last_error() describes what went wrong. Strings returned through char**
 * out-parameters are owned by the caller and released with hc_string_free().
 * Handles are immutable once created and may be shared between threads.
 */
#ifndef HOMCSS_H
#define HOMCSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HOMCSS_BUILDING)
#define HOMCSS_API __declspec(dllexport)
#else
#define HOMCSS_API __declspec(dllimport)
#endif
#else
#define HOMCSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_INVALID_ARGUMENT = 1,
  HC_VALIDATION_FAILED = 2,
  HC_BUDGET_EXCEEDED = 3,
  HC_NO_NONTRIVIAL_CLASS = 4,
  HC_PARSE_ERROR = 5,
  HC_DIMENSION_ERROR = 6,
  HC_INTERNAL_ERROR = 7
} hc_status;

typedef enum hc_distance_mode {
  HC_DISTANCE_AUTO = 0,
  HC_DISTANCE_EXACT = 1,
  HC_DISTANCE_BOUNDED = 2
} hc_distance_mode;

typedef enum hc_form {
  HC_FORM_SQRT2 = 0,    /* -sqrt2 x0^2 + sum xi^2 */
  HC_FORM_TWISTED = 1,  /* +sqrt2 x0^2 + sum xi^2 */
  HC_FORM_INTEGRAL = 2  /* -x0^2 + sum xi^2 */
} hc_form;

typedef struct hc_search_options {
  size_t budget;    /* max kernel dimension for exact enumeration */
  size_t w_max;     /* weight cap for bounded search */
  unsigned workers; /* threads; 1 = serial */
} hc_search_options;

typedef struct hc_complex hc_complex;

HOMCSS_API const char* hc_version(void);
HOMCSS_API const char* hc_last_error(void);
HOMCSS_API const char* hc_status_name(hc_status status);
HOMCSS_API void hc_string_free(char* s);
HOMCSS_API void hc_search_options_default(hc_search_options* opts);

/* Complexes ------------------------------------------------------------ */

HOMCSS_API hc_status hc_complex_from_json(const char* json, hc_complex** out);
HOMCSS_API hc_status hc_complex_to_json(const hc_complex* x, char** out);
HOMCSS_API hc_status hc_complex_point(hc_complex** out);
HOMCSS_API hc_status hc_complex_toric(size_t side, hc_complex** out);
HOMCSS_API hc_status hc_complex_cycle(size_t vertices, hc_complex** out);
/* facets_json: [[v, ...], ...] */
HOMCSS_API hc_status hc_complex_from_facets(const char* facets_json, hc_complex** out);
HOMCSS_API hc_status hc_complex_random(uint64_t seed, size_t vertices, size_t facets,
                                       size_t facet_size, hc_complex** out);
HOMCSS_API hc_status hc_complex_product(const hc_complex* x, const hc_complex* y,
                                        hc_complex** out);
HOMCSS_API hc_status hc_complex_cochain(const hc_complex* x, hc_complex** out);
/* report (optional): pseudomanifold check and the duality identity. */
HOMCSS_API hc_status hc_complex_dual(const hc_complex* x, hc_complex** out,
                                     char** report);
/* voltages_json: {"edge": [perm...], ...}; report (optional): projection
 * and Euler-characteristic checks. */
HOMCSS_API hc_status hc_complex_cover(const hc_complex* x, size_t sheets,
                                      const char* voltages_json, hc_complex** out,
                                      char** report);
HOMCSS_API hc_status hc_complex_random_voltages(const hc_complex* x, uint64_t seed,
                                                size_t sheets, char** voltages_json);
/* HC_OK when valid, HC_VALIDATION_FAILED otherwise; report is written in
 * both cases. */
HOMCSS_API hc_status hc_complex_validate(const hc_complex* x, char** report);
HOMCSS_API hc_status hc_complex_homology(const hc_complex* x, char** report);
HOMCSS_API hc_status hc_complex_euler(const hc_complex* x, long long* out);
HOMCSS_API size_t hc_complex_dim(const hc_complex* x);
HOMCSS_API size_t hc_complex_cells(const hc_complex* x, size_t degree);
HOMCSS_API void hc_complex_free(hc_complex* x);

/* Codes ---------------------------------------------------------------- */

/* n, k, generator counts, LDPC weight and distance (auto mode). */
HOMCSS_API hc_status hc_code_params(const hc_complex* x, size_t degree,
                                    const hc_search_options* opts, char** report);
HOMCSS_API hc_status hc_code_distance(const hc_complex* x, size_t degree,
                                      hc_distance_mode mode,
                                      const hc_search_options* opts, char** report);
HOMCSS_API hc_status hc_code_systole(const hc_complex* x, size_t degree,
                                     const hc_search_options* opts, char** report);
HOMCSS_API hc_status hc_code_ldpc(const hc_complex* x, size_t degree, size_t* out);
/* params_json: array of distance reports as produced above. */
HOMCSS_API hc_status hc_zemor_report(const char* params_json, double epsilon,
                                     char** report);

/* Arithmetic groups ---------------------------------------------------- */
/* gens_json: [{"A": [[...]], "B": [[...]]}, ...]; B defaults to zero. */

HOMCSS_API hc_status hc_arith_verify(const char* gens_json, hc_form form, char** report);
HOMCSS_API hc_status hc_arith_twist(const char* gens_json, hc_form form, char** report);
HOMCSS_API hc_status hc_arith_reduce(const char* gens_json, uint64_t modulus,
                                     char** report);
HOMCSS_API hc_status hc_arith_closure(const char* gens_json, uint64_t modulus,
                                      size_t cap, int transcript, char** report);
HOMCSS_API hc_status hc_arith_gamma(const char* gens_json, hc_form form,
                                    uint64_t modulus, size_t cap, char** report);
HOMCSS_API hc_status hc_arith_entry_bound(const char* gens_json, hc_form form,
                                          uint64_t modulus, size_t cap, char** report);
HOMCSS_API hc_status hc_arith_growth(const char* gens_json, uint64_t seed,
                                     size_t samples, size_t max_length, char** report);
HOMCSS_API hc_status hc_arith_search(hc_form form, size_t dimension, int64_t height_a,
                                     int64_t height_b, size_t limit, char** gens_json);
/* growth <= 1 omits the word-length side. */
HOMCSS_API hc_status hc_arith_injrad(double modulus, double c1, double c2,
                                     double growth, char** report);

/* Bounds --------------------------------------------------------------- */

HOMCSS_API hc_status hc_bounds_sphere_volume(unsigned n, double* out);
HOMCSS_API hc_status hc_bounds_hyperbolic_ball(unsigned k, double r, double* out);
HOMCSS_API hc_status hc_bounds_cone(unsigned k, double r, double base, int hyperbolic,
                                    double* out);
HOMCSS_API hc_status hc_bounds_gauss_bonnet(long long chi, unsigned dim, char** report);
HOMCSS_API hc_status hc_bounds_h2(double volume, char** report);
HOMCSS_API hc_status hc_bounds_anderson(unsigned i, double radius, char** report);
HOMCSS_API hc_status hc_bounds_monotonicity(unsigned k, const double* grid,
                                            size_t grid_len, const double* profile_r,
                                            const double* profile_v, size_t profile_len,
                                            char** report);

#ifdef __cplusplus
}
#endif

#endif /* HOMCSS_H */
