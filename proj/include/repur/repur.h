/* repur.h
 *
 * C interface to the repur library: Renyi entropy powers, entropy-power
 * uncertainty relations, information scans, information cumulants and
 * tail fits for one-dimensional states and densities.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a repur_status;
 * on failure the message is available from repur_last_error() on the same
 * thread. Strings returned through char** are malloc'd and released with
 * repur_string_free().
 */
#ifndef REPUR_REPUR_H
#define REPUR_REPUR_H

#include <stddef.h>

#if defined(REPUR_BUILDING_LIBRARY)
#define REPUR_API __attribute__((visibility("default")))
#else
#define REPUR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum repur_status {
    REPUR_OK = 0,
    REPUR_E_INVALID_ARGUMENT = 1,
    REPUR_E_ZERO_MASS = 2,
    REPUR_E_NON_POSITIVE_ORDER = 3,
    REPUR_E_OUT_OF_RANGE = 4,
    REPUR_E_GRID_TOO_COARSE = 5,
    REPUR_E_INSUFFICIENT_TOWER = 6,
    REPUR_E_NON_FINITE_POWER = 7,
    REPUR_E_ORDER_UNSUPPORTED = 8,
    REPUR_E_DEGENERATE_FIT = 9,
    REPUR_E_NO_CONVERGENCE = 10,
    REPUR_E_INSUFFICIENT_TAIL = 11,
    REPUR_E_SPLICE_FAILURE = 12,
    REPUR_E_DOMAIN_ERROR = 13,
    REPUR_E_IO = 14,
    REPUR_E_PARSE = 15,
    REPUR_E_INTERNAL = 99
} repur_status;

typedef enum repur_format { REPUR_FORMAT_CSV = 0, REPUR_FORMAT_JSON = 1 } repur_format;

typedef enum repur_ext_kind {
    REPUR_EXT_FINITE = 0,
    REPUR_EXT_POS_INF = 1,
    REPUR_EXT_NEG_INF = 2,
    REPUR_EXT_INDETERMINATE = 3
} repur_ext_kind;

/* Extended real; `value` is meaningful only for REPUR_EXT_FINITE. */
typedef struct repur_ext {
    repur_ext_kind kind;
    double value;
} repur_ext;

typedef struct repur_amplitude repur_amplitude;
typedef struct repur_density repur_density;
typedef struct repur_table repur_table;
typedef struct repur_scan repur_scan;
typedef struct repur_cumulants repur_cumulants;
typedef struct repur_reconstruction repur_reconstruction;

REPUR_API const char* repur_version(void);
REPUR_API const char* repur_last_error(void);
REPUR_API const char* repur_status_name(repur_status status);
REPUR_API void repur_string_free(char* s);

/* ---- amplitudes ---- */

REPUR_API repur_status repur_amplitude_create(double x0, double dx, size_t n, const double* re, const double* im,
                                              repur_amplitude** out);
REPUR_API void repur_amplitude_free(repur_amplitude* a);
REPUR_API size_t repur_amplitude_size(const repur_amplitude* a);
REPUR_API repur_status repur_amplitude_grid(const repur_amplitude* a, double* x0, double* dx);
/* Copies n = repur_amplitude_size() values into re and im. */
REPUR_API repur_status repur_amplitude_values(const repur_amplitude* a, double* re, double* im);
REPUR_API repur_status repur_amplitude_normalize(const repur_amplitude* a, repur_amplitude** out);
/* (integral |a|^p)^(1/p). */
REPUR_API repur_status repur_amplitude_lp_norm(const repur_amplitude* a, double p, double* out);
REPUR_API repur_status repur_amplitude_fourier(const repur_amplitude* a, double hbar, repur_amplitude** out);
REPUR_API repur_status repur_amplitude_fourier_inverse(const repur_amplitude* a, double hbar, repur_amplitude** out);
REPUR_API repur_status repur_amplitude_beckner(const repur_amplitude* a, double hbar, repur_amplitude** out);
REPUR_API repur_status repur_amplitude_density(const repur_amplitude* a, repur_density** out);
REPUR_API repur_status repur_amplitude_format(const repur_amplitude* a, repur_format fmt, char** out);

/* ---- states ---- */

REPUR_API repur_status repur_gaussian_state(double sigma, double center, size_t n, repur_amplitude** out);
REPUR_API repur_status repur_squeezed_state(double zeta, double omega, double hbar, repur_amplitude** out);
REPUR_API repur_status repur_squeezed_variances(double zeta, double omega, double hbar, double* var_x,
                                                double* var_p);
/* half_width_factor and n may be 0 for the defaults. */
REPUR_API repur_status repur_cauchy_state(double gamma, double m, double hbar, double half_width_factor, size_t n,
                                          repur_amplitude** out);
REPUR_API repur_status repur_cauchy_momentum_variance(double gamma, double hbar, double* out);
REPUR_API repur_status repur_mixture_state(const double* weights, const double* means, const double* sigmas,
                                           size_t count, size_t n, repur_amplitude** out);
REPUR_API repur_status repur_bessel_k0(double u, double* out);

/* ---- densities ---- */

REPUR_API repur_status repur_density_create(double x0, double dx, size_t n, const double* values, int dim,
                                            repur_density** out);
REPUR_API void repur_density_free(repur_density* d);
REPUR_API size_t repur_density_size(const repur_density* d);
REPUR_API repur_status repur_density_grid(const repur_density* d, double* x0, double* dx);
REPUR_API repur_status repur_density_values(const repur_density* d, double* values);
REPUR_API repur_status repur_density_mass(const repur_density* d, double* out);
REPUR_API repur_status repur_density_normalize(const repur_density* d, repur_density** out);
REPUR_API repur_status repur_density_format(const repur_density* d, repur_format fmt, char** out);

/* n = 0 selects each builder's default resolution. */
REPUR_API repur_status repur_uniform_density(double length, size_t n, repur_density** out);
REPUR_API repur_status repur_gaussian_density(double sigma, double center, size_t n, repur_density** out);
REPUR_API repur_status repur_laplace_density(double lambda, size_t n, repur_density** out);
REPUR_API repur_status repur_exponential_density(double lambda, size_t n, repur_density** out);
REPUR_API repur_status repur_cauchy_density(double gamma, double m, double half_width_factor, size_t n,
                                            repur_density** out);
REPUR_API repur_status repur_mixture_density(const double* weights, const double* means, const double* sigmas,
                                             size_t count, size_t n, repur_density** out);
/* Gaussian core spliced to F ~ c |y|^-(1+alpha). */
REPUR_API repur_status repur_power_tail_density(double alpha, double c, double core_sigma, repur_density** out);
/* Gaussian core spliced to F ~ d 2^(-beta |y|^a). */
REPUR_API repur_status repur_stretched_tail_density(double a, double beta, double d, double core_sigma,
                                                    repur_density** out);

/* Loads a CSV grid file. Exactly one of *density and *amplitude is set,
 * depending on whether the file has two or three columns. */
REPUR_API repur_status repur_read_csv(const char* path, repur_density** density, repur_amplitude** amplitude);

/* ---- entropy ---- */

/* Renyi order p > 0; pass INFINITY for the infinity index. */
typedef struct repur_entropy_result {
    double index;
    repur_ext entropy_bits;
    repur_ext power;
    int diverged;
    int peak_unresolved;
    double tail_exponent;
} repur_entropy_result;

REPUR_API repur_status repur_entropy(const repur_density* d, double p, repur_entropy_result* out);
REPUR_API repur_status repur_entropy_power(const repur_density* d, double p, repur_ext* out);
REPUR_API repur_status repur_entropy_power_half(const repur_density* d, repur_ext* out);
REPUR_API repur_status repur_entropy_format(const repur_entropy_result* e, repur_format fmt, char** out);
REPUR_API repur_status repur_holder_conjugate(double p, double* out);

/* ---- uncertainty relations ---- */

typedef struct repur_row {
    double r;
    double t;
    repur_ext power_x;
    repur_ext power_p;
    repur_ext product;
    repur_ext gap;
    int saturated;
} repur_row;

REPUR_API repur_status repur_conjugate_index(double r, double* t);
REPUR_API repur_status repur_product(const repur_amplitude* psi, double r, double hbar, repur_row* out);
REPUR_API repur_status repur_product_densities(const repur_density* x, const repur_density* p, double r,
                                               double hbar, repur_row* out);
/* Fills up to `capacity` values and reports the full count. */
REPUR_API repur_status repur_default_r_grid(double* r, size_t capacity, size_t* count);
/* r_count = 0 uses the default r grid; threads = 0 picks the hardware count. */
REPUR_API repur_status repur_sweep(const repur_amplitude* psi, const double* r, size_t r_count, double hbar,
                                   unsigned threads, const char* label, repur_table** out);
REPUR_API repur_status repur_sweep_densities(const repur_density* x, const repur_density* p, const double* r,
                                             size_t r_count, double hbar, unsigned threads, const char* label,
                                             repur_table** out);
REPUR_API void repur_table_free(repur_table* t);
REPUR_API size_t repur_table_rows(const repur_table* t);
REPUR_API repur_status repur_table_row(const repur_table* t, size_t i, repur_row* out);
REPUR_API repur_status repur_table_format(const repur_table* t, repur_format fmt, char** out);

typedef struct repur_vur {
    repur_ext sigma2_x;
    repur_ext sigma2_p;
    repur_ext variance_product;
    double shannon_product;
    double bound;
    int chain_ok;
} repur_vur;

REPUR_API repur_status repur_vur_chain(const repur_amplitude* psi, double hbar, repur_vur* out);
REPUR_API repur_status repur_vur_chain_densities(const repur_density* x, const repur_density* p, double hbar,
                                                 repur_vur* out);
REPUR_API repur_status repur_vur_format(const repur_vur* v, repur_format fmt, char** out);

/* ---- information scans ---- */

typedef struct repur_scan_info {
    double onset;
    double bin_width;
    size_t bins;
    size_t populated_bins;
    double total_mass;
    double overflow_mass;
    size_t dropped_samples;
} repur_scan_info;

/* bins = 0 and span_bits = 0 select 1024 bins over 40 bits. */
REPUR_API repur_status repur_scan_create(const repur_density* d, size_t bins, double span_bits, repur_scan** out);
REPUR_API void repur_scan_free(repur_scan* s);
REPUR_API repur_status repur_scan_get_info(const repur_scan* s, repur_scan_info* out);
/* Each array receives repur_scan_info.bins values; any pointer may be NULL. */
REPUR_API repur_status repur_scan_values(const repur_scan* s, double* x_bits, double* f, double* g, double* mass);
REPUR_API repur_status repur_scan_peaks(const repur_scan* s, double rel_threshold, double* peaks, size_t capacity,
                                        size_t* count);
REPUR_API repur_status repur_scan_format(const repur_scan* s, repur_format fmt, char** out);
REPUR_API repur_status repur_onset_point(const repur_density* d, double* out);
REPUR_API repur_status repur_laplace_consistency(const repur_density* d, const repur_scan* s, double p, double* lhs,
                                                 double* rhs);
REPUR_API repur_status repur_equimeasurable(const repur_density* a, const repur_density* b, double tol, int* out);

/* ---- cumulants ---- */

REPUR_API repur_status repur_cumulants_gldf(const repur_density* d, int n_max, double delta, int richardson,
                                            unsigned threads, repur_cumulants** out);
/* Explicit tower of N_{1+k delta} values. */
REPUR_API repur_status repur_cumulants_from_tower(const int* k, const double* powers, size_t count, double delta,
                                                  int dim, int n_max, repur_cumulants** out);
REPUR_API repur_status repur_cumulants_from_scan(const repur_scan* s, int n_max, repur_cumulants** out);
/* Wraps caller-provided kappa_1 .. kappa_n. */
REPUR_API repur_status repur_cumulants_create(const double* kappa, size_t n, double delta, int dim,
                                              repur_cumulants** out);
REPUR_API void repur_cumulants_free(repur_cumulants* c);
REPUR_API int repur_cumulants_order(const repur_cumulants* c);
REPUR_API repur_status repur_cumulants_get(const repur_cumulants* c, int n, double* out);
REPUR_API repur_status repur_cumulants_format(const repur_cumulants* c, repur_format fmt, char** out);
REPUR_API repur_status repur_gaussian_reference_cumulant(double sigma, int n, double* out);
REPUR_API repur_status repur_varentropy(const repur_density* d, double* out);
REPUR_API repur_status repur_laguerre(int k, double delta, double x, double* out);

typedef struct repur_reconstruction_info {
    int order;
    double a;
    double alpha;
    double beta;
    int exact;
    double clipped_mass;
    size_t bins;
} repur_reconstruction_info;

/* scan may be NULL, in which case 1024 bins over [a, a + 40] are used. */
REPUR_API repur_status repur_reconstruct(const repur_cumulants* c, int order, const repur_scan* scan,
                                         repur_reconstruction** out);
REPUR_API void repur_reconstruction_free(repur_reconstruction* r);
REPUR_API repur_status repur_reconstruction_get_info(const repur_reconstruction* r, repur_reconstruction_info* out);
REPUR_API repur_status repur_reconstruction_values(const repur_reconstruction* r, double* x_bits, double* reference,
                                                   double* reconstructed);
REPUR_API repur_status repur_reconstruction_format(const repur_reconstruction* r, repur_format fmt, char** out);

/* ---- tails ---- */

typedef enum repur_tail_model { REPUR_TAIL_POWER_LAW = 0, REPUR_TAIL_STRETCHED = 1 } repur_tail_model;

typedef struct repur_tail_fit {
    repur_tail_model model;
    double alpha;
    double c_sum;
    double c_side;
    double a;
    double beta;
    double d_side;
    double d_sum;
    double x_lo;
    double x_hi;
    double residual;
    size_t points;
    int iterations;
    int ambiguous;
} repur_tail_fit;

REPUR_API repur_status repur_fit_power_tail(const repur_scan* s, double x_lo, double x_hi, repur_tail_fit* out);
REPUR_API repur_status repur_fit_stretched_tail(const repur_scan* s, double x_lo, double x_hi, repur_tail_fit* out);
/* Zero arguments select the defaults (0.3, 5 bits, 30 bins). */
REPUR_API repur_status repur_classify_tail(const repur_scan* s, double upper_fraction, double clearance_bits,
                                           size_t min_bins, repur_tail_fit* out);
REPUR_API repur_status repur_tail_fit_format(const repur_tail_fit* f, repur_format fmt, char** out);

#ifdef __cplusplus
}
#endif

#endif
