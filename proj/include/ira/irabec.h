/*
 * irabec: capacity-approaching non-systematic IRA erasure codes for the BEC.
 *
 * C interface over the analysis core: degree-distribution synthesis and
 * truncation, density evolution, exact positivity verification, complexity
 * lower bounds, finite-length Tanner graph construction, an accumulator
 * encoder, a single-use-edge peeling decoder, and a Monte Carlo harness.
 *
 * All functions returning ira_status set a thread-local message retrievable
 * through ira_last_error() on failure. Strings returned through char** are
 * heap-allocated; release them with ira_string_free().
 */

#ifndef IRABEC_H
#define IRABEC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ira_status {
    IRA_OK = 0,
    IRA_ERR_INVALID = 1,       /* invalid parameter */
    IRA_ERR_DEPTH = 2,         /* insufficient coefficient depth */
    IRA_ERR_PRECISION = 3,     /* precision budget exhausted */
    IRA_ERR_DOMAIN = 4,        /* domain error */
    IRA_ERR_BRACKET = 5,       /* threshold bracket invalid */
    IRA_ERR_CONSTRUCTION = 6,  /* graph construction failed */
    IRA_ERR_QUANTIZATION = 7,  /* socket counts cannot be balanced */
    IRA_ERR_PILOT = 8,         /* nonzero pilot bit */
    IRA_ERR_INCONSISTENT = 9,  /* contradictory decoding constraint */
    IRA_ERR_IO = 10,
    IRA_ERR_PARSE = 11,
    IRA_ERR_VALIDATION = 12,
    IRA_ERR_CONJECTURAL = 13,  /* parameters covered only by conjecture */
    IRA_ERR_UNKNOWN = 14
} ira_status;

const char* ira_last_error(void);
void ira_string_free(char* s);

/* ------------------------------------------------ degree distributions */

typedef struct ira_dd ira_dd;     /* edge-perspective degree distribution */
typedef struct ira_pair ira_pair; /* epsilon-truncated d.d. pair */

/* Check d.d. of the bit-regular ensemble (lambda = x^{q-1}), q >= 3. */
ira_status ira_dd_bit_regular_rho(int q, double p, int n_max, ira_dd** out);

/* Bit d.d. of the check-regular ensemble (rho = x^2).
 * exact != 0 computes through exact rationals (p must be a small rational);
 * otherwise the extended-precision path (>= max(128, 4 n_max) bits) runs. */
ira_status ira_dd_check_regular_lambda(double p, int n_max, int exact, ira_dd** out);

/* Independent series-reversion computation of the same coefficients. */
ira_status ira_dd_lambda_reversion(double p, int n_max, int depth_cap, ira_dd** out);

void ira_dd_free(ira_dd* dd);
int ira_dd_max_degree(const ira_dd* dd);
double ira_dd_coeff(const ira_dd* dd, int n);
/* 1 when the parameters fall outside the proven positivity region */
int ira_dd_conjectural(const ira_dd* dd);
/* "n,coefficient" rows, 17 significant digits */
ira_status ira_dd_csv(const ira_dd* dd, char** out);
/* exact-mode dump with coefficients as num/den strings, p = p_num/p_den */
ira_status ira_lambda_exact_csv(long long p_num, long long p_den, int n_max, char** out);

/* Asymptotic coefficient estimates. */
ira_status ira_rho_asymptotic(int q, double p, long long n, double* out);
ira_status ira_lambda_asymptotic(double p, long long n, double* out);

/* --------------------------------------------------------- truncation */

ira_status ira_pair_truncate_rho(const ira_dd* rho, int q, double p, double epsilon,
                                 ira_pair** out);
ira_status ira_pair_truncate_lambda(const ira_dd* lambda, double p, double epsilon,
                                    ira_pair** out);
/* compute the d.d. to depth n_max and truncate in one call */
ira_status ira_pair_make(int bit_regular, int q, double p, double epsilon, int n_max,
                         ira_pair** out);
void ira_pair_free(ira_pair* pair);
int ira_pair_M(const ira_pair* pair);
double ira_pair_pilot_fraction(const ira_pair* pair);
double ira_pair_design_rate(const ira_pair* pair);
ira_status ira_pair_lambda_csv(const ira_pair* pair, char** out);
ira_status ira_pair_rho_csv(const ira_pair* pair, char** out);

/* ---------------------------------------------------- density evolution */

typedef struct ira_depair ira_depair;

ira_status ira_depair_from_pair(const ira_pair* pair, ira_depair** out);
ira_status ira_depair_untruncated(int bit_regular, int q, double p, int n_max, ira_depair** out);
void ira_depair_free(ira_depair* de);

ira_status ira_de_map(const ira_depair* de, double p, double x, double* f);
/* csv may be NULL when only the verdict is needed */
ira_status ira_de_margin_check(const ira_depair* de, double p, int grid_size, int* passes,
                               double* min_margin, char** csv);
ira_status ira_de_iterate(const ira_depair* de, double p, double x_init, int max_iters, double tol,
                          double* final_value, int* converged, int* iterations);
ira_status ira_threshold_search(const ira_depair* de, double p_lo, double p_hi, double tol,
                                double* p_star, double* bracket_width);

typedef struct ira_stability {
    int zero_ok;
    int one_unstable;
    double rhs_zero;
    double rhs_one;
    int rho_deriv_divergent;
    int lambda_deriv_divergent;
    int zero_equality_limit;
    int one_equality_limit;
    double lambda2;
    double rho2;
} ira_stability;

ira_status ira_stability_report(const ira_depair* de, double p, ira_stability* out);

/* --------------------------------------------------------- verification */

ira_status ira_rho_positivity_report(int q, int k_max, char** text, double* binding_p);
ira_status ira_lambda_nstar(double p_star, int* n_c11, int* n_c12, int* n_star);

/* status: 1 certified, 0 not positive, -1 inconclusive */
ira_status ira_verify_pn_positive(int n, double lo, double hi, int* status, char** witness);
/* exact agreement of the two coefficient recursions plus endpoint identities */
ira_status ira_pn_recursion_check(int n_max, char** text);
ira_status ira_pn_log_limit(int n, int grid_points, double* max_dev);

/* -------------------------------------------------------------- bounds */

ira_status ira_p_eff(double P_pct, double p, double* out);
ira_status ira_bec_bound(double epsilon, double p, double P_pct, int l_min, double* chi,
                         double* a_R, int* vacuous);
ira_status ira_mbios_bound(double epsilon, double C, double P_pct, double w, double* chi,
                           int* vacuous);
/* cross product of the three parameter lists */
ira_status ira_bounds_csv(const double* epsilons, int n_eps, const double* ps, int n_p,
                          const double* ppcts, int n_ppct, int l_min, char** csv);

/* ------------------------------------------------- graphs and decoding */

typedef struct ira_graph ira_graph;

ira_status ira_build_graph(const ira_pair* pair, long long N, unsigned long long seed,
                           int doping_count, int force_conjectural, ira_graph** out);
void ira_graph_free(ira_graph* g);
ira_status ira_graph_save(const ira_graph* g, const char* path);
ira_status ira_graph_load(const char* path, ira_graph** out);
long long ira_graph_K(const ira_graph* g);
long long ira_graph_N(const ira_graph* g);
long long ira_graph_doped_count(const ira_graph* g);
long long ira_graph_pilot_count(const ira_graph* g);
long long ira_graph_info_edges(const ira_graph* g);
double ira_graph_rate(const ira_graph* g);
double ira_graph_complexity(const ira_graph* g);

/* info: K bytes of 0/1 (pilot positions must be 0); code_out: N bytes;
 * doped_out (may be NULL): one byte per doped position */
ira_status ira_encode(const ira_graph* g, const unsigned char* info, unsigned char* code_out,
                      unsigned char* doped_out);
/* symbol values: 0, 1, or 2 = erased */
ira_status ira_transmit(const ira_graph* g, const unsigned char* code,
                        const unsigned char* doped, double p, unsigned long long seed,
                        unsigned char* code_sym_out, unsigned char* doped_sym_out);
ira_status ira_peel_decode(const ira_graph* g, const unsigned char* code_sym,
                           const unsigned char* doped_sym, unsigned char* info_out,
                           long long* unresolved, long long* edges_touched, int* iterations);

/* ---------------------------------------------------------- simulation */

ira_status ira_run_sweep_csv(const ira_pair* pair, const char* ensemble_id, const long long* Ns,
                             int n_N, const double* ps, int n_p, long long trials,
                             unsigned long long seed, int threads, int doping_count,
                             int force_conjectural, int fresh_graph_per_trial, char** csv);
ira_status ira_complexity_report_csv(const ira_pair* pair, const long long* Ns, int n_N,
                                     unsigned long long seed, int doping_count,
                                     int force_conjectural, char** csv);
/* two-column "p ber" rows for one block length, gnuplot-ready */
ira_status ira_run_sweep_gnuplot(const ira_pair* pair, const char* ensemble_id, long long N,
                                 const double* ps, int n_p, long long trials,
                                 unsigned long long seed, int threads, int doping_count,
                                 int force_conjectural, int fresh_graph_per_trial, char** table);

/* -------------------------------------------------------------- config */

/* load + validate a JSON config; returns the normalized JSON */
ira_status ira_config_load(const char* path, char** normalized_json);
ira_status ira_config_default(char** json);

#ifdef __cplusplus
}
#endif

#endif /* IRABEC_H */
