#include "ira/irabec.h"

#include <cstring>
#include <string>

#include "core/analysis.hpp"
#include "core/bit_regular.hpp"
#include "core/bounds.hpp"
#include "core/check_regular.hpp"
#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/graph.hpp"
#include "core/sim.hpp"
#include "core/verification.hpp"

namespace {

thread_local std::string g_last_error;

ira_status status_of(ira::errc c) {
    using ira::errc;
    switch (c) {
        case errc::invalid_parameter: return IRA_ERR_INVALID;
        case errc::insufficient_depth: return IRA_ERR_DEPTH;
        case errc::precision_exhausted: return IRA_ERR_PRECISION;
        case errc::domain_error: return IRA_ERR_DOMAIN;
        case errc::bracket_invalid: return IRA_ERR_BRACKET;
        case errc::construction_failed: return IRA_ERR_CONSTRUCTION;
        case errc::invalid_quantization: return IRA_ERR_QUANTIZATION;
        case errc::pilot_violation: return IRA_ERR_PILOT;
        case errc::decode_inconsistency: return IRA_ERR_INCONSISTENT;
        case errc::io_error: return IRA_ERR_IO;
        case errc::parse_error: return IRA_ERR_PARSE;
        case errc::validation_error: return IRA_ERR_VALIDATION;
        case errc::conjectural_refused: return IRA_ERR_CONJECTURAL;
    }
    return IRA_ERR_UNKNOWN;
}

template <typename F>
ira_status guarded(F&& f) {
    try {
        f();
        return IRA_OK;
    } catch (const ira::error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return IRA_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return IRA_ERR_UNKNOWN;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ira_status require(bool cond, const char* what) {
    if (cond) return IRA_OK;
    g_last_error = what;
    return IRA_ERR_INVALID;
}

}  // namespace

struct ira_dd {
    ira::DegreeDistribution dd;
};
struct ira_pair {
    ira::TruncatedPair pair;
};
struct ira_depair {
    ira::DEPair de;
    ira_depair(ira::DEPair d) : de(std::move(d)) {}
};
struct ira_graph {
    ira::TannerGraph g;
};

extern "C" {

const char* ira_last_error(void) { return g_last_error.c_str(); }

void ira_string_free(char* s) { std::free(s); }

/* ------------------------------------------------ degree distributions */

ira_status ira_dd_bit_regular_rho(int q, double p, int n_max, ira_dd** out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = new ira_dd{ira::bit_regular_rho(q, p, n_max)}; });
}

ira_status ira_dd_check_regular_lambda(double p, int n_max, int exact, ira_dd** out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] {
        auto mode = exact ? ira::LambdaMode::exact_rational : ira::LambdaMode::extended_precision;
        *out = new ira_dd{ira::check_regular_lambda(p, n_max, mode)};
    });
}

ira_status ira_dd_lambda_reversion(double p, int n_max, int depth_cap, ira_dd** out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] {
        *out = new ira_dd{ira::lambda_reversion_oracle(p, n_max, depth_cap > 0 ? depth_cap : 256)};
    });
}

void ira_dd_free(ira_dd* dd) { delete dd; }

int ira_dd_max_degree(const ira_dd* dd) { return dd ? dd->dd.max_degree() : 0; }

double ira_dd_coeff(const ira_dd* dd, int n) { return dd ? dd->dd.coeff(n) : 0.0; }

int ira_dd_conjectural(const ira_dd* dd) {
    return dd && dd->dd.region != ira::RegionStatus::proven ? 1 : 0;
}

ira_status ira_dd_csv(const ira_dd* dd, char** out) {
    if (ira_status s = require(dd && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(ira::dd_to_csv(dd->dd)); });
}

ira_status ira_lambda_exact_csv(long long p_num, long long p_den, int n_max, char** out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] {
        auto vals = ira::check_regular_lambda_exact(p_num, p_den, n_max);
        std::string csv = "n,coefficient\n";
        for (int n = 2; n <= n_max; ++n)
            csv += std::to_string(n) + "," + vals[static_cast<std::size_t>(n)].to_string() + "\n";
        *out = dup_string(csv);
    });
}

ira_status ira_rho_asymptotic(int q, double p, long long n, double* out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = ira::rho_asymptotic(q, p, n); });
}

ira_status ira_lambda_asymptotic(double p, long long n, double* out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = ira::lambda_asymptotic(p, n); });
}

/* --------------------------------------------------------- truncation */

ira_status ira_pair_truncate_rho(const ira_dd* rho, int q, double p, double epsilon,
                                 ira_pair** out) {
    if (ira_status s = require(rho && out, "null argument")) return s;
    return guarded([&] { *out = new ira_pair{ira::truncate_rho(rho->dd, q, p, epsilon)}; });
}

ira_status ira_pair_truncate_lambda(const ira_dd* lambda, double p, double epsilon,
                                    ira_pair** out) {
    if (ira_status s = require(lambda && out, "null argument")) return s;
    return guarded([&] { *out = new ira_pair{ira::truncate_lambda(lambda->dd, p, epsilon)}; });
}

ira_status ira_pair_make(int bit_regular, int q, double p, double epsilon, int n_max,
                         ira_pair** out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] {
        if (bit_regular) {
            ira::BitRegularSpec spec{q, p, epsilon};
            *out = new ira_pair{ira::make_truncated_pair(spec, n_max)};
        } else {
            ira::CheckRegularSpec spec{p, epsilon};
            *out = new ira_pair{ira::make_truncated_pair(spec, n_max)};
        }
    });
}

void ira_pair_free(ira_pair* pair) { delete pair; }

int ira_pair_M(const ira_pair* pair) { return pair ? pair->pair.M : 0; }

double ira_pair_pilot_fraction(const ira_pair* pair) {
    return pair ? pair->pair.pilot_fraction : 0.0;
}

double ira_pair_design_rate(const ira_pair* pair) { return pair ? pair->pair.design_rate : 0.0; }

ira_status ira_pair_lambda_csv(const ira_pair* pair, char** out) {
    if (ira_status s = require(pair && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(ira::dd_to_csv(pair->pair.lambda)); });
}

ira_status ira_pair_rho_csv(const ira_pair* pair, char** out) {
    if (ira_status s = require(pair && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(ira::dd_to_csv(pair->pair.rho)); });
}

/* ---------------------------------------------------- density evolution */

ira_status ira_depair_from_pair(const ira_pair* pair, ira_depair** out) {
    if (ira_status s = require(pair && out, "null argument")) return s;
    return guarded([&] { *out = new ira_depair(ira::DEPair::from_truncated(pair->pair)); });
}

ira_status ira_depair_untruncated(int bit_regular, int q, double p, int n_max, ira_depair** out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] {
        *out = new ira_depair(bit_regular ? ira::DEPair::untruncated_bit_regular(q, p, n_max)
                                          : ira::DEPair::untruncated_check_regular(p, n_max));
    });
}

void ira_depair_free(ira_depair* de) { delete de; }

ira_status ira_de_map(const ira_depair* de, double p, double x, double* f) {
    if (ira_status s = require(de && f, "null argument")) return s;
    return guarded([&] { *f = de->de.map(p, x); });
}

ira_status ira_de_margin_check(const ira_depair* de, double p, int grid_size, int* passes,
                               double* min_margin, char** csv) {
    if (ira_status s = require(de != nullptr, "de is null")) return s;
    return guarded([&] {
        ira::DEReport rep = ira::de_margin_check(de->de, p, grid_size);
        if (passes) *passes = rep.passes ? 1 : 0;
        if (min_margin) *min_margin = rep.min_margin;
        if (csv) *csv = dup_string(rep.to_csv());
    });
}

ira_status ira_de_iterate(const ira_depair* de, double p, double x_init, int max_iters, double tol,
                          double* final_value, int* converged, int* iterations) {
    if (ira_status s = require(de != nullptr, "de is null")) return s;
    return guarded([&] {
        ira::DETrajectory tr = ira::de_iterate(de->de, p, x_init, max_iters, tol);
        if (final_value) *final_value = tr.final_value;
        if (converged) *converged = tr.converged ? 1 : 0;
        if (iterations) *iterations = tr.iterations;
    });
}

ira_status ira_threshold_search(const ira_depair* de, double p_lo, double p_hi, double tol,
                                double* p_star, double* bracket_width) {
    if (ira_status s = require(de != nullptr, "de is null")) return s;
    return guarded([&] {
        ira::ThresholdResult r = ira::threshold_search(de->de, p_lo, p_hi, tol);
        if (p_star) *p_star = r.p_star;
        if (bracket_width) *bracket_width = r.bracket_width;
    });
}

ira_status ira_stability_report(const ira_depair* de, double p, ira_stability* out) {
    if (ira_status s = require(de && out, "null argument")) return s;
    return guarded([&] {
        ira::StabilityReport r = ira::stability_report(de->de, p);
        out->zero_ok = r.zero_ok ? 1 : 0;
        out->one_unstable = r.one_unstable ? 1 : 0;
        out->rhs_zero = r.rhs_zero;
        out->rhs_one = r.rhs_one;
        out->rho_deriv_divergent = r.rho_deriv_divergent ? 1 : 0;
        out->lambda_deriv_divergent = r.lambda_deriv_divergent ? 1 : 0;
        out->zero_equality_limit = r.zero_equality_limit ? 1 : 0;
        out->one_equality_limit = r.one_equality_limit ? 1 : 0;
        out->lambda2 = r.lambda2;
        out->rho2 = r.rho2;
    });
}

/* --------------------------------------------------------- verification */

ira_status ira_rho_positivity_report(int q, int k_max, char** text, double* binding_p) {
    return guarded([&] {
        ira::RhoPositivityReport rep = ira::rho_positivity_report(q, k_max);
        if (text) *text = dup_string(rep.to_text());
        if (binding_p) *binding_p = rep.binding_p.to_double();
    });
}

ira_status ira_lambda_nstar(double p_star, int* n_c11, int* n_c12, int* n_star) {
    return guarded([&] {
        ira::NStarResult r = ira::lambda_nstar(p_star);
        if (n_c11) *n_c11 = r.n_c11;
        if (n_c12) *n_c12 = r.n_c12;
        if (n_star) *n_star = r.n_star;
    });
}

ira_status ira_verify_pn_positive(int n, double lo, double hi, int* status, char** witness) {
    return guarded([&] {
        ira::PositivityResult r = ira::verify_pn_positive(n, lo, hi);
        if (status) {
            switch (r.status) {
                case ira::PositivityStatus::certified: *status = 1; break;
                case ira::PositivityStatus::not_positive: *status = 0; break;
                case ira::PositivityStatus::inconclusive: *status = -1; break;
            }
        }
        if (witness) *witness = dup_string(r.method + ": " + r.witness);
    });
}

ira_status ira_pn_recursion_check(int n_max, char** text) {
    return guarded([&] {
        auto pns = ira::pn_exact(n_max);  // throws on recursion disagreement
        // endpoint identities
        for (const auto& pn : pns) {
            long long n = pn.n;
            ira::Rational p0 = pn.coeff(0);
            ira::Rational expected0(ira::binomial(2 * n, n),
                                    ira::BigInt(2 * n - 1) * ira::BigInt::pow(ira::BigInt(4ll),
                                                                              static_cast<unsigned long long>(n)));
            ira::Rational p1;
            for (int i = 0; i <= pn.degree(); ++i) p1 += pn.coeff(i);
            ira::Rational expected1(
                ira::BigInt::pow(ira::BigInt(9ll), static_cast<unsigned long long>(n - 1)) *
                    ira::binomial(2 * n, n),
                ira::BigInt::pow(ira::BigInt(4ll), static_cast<unsigned long long>(n)));
            if (!(p0 == expected0) || !(p1 == expected1))
                throw ira::error(ira::errc::domain_error,
                                 "pn_recursion_check: endpoint identity failed at n=" +
                                     std::to_string(n));
        }
        if (text)
            *text = dup_string("both recursions and the endpoint identities agree exactly for n <= " +
                               std::to_string(n_max) + "\n");
    });
}

ira_status ira_pn_log_limit(int n, int grid_points, double* max_dev) {
    return guarded([&] {
        ira::PnPolynomial pn = ira::pn_single(n);
        std::vector<double> grid;
        int g = grid_points > 1 ? grid_points : 101;
        for (int i = 0; i <= g; ++i) grid.push_back(static_cast<double>(i) / g);
        double dev = ira::pn_log_limit_check(pn, grid);
        if (max_dev) *max_dev = dev;
    });
}

/* -------------------------------------------------------------- bounds */

ira_status ira_p_eff(double P_pct, double p, double* out) {
    if (ira_status s = require(out != nullptr, "out is null")) return s;
    return guarded([&] { *out = ira::p_eff(P_pct, p); });
}

ira_status ira_bec_bound(double epsilon, double p, double P_pct, int l_min, double* chi,
                         double* a_R, int* vacuous) {
    return guarded([&] {
        ira::BecBound b = ira::bec_complexity_bound(ira::PuncturedScenario::bec(epsilon, p, P_pct, l_min));
        if (chi) *chi = b.chi_lower;
        if (a_R) *a_R = b.a_R_lower;
        if (vacuous) *vacuous = b.vacuous ? 1 : 0;
    });
}

ira_status ira_mbios_bound(double epsilon, double C, double P_pct, double w, double* chi,
                           int* vacuous) {
    return guarded([&] {
        ira::PuncturedScenario s;
        s.epsilon = epsilon;
        s.C = C;
        s.P_pct = P_pct;
        s.w = w;
        ira::MbiosBound b = ira::mbios_complexity_bound(s);
        if (chi) *chi = b.chi_lower;
        if (vacuous) *vacuous = b.vacuous ? 1 : 0;
    });
}

ira_status ira_bounds_csv(const double* epsilons, int n_eps, const double* ps, int n_p,
                          const double* ppcts, int n_ppct, int l_min, char** csv) {
    if (ira_status s = require(epsilons && ps && ppcts && csv, "null argument")) return s;
    return guarded([&] {
        std::vector<ira::PuncturedScenario> rows;
        for (int i = 0; i < n_eps; ++i)
            for (int j = 0; j < n_p; ++j)
                for (int k = 0; k < n_ppct; ++k)
                    rows.push_back(
                        ira::PuncturedScenario::bec(epsilons[i], ps[j], ppcts[k], l_min));
        *csv = dup_string(ira::bounds_csv(rows));
    });
}

/* ------------------------------------------------- graphs and decoding */

ira_status ira_build_graph(const ira_pair* pair, long long N, unsigned long long seed,
                           int doping_count, int force_conjectural, ira_graph** out) {
    if (ira_status s = require(pair && out, "null argument")) return s;
    return guarded([&] {
        ira::BuildOptions opts;
        if (doping_count >= 0) opts.doping_count = doping_count;
        opts.force_conjectural = force_conjectural != 0;
        *out = new ira_graph{ira::build_graph(pair->pair, N, seed, opts)};
    });
}

void ira_graph_free(ira_graph* g) { delete g; }

ira_status ira_graph_save(const ira_graph* g, const char* path) {
    if (ira_status s = require(g && path, "null argument")) return s;
    return guarded([&] { g->g.save(path); });
}

ira_status ira_graph_load(const char* path, ira_graph** out) {
    if (ira_status s = require(path && out, "null argument")) return s;
    return guarded([&] { *out = new ira_graph{ira::TannerGraph::load(path)}; });
}

long long ira_graph_K(const ira_graph* g) { return g ? g->g.K : 0; }
long long ira_graph_N(const ira_graph* g) { return g ? g->g.N : 0; }
long long ira_graph_doped_count(const ira_graph* g) {
    return g ? static_cast<long long>(g->g.doped.size()) : 0;
}
long long ira_graph_pilot_count(const ira_graph* g) {
    return g ? static_cast<long long>(g->g.pilots.size()) : 0;
}
long long ira_graph_info_edges(const ira_graph* g) { return g ? g->g.info_edge_count() : 0; }
double ira_graph_rate(const ira_graph* g) { return g ? g->g.rate() : 0.0; }
double ira_graph_complexity(const ira_graph* g) { return g ? ira::graph_complexity(g->g) : 0.0; }

ira_status ira_encode(const ira_graph* g, const unsigned char* info, unsigned char* code_out,
                      unsigned char* doped_out) {
    if (ira_status s = require(g && info && code_out, "null argument")) return s;
    return guarded([&] {
        std::vector<std::uint8_t> in(info, info + g->g.K);
        ira::Codeword cw = ira::encode(g->g, in);
        std::memcpy(code_out, cw.code_bits.data(), cw.code_bits.size());
        if (doped_out && !cw.doped_bits.empty())
            std::memcpy(doped_out, cw.doped_bits.data(), cw.doped_bits.size());
    });
}

ira_status ira_transmit(const ira_graph* g, const unsigned char* code, const unsigned char* doped,
                        double p, unsigned long long seed, unsigned char* code_sym_out,
                        unsigned char* doped_sym_out) {
    if (ira_status s = require(g && code && code_sym_out, "null argument")) return s;
    return guarded([&] {
        ira::Codeword cw;
        cw.code_bits.assign(code, code + g->g.N);
        if (!g->g.doped.empty()) {
            if (!doped) throw ira::error(ira::errc::invalid_parameter, "doped bits missing");
            cw.doped_bits.assign(doped, doped + g->g.doped.size());
        }
        ira::ReceivedWord rx = ira::transmit(g->g, cw, p, seed);
        std::memcpy(code_sym_out, rx.code_sym.data(), rx.code_sym.size());
        if (doped_sym_out && !rx.doped_sym.empty())
            std::memcpy(doped_sym_out, rx.doped_sym.data(), rx.doped_sym.size());
    });
}

ira_status ira_peel_decode(const ira_graph* g, const unsigned char* code_sym,
                           const unsigned char* doped_sym, unsigned char* info_out,
                           long long* unresolved, long long* edges_touched, int* iterations) {
    if (ira_status s = require(g && code_sym && info_out, "null argument")) return s;
    return guarded([&] {
        ira::ReceivedWord rx;
        rx.code_sym.assign(code_sym, code_sym + g->g.N);
        if (!g->g.doped.empty()) {
            if (!doped_sym) throw ira::error(ira::errc::invalid_parameter, "doped symbols missing");
            rx.doped_sym.assign(doped_sym, doped_sym + g->g.doped.size());
        }
        ira::DecodeResult dec = ira::peel_decode(g->g, rx);
        std::memcpy(info_out, dec.recovered_info.data(), dec.recovered_info.size());
        if (unresolved) *unresolved = dec.unresolved_info;
        if (edges_touched) *edges_touched = dec.edges_touched;
        if (iterations) *iterations = dec.iterations;
    });
}

/* ---------------------------------------------------------- simulation */

ira_status ira_run_sweep_csv(const ira_pair* pair, const char* ensemble_id, const long long* Ns,
                             int n_N, const double* ps, int n_p, long long trials,
                             unsigned long long seed, int threads, int doping_count,
                             int force_conjectural, int fresh_graph_per_trial, char** csv) {
    if (ira_status s = require(pair && ensemble_id && Ns && ps && csv, "null argument")) return s;
    return guarded([&] {
        ira::SweepOptions opts;
        opts.threads = threads > 0 ? threads : 1;
        opts.fresh_graph_per_trial = fresh_graph_per_trial != 0;
        if (doping_count >= 0) opts.build.doping_count = doping_count;
        opts.build.force_conjectural = force_conjectural != 0;
        std::vector<long long> nl(Ns, Ns + n_N);
        std::vector<double> pl(ps, ps + n_p);
        auto records = ira::run_sweep(pair->pair, ensemble_id,
                                      std::vector<std::int64_t>(nl.begin(), nl.end()), pl, trials,
                                      seed, opts);
        *csv = dup_string(ira::summarize(records));
    });
}

ira_status ira_run_sweep_gnuplot(const ira_pair* pair, const char* ensemble_id, long long N,
                                 const double* ps, int n_p, long long trials,
                                 unsigned long long seed, int threads, int doping_count,
                                 int force_conjectural, int fresh_graph_per_trial, char** table) {
    if (ira_status s = require(pair && ensemble_id && ps && table, "null argument")) return s;
    return guarded([&] {
        ira::SweepOptions opts;
        opts.threads = threads > 0 ? threads : 1;
        opts.fresh_graph_per_trial = fresh_graph_per_trial != 0;
        if (doping_count >= 0) opts.build.doping_count = doping_count;
        opts.build.force_conjectural = force_conjectural != 0;
        std::vector<double> pl(ps, ps + n_p);
        auto records = ira::run_sweep(pair->pair, ensemble_id, {N}, pl, trials, seed, opts);
        *table = dup_string(ira::gnuplot_table(records, ensemble_id, N));
    });
}

ira_status ira_complexity_report_csv(const ira_pair* pair, const long long* Ns, int n_N,
                                     unsigned long long seed, int doping_count,
                                     int force_conjectural, char** csv) {
    if (ira_status s = require(pair && Ns && csv, "null argument")) return s;
    return guarded([&] {
        ira::BuildOptions opts;
        if (doping_count >= 0) opts.doping_count = doping_count;
        opts.force_conjectural = force_conjectural != 0;
        std::vector<std::int64_t> nl(Ns, Ns + n_N);
        auto rows = ira::complexity_report(pair->pair, nl, seed, opts);
        *csv = dup_string(ira::complexity_csv(rows));
    });
}

/* -------------------------------------------------------------- config */

ira_status ira_config_load(const char* path, char** normalized_json) {
    if (ira_status s = require(path != nullptr, "path is null")) return s;
    return guarded([&] {
        ira::Config c = ira::Config::load(path);
        if (normalized_json) *normalized_json = dup_string(c.to_json());
    });
}

ira_status ira_config_default(char** json) {
    if (ira_status s = require(json != nullptr, "json is null")) return s;
    return guarded([&] { *json = dup_string(ira::Config().to_json()); });
}

}  // extern "C"
