// ira: command-line front end for the irabec library.
//
// Subcommands: dd, truncate, de, threshold, verify, bounds, build, simulate,
// complexity. Data goes to stdout (or --out); diagnostics go to stderr.
// Exit codes: 0 success, 1 analysis failure, 2 usage error, 3 construction
// failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ira/irabec.h"

namespace {

constexpr int EXIT_ANALYSIS = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_CONSTRUCTION = 3;

struct Globals {
    unsigned long long seed = 1;
    std::string out;
    int threads = 1;
    bool force_conjectural = false;
    bool long_running = false;
};

struct EnsembleArgs {
    std::string ensemble = "check-regular";
    int q = 3;
    std::string p = "0.5";  // decimal or "num/den"
    double epsilon = 0.1;
    int n_max = 10000;
    int doping = 150;
};

[[noreturn]] void die(ira_status s) {
    const char* code = "error";
    switch (s) {
        case IRA_ERR_INVALID: code = "invalid-parameter"; break;
        case IRA_ERR_DEPTH: code = "insufficient-depth"; break;
        case IRA_ERR_PRECISION: code = "precision-exhausted"; break;
        case IRA_ERR_DOMAIN: code = "domain-error"; break;
        case IRA_ERR_BRACKET: code = "bracket-invalid"; break;
        case IRA_ERR_CONSTRUCTION: code = "construction-failed"; break;
        case IRA_ERR_QUANTIZATION: code = "invalid-quantization"; break;
        case IRA_ERR_PILOT: code = "pilot-violation"; break;
        case IRA_ERR_INCONSISTENT: code = "decode-inconsistency"; break;
        case IRA_ERR_IO: code = "io-error"; break;
        case IRA_ERR_PARSE: code = "parse-error"; break;
        case IRA_ERR_VALIDATION: code = "validation-error"; break;
        case IRA_ERR_CONJECTURAL: code = "conjectural-refused"; break;
        default: break;
    }
    std::fprintf(stderr, "error: %s: %s\n", code, ira_last_error());
    int rc = EXIT_ANALYSIS;
    if (s == IRA_ERR_INVALID || s == IRA_ERR_VALIDATION || s == IRA_ERR_PARSE) rc = EXIT_USAGE;
    if (s == IRA_ERR_CONSTRUCTION || s == IRA_ERR_QUANTIZATION || s == IRA_ERR_CONJECTURAL)
        rc = EXIT_CONSTRUCTION;
    std::exit(rc);
}

void check(ira_status s) {
    if (s != IRA_OK) die(s);
}

void emit(const Globals& g, const std::string& data) {
    if (g.out.empty()) {
        std::fwrite(data.data(), 1, data.size(), stdout);
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: io-error: cannot open %s\n", g.out.c_str());
        std::exit(EXIT_ANALYSIS);
    }
    f << data;
}

std::string grab(char* s) {
    std::string out = s ? s : "";
    ira_string_free(s);
    return out;
}

bool parse_p(const std::string& text, double& value, long long& num, long long& den) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        try {
            num = std::stoll(text.substr(0, slash));
            den = std::stoll(text.substr(slash + 1));
        } catch (...) {
            return false;
        }
        if (den <= 0 || num <= 0 || num >= den) return false;
        value = static_cast<double>(num) / static_cast<double>(den);
        return true;
    }
    try {
        value = std::stod(text);
    } catch (...) {
        return false;
    }
    num = den = 0;
    return value > 0.0 && value < 1.0;
}

ira_pair* make_pair_checked(const EnsembleArgs& e, double p) {
    ira_pair* pair = nullptr;
    check(ira_pair_make(e.ensemble == "bit-regular" ? 1 : 0, e.q, p, e.epsilon, e.n_max, &pair));
    return pair;
}

void add_ensemble_options(CLI::App* cmd, EnsembleArgs& e) {
    cmd->add_option("--ensemble", e.ensemble, "bit-regular | check-regular")
        ->check(CLI::IsMember({"bit-regular", "check-regular"}));
    cmd->add_option("--q", e.q, "repetition degree (bit-regular)");
    cmd->add_option("--p", e.p, "design erasure probability (decimal or num/den)");
    cmd->add_option("--epsilon", e.epsilon, "capacity gap");
    cmd->add_option("--n-max", e.n_max, "coefficient depth cap");
    cmd->add_option("--doping", e.doping, "doped systematic bits (bit-regular)");
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

std::vector<double> parse_d_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity-approaching non-systematic IRA codes on the binary erasure channel"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config with defaults");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--out", g.out, "write data here instead of stdout");
    app.add_option("--threads", g.threads, "worker cap for simulation");
    app.add_flag("--force-conjectural", g.force_conjectural,
                 "permit parameter regions covered only by conjecture");
    app.add_flag("--long-running", g.long_running, "unlock the large exact positivity check");

    EnsembleArgs e;

    // load config defaults before real parsing so flags can override them
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--config") == 0) {
            char* json = nullptr;
            check(ira_config_load(argv[i + 1], &json));
            auto j = nlohmann::json::parse(grab(json));
            e.ensemble = j["ensemble"].get<std::string>();
            e.q = j["q"].get<int>();
            {
                std::ostringstream ps;
                ps.precision(17);
                ps << j["p"].get<double>();
                e.p = ps.str();
            }
            e.epsilon = j["epsilon"].get<double>();
            e.n_max = j["n_max"].get<int>();
            e.doping = j["doping_count"].get<int>();
            g.seed = j["seed"].get<unsigned long long>();
            g.threads = j["threads"].get<int>();
            g.out = j["out"].get<std::string>();
        }
    }

    // ---- dd
    auto* dd_cmd = app.add_subcommand("dd", "compute degree-distribution coefficients");
    dd_cmd->fallthrough();
    add_ensemble_options(dd_cmd, e);
    std::string dd_mode = "recursion";
    dd_cmd->add_option("--mode", dd_mode, "recursion | exact | reversion")
        ->check(CLI::IsMember({"recursion", "exact", "reversion"}));
    int oracle_depth = 256;
    dd_cmd->add_option("--oracle-depth", oracle_depth, "reversion depth cap");

    // ---- truncate
    auto* tr_cmd = app.add_subcommand("truncate", "epsilon-truncate a d.d. pair");
    tr_cmd->fallthrough();
    add_ensemble_options(tr_cmd, e);
    std::string tr_dump;
    tr_cmd->add_option("--dump", tr_dump, "also dump a component: lambda | rho")
        ->check(CLI::IsMember({"", "lambda", "rho"}));

    // ---- de
    auto* de_cmd = app.add_subcommand("de", "density-evolution margin report");
    de_cmd->fallthrough();
    add_ensemble_options(de_cmd, e);
    double channel_p = -1.0;
    int grid_size = 10000;
    bool de_untruncated = false;
    bool de_stability = false;
    de_cmd->add_option("--channel-p", channel_p, "channel erasure probability (default: design p)");
    de_cmd->add_option("--grid", grid_size, "grid size");
    de_cmd->add_flag("--untruncated", de_untruncated, "analyze the untruncated pair");
    de_cmd->add_flag("--stability", de_stability, "print the endpoint stability report instead");

    // ---- threshold
    auto* th_cmd = app.add_subcommand("threshold", "bisect the decoding threshold");
    th_cmd->fallthrough();
    add_ensemble_options(th_cmd, e);
    double p_lo = 0.05, p_hi = 0.99, tol = 1e-6;
    th_cmd->add_option("--p-lo", p_lo, "bracket low");
    th_cmd->add_option("--p-hi", p_hi, "bracket high");
    th_cmd->add_option("--tol", tol, "bracket tolerance");

    // ---- verify
    auto* ve_cmd = app.add_subcommand("verify", "exact verification reports");
    ve_cmd->fallthrough();
    ve_cmd->require_subcommand(1);
    auto* ve_nstar = ve_cmd->add_subcommand("nstar", "positivity index thresholds");
    ve_nstar->fallthrough();
    double p_star = 0.95;
    bool check_positivity = false;
    ve_nstar->add_option("--p-star", p_star, "right end of the p interval");
    ve_nstar->add_flag("--check-positivity", check_positivity,
                       "also certify the polynomial at n*");
    auto* ve_pn = ve_cmd->add_subcommand("pn-positive", "certify P_n > 0 on [lo, hi]");
    ve_pn->fallthrough();
    int pn_n = 57;
    double pn_lo = 0.0, pn_hi = 1.0;
    ve_pn->add_option("--n", pn_n, "polynomial index");
    ve_pn->add_option("--lo", pn_lo, "interval start");
    ve_pn->add_option("--hi", pn_hi, "interval end");
    auto* ve_rho = ve_cmd->add_subcommand("rho-positivity", "check d.d. coefficient domination");
    ve_rho->fallthrough();
    int rho_q = 3, rho_kmax = 100;
    ve_rho->add_option("--q", rho_q, "repetition degree");
    ve_rho->add_option("--k-max", rho_kmax, "series depth");
    auto* ve_rec = ve_cmd->add_subcommand("recursions", "exact recursion cross-check");
    ve_rec->fallthrough();
    int rec_nmax = 200;
    ve_rec->add_option("--n-max", rec_nmax, "depth");
    auto* ve_log = ve_cmd->add_subcommand("log-limit", "log-scale polynomial limit diagnostic");
    ve_log->fallthrough();
    int log_n = 100, log_grid = 101;
    ve_log->add_option("--n", log_n, "polynomial index");
    ve_log->add_option("--grid", log_grid, "grid points");

    // ---- bounds
    auto* bo_cmd = app.add_subcommand("bounds", "complexity lower bounds for punctured codes");
    bo_cmd->fallthrough();
    std::string bo_eps = "0.0001", bo_p = "0.5", bo_ppct = "0.9";
    int l_min = 2;
    bo_cmd->add_option("--epsilon", bo_eps, "comma list of capacity gaps");
    bo_cmd->add_option("--p", bo_p, "comma list of BEC erasure probabilities");
    bo_cmd->add_option("--p-pct", bo_ppct, "comma list of puncturing rates");
    bo_cmd->add_option("--l-min", l_min, "minimum parity-side check edges");

    // ---- build
    auto* bu_cmd = app.add_subcommand("build", "construct a finite-length Tanner graph");
    bu_cmd->fallthrough();
    add_ensemble_options(bu_cmd, e);
    long long build_N = 8192;
    bu_cmd->add_option("--n", build_N, "block length (code bits)");

    // ---- simulate
    auto* si_cmd = app.add_subcommand("simulate", "Monte Carlo BER/WER sweep");
    si_cmd->fallthrough();
    add_ensemble_options(si_cmd, e);
    std::string si_N = "8192", si_p = "0.3,0.4";
    long long trials = 100;
    bool fresh_graph = false;
    si_cmd->add_option("--n-list", si_N, "comma list of block lengths");
    si_cmd->add_option("--p-list", si_p, "comma list of channel erasure probabilities");
    si_cmd->add_option("--trials", trials, "trials per cell");
    si_cmd->add_flag("--fresh-graph", fresh_graph, "new random graph per trial");
    bool si_gnuplot = false;
    si_cmd->add_flag("--gnuplot", si_gnuplot, "emit two-column p/BER tables per block length");

    // ---- complexity
    auto* co_cmd = app.add_subcommand("complexity", "edges per information bit vs the bound");
    co_cmd->fallthrough();
    add_ensemble_options(co_cmd, e);
    std::string co_N = "8192,65536";
    co_cmd->add_option("--n-list", co_N, "comma list of block lengths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& h) {
        return app.exit(h);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return EXIT_USAGE;
    }

    double p_value = 0.0;
    long long p_num = 0, p_den = 0;
    if (!parse_p(e.p, p_value, p_num, p_den)) {
        std::fprintf(stderr, "error: invalid-parameter: --p must lie in (0,1)\n");
        return EXIT_USAGE;
    }
    const bool bitreg = e.ensemble == "bit-regular";

    if (dd_cmd->parsed()) {
        // the check-regular recursions carry max(128, 4 n_max)-bit precision;
        // keep the implicit default shallow
        if (!bitreg && dd_cmd->count("--n-max") == 0 && config_path.empty()) e.n_max = 100;
        char* csv = nullptr;
        if (bitreg) {
            ira_dd* dd = nullptr;
            check(ira_dd_bit_regular_rho(e.q, p_value, e.n_max, &dd));
            if (ira_dd_conjectural(dd))
                std::fprintf(stderr, "note: parameters lie outside the proven positivity region\n");
            check(ira_dd_csv(dd, &csv));
            ira_dd_free(dd);
        } else if (dd_mode == "exact") {
            if (p_den == 0) {
                std::fprintf(stderr,
                             "error: invalid-parameter: exact mode needs --p given as num/den\n");
                return EXIT_USAGE;
            }
            check(ira_lambda_exact_csv(p_num, p_den, e.n_max, &csv));
        } else {
            ira_dd* dd = nullptr;
            if (dd_mode == "reversion")
                check(ira_dd_lambda_reversion(p_value, e.n_max, oracle_depth, &dd));
            else
                check(ira_dd_check_regular_lambda(p_value, e.n_max, 0, &dd));
            if (ira_dd_conjectural(dd))
                std::fprintf(stderr, "note: parameters lie outside the proven positivity region\n");
            check(ira_dd_csv(dd, &csv));
            ira_dd_free(dd);
        }
        emit(g, grab(csv));
        return 0;
    }

    if (tr_cmd->parsed()) {
        ira_pair* pair = make_pair_checked(e, p_value);
        std::string out;
        if (tr_dump == "lambda") {
            char* csv = nullptr;
            check(ira_pair_lambda_csv(pair, &csv));
            out = grab(csv);
        } else if (tr_dump == "rho") {
            char* csv = nullptr;
            check(ira_pair_rho_csv(pair, &csv));
            out = grab(csv);
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "M,pilot_fraction,design_rate\n%d,%.17g,%.17g\n",
                          ira_pair_M(pair), ira_pair_pilot_fraction(pair),
                          ira_pair_design_rate(pair));
            out = buf;
        }
        ira_pair_free(pair);
        emit(g, out);
        return 0;
    }

    if (de_cmd->parsed()) {
        ira_depair* de = nullptr;
        if (de_untruncated) {
            check(ira_depair_untruncated(bitreg ? 1 : 0, e.q, p_value, e.n_max, &de));
        } else {
            ira_pair* pair = make_pair_checked(e, p_value);
            check(ira_depair_from_pair(pair, &de));
            ira_pair_free(pair);
        }
        double pch = channel_p >= 0.0 ? channel_p : p_value;
        if (de_stability) {
            ira_stability st;
            check(ira_stability_report(de, pch, &st));
            char buf[512];
            std::snprintf(buf, sizeof buf,
                          "condition,holds,rhs,coefficient,deriv_divergent,equality_limit\n"
                          "x0,%d,%.17g,%.17g,%d,%d\nx1,%d,%.17g,%.17g,%d,%d\n",
                          st.zero_ok, st.rhs_zero, st.lambda2, st.rho_deriv_divergent,
                          st.zero_equality_limit, st.one_unstable, st.rhs_one, st.rho2,
                          st.lambda_deriv_divergent, st.one_equality_limit);
            ira_depair_free(de);
            emit(g, buf);
            return 0;
        }
        int passes = 0;
        double min_margin = 0.0;
        char* csv = nullptr;
        check(ira_de_margin_check(de, pch, grid_size, &passes, &min_margin, &csv));
        ira_depair_free(de);
        emit(g, grab(csv));
        if (!passes) {
            std::fprintf(stderr, "note: DE condition fails at p=%.17g (min margin %.3g)\n", pch,
                         min_margin);
            return EXIT_ANALYSIS;
        }
        return 0;
    }

    if (th_cmd->parsed()) {
        ira_pair* pair = make_pair_checked(e, p_value);
        ira_depair* de = nullptr;
        check(ira_depair_from_pair(pair, &de));
        ira_pair_free(pair);
        double pstar = 0, width = 0;
        check(ira_threshold_search(de, p_lo, p_hi, tol, &pstar, &width));
        ira_depair_free(de);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pstar, width);
        emit(g, buf);
        return 0;
    }

    if (ve_cmd->parsed()) {
        if (ve_nstar->parsed()) {
            int c11 = 0, c12 = 0, ns = 0;
            auto t0 = std::chrono::steady_clock::now();
            check(ira_lambda_nstar(p_star, &c11, &c12, &ns));
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            std::string out;
            char buf[160];
            std::snprintf(buf, sizeof buf, "n_c11,n_c12,n_star,runtime_seconds\n%d,%d,%d,%.3f\n",
                          c11, c12, ns, secs);
            out = buf;
            if (check_positivity) {
                if (ns > 600 && !g.long_running) {
                    std::fprintf(stderr,
                                 "error: invalid-parameter: certifying P_%d needs --long-running "
                                 "(expect minutes of exact arithmetic and hundreds of MB)\n",
                                 ns);
                    return EXIT_USAGE;
                }
                int status = 0;
                char* witness = nullptr;
                check(ira_verify_pn_positive(ns, 0.5, 1.0, &status, &witness));
                out += "positivity: " + grab(witness) + "\n";
                emit(g, out);
                return status == 1 ? 0 : EXIT_ANALYSIS;
            }
            emit(g, out);
            return 0;
        }
        if (ve_pn->parsed()) {
            if (pn_n > 600 && !g.long_running) {
                std::fprintf(stderr, "error: invalid-parameter: n > 600 needs --long-running\n");
                return EXIT_USAGE;
            }
            int status = 0;
            char* witness = nullptr;
            check(ira_verify_pn_positive(pn_n, pn_lo, pn_hi, &status, &witness));
            emit(g, grab(witness) + "\n");
            return status == 1 ? 0 : EXIT_ANALYSIS;
        }
        if (ve_rho->parsed()) {
            char* text = nullptr;
            check(ira_rho_positivity_report(rho_q, rho_kmax, &text, nullptr));
            emit(g, grab(text));
            return 0;
        }
        if (ve_rec->parsed()) {
            char* text = nullptr;
            check(ira_pn_recursion_check(rec_nmax, &text));
            emit(g, grab(text));
            return 0;
        }
        if (ve_log->parsed()) {
            double dev = 0.0;
            check(ira_pn_log_limit(log_n, log_grid, &dev));
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g\n", dev);
            emit(g, buf);
            return 0;
        }
    }

    if (bo_cmd->parsed()) {
        auto eps = parse_d_list(bo_eps);
        auto ps = parse_d_list(bo_p);
        auto pcts = parse_d_list(bo_ppct);
        char* csv = nullptr;
        check(ira_bounds_csv(eps.data(), static_cast<int>(eps.size()), ps.data(),
                             static_cast<int>(ps.size()), pcts.data(),
                             static_cast<int>(pcts.size()), l_min, &csv));
        emit(g, grab(csv));
        return 0;
    }

    if (bu_cmd->parsed()) {
        ira_pair* pair = make_pair_checked(e, p_value);
        ira_graph* graph = nullptr;
        check(ira_build_graph(pair, build_N, g.seed, e.doping, g.force_conjectural ? 1 : 0,
                              &graph));
        ira_pair_free(pair);
        std::string path = g.out.empty() ? "graph.txt" : g.out;
        check(ira_graph_save(graph, path.c_str()));
        std::fprintf(stderr, "note: K=%lld N=%lld rate=%.6f complexity=%.4f -> %s\n",
                     ira_graph_K(graph), ira_graph_N(graph), ira_graph_rate(graph),
                     ira_graph_complexity(graph), path.c_str());
        ira_graph_free(graph);
        return 0;
    }

    if (si_cmd->parsed()) {
        ira_pair* pair = make_pair_checked(e, p_value);
        auto Ns = parse_ll_list(si_N);
        auto ps = parse_d_list(si_p);
        char ensemble_id[96];
        std::snprintf(ensemble_id, sizeof ensemble_id, "%s(q=%d,p=%.6g,eps=%.6g)",
                      e.ensemble.c_str(), bitreg ? e.q : 3, p_value, e.epsilon);
        char* csv = nullptr;
        if (si_gnuplot) {
            std::string out;
            for (long long N : Ns) {
                check(ira_run_sweep_gnuplot(pair, ensemble_id, N, ps.data(),
                                            static_cast<int>(ps.size()), trials, g.seed, g.threads,
                                            e.doping, g.force_conjectural ? 1 : 0,
                                            fresh_graph ? 1 : 0, &csv));
                out += "# " + std::string(ensemble_id) + " N=" + std::to_string(N) + "\n";
                out += grab(csv);
            }
            ira_pair_free(pair);
            emit(g, out);
            return 0;
        }
        check(ira_run_sweep_csv(pair, ensemble_id, Ns.data(), static_cast<int>(Ns.size()),
                                ps.data(), static_cast<int>(ps.size()), trials, g.seed, g.threads,
                                e.doping, g.force_conjectural ? 1 : 0, fresh_graph ? 1 : 0, &csv));
        ira_pair_free(pair);
        emit(g, grab(csv));
        return 0;
    }

    if (co_cmd->parsed()) {
        ira_pair* pair = make_pair_checked(e, p_value);
        auto Ns = parse_ll_list(co_N);
        char* csv = nullptr;
        check(ira_complexity_report_csv(pair, Ns.data(), static_cast<int>(Ns.size()), g.seed,
                                        e.doping, g.force_conjectural ? 1 : 0, &csv));
        ira_pair_free(pair);
        emit(g, grab(csv));
        return 0;
    }

    return EXIT_USAGE;
}
