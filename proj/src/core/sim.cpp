#include "core/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <thread>
#include <tuple>

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace ira {

void wilson_interval(std::int64_t k, std::int64_t n, double& lo, double& hi) {
    if (n <= 0) { lo = hi = 0.0; return; }
    if (k == 0) {  // rule of three for zero-error cells
        lo = 0.0;
        hi = std::min(1.0, 3.0 / static_cast<double>(n));
        return;
    }
    const double z = 1.959963984540054;
    double nn = static_cast<double>(n);
    double phat = static_cast<double>(k) / nn;
    double z2n = z * z / nn;
    double denom = 1.0 + z2n;
    double center = (phat + z2n / 2.0) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2n / (4.0 * nn)) / denom;
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

namespace {

struct TrialCounts {
    std::int64_t bit_errors = 0;
    std::int64_t word_errors = 0;
};

std::uint64_t trial_seed(std::uint64_t seed, std::int64_t N, double p, std::int64_t trial) {
    std::uint64_t s = Rng::mix(seed, static_cast<std::uint64_t>(N));
    s = Rng::mix(s, std::bit_cast<std::uint64_t>(p));
    return Rng::mix(s, static_cast<std::uint64_t>(trial));
}

TrialCounts run_one_trial(const TannerGraph& g, double p, std::uint64_t tseed) {
    Rng data(Rng::mix(tseed, 0x64617461u));
    std::vector<std::uint8_t> info(static_cast<std::size_t>(g.K));
    for (auto& b : info) b = static_cast<std::uint8_t>(data.next() & 1u);
    for (auto v : g.pilots) info[static_cast<std::size_t>(v)] = 0;

    Codeword cw = encode(g, info);
    ReceivedWord rx = transmit(g, cw, p, Rng::mix(tseed, 0x626563u));
    DecodeResult dec = peel_decode(g, rx);

    TrialCounts out;
    for (std::int64_t v = 0; v < g.K; ++v) {
        if (g.is_pilot(static_cast<std::int32_t>(v))) continue;
        std::uint8_t r = dec.recovered_info[static_cast<std::size_t>(v)];
        if (r == SYM_ERASED || r != info[static_cast<std::size_t>(v)]) ++out.bit_errors;
    }
    if (out.bit_errors > 0) out.word_errors = 1;
    return out;
}

}  // namespace

std::vector<SimRecord> run_sweep(const TruncatedPair& pair, const std::string& ensemble_id,
                                 const std::vector<std::int64_t>& N_list,
                                 const std::vector<double>& p_list, std::int64_t trials,
                                 std::uint64_t seed, const SweepOptions& opts) {
    if (trials < 1) throw error(errc::invalid_parameter, "run_sweep: trials must be >= 1");
    std::vector<SimRecord> records;
    for (std::int64_t N : N_list) {
        std::uint64_t graph_seed = Rng::mix(Rng::mix(seed, static_cast<std::uint64_t>(N)), 0x67u);
        TannerGraph shared_graph;
        if (!opts.fresh_graph_per_trial) shared_graph = build_graph(pair, N, graph_seed, opts.build);
        for (double p : p_list) {
            TrialCounts total;
            std::int64_t info_bits_per_word =
                opts.fresh_graph_per_trial ? 0 : shared_graph.info_bit_count();
            std::int64_t info_bits_total = 0;

            auto run_range = [&](std::int64_t lo, std::int64_t hi, TrialCounts& acc,
                                 std::int64_t& bits_acc) {
                for (std::int64_t t = lo; t < hi; ++t) {
                    std::uint64_t ts = trial_seed(seed, N, p, t);
                    if (opts.fresh_graph_per_trial) {
                        TannerGraph g = build_graph(pair, N, Rng::mix(graph_seed, static_cast<std::uint64_t>(t)),
                                                    opts.build);
                        TrialCounts c = run_one_trial(g, p, ts);
                        acc.bit_errors += c.bit_errors;
                        acc.word_errors += c.word_errors;
                        bits_acc += g.info_bit_count();
                    } else {
                        TrialCounts c = run_one_trial(shared_graph, p, ts);
                        acc.bit_errors += c.bit_errors;
                        acc.word_errors += c.word_errors;
                        bits_acc += info_bits_per_word;
                    }
                }
            };

            int nthreads = std::max(1, opts.threads);
            if (nthreads == 1 || trials < 2 * nthreads) {
                run_range(0, trials, total, info_bits_total);
            } else {
                std::vector<TrialCounts> parts(static_cast<std::size_t>(nthreads));
                std::vector<std::int64_t> bits(static_cast<std::size_t>(nthreads), 0);
                std::vector<std::thread> pool;
                std::int64_t chunk = (trials + nthreads - 1) / nthreads;
                for (int w = 0; w < nthreads; ++w) {
                    std::int64_t lo = w * chunk, hi = std::min<std::int64_t>(trials, lo + chunk);
                    if (lo >= hi) break;
                    pool.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[static_cast<std::size_t>(w)], bits[static_cast<std::size_t>(w)]); });
                }
                for (auto& th : pool) th.join();
                for (int w = 0; w < nthreads; ++w) {
                    total.bit_errors += parts[static_cast<std::size_t>(w)].bit_errors;
                    total.word_errors += parts[static_cast<std::size_t>(w)].word_errors;
                    info_bits_total += bits[static_cast<std::size_t>(w)];
                }
            }

            SimRecord rec;
            rec.ensemble = ensemble_id;
            rec.N = N;
            rec.p_channel = p;
            rec.trials = trials;
            rec.bit_errors = total.bit_errors;
            rec.info_bits_total = info_bits_total;
            rec.word_errors = total.word_errors;
            rec.ber = info_bits_total > 0
                          ? static_cast<double>(total.bit_errors) / static_cast<double>(info_bits_total)
                          : 0.0;
            rec.wer = static_cast<double>(total.word_errors) / static_cast<double>(trials);
            wilson_interval(total.bit_errors, info_bits_total, rec.ci_low, rec.ci_high);
            rec.seed = seed;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string summarize(std::vector<SimRecord> records) {
    if (records.empty()) throw error(errc::invalid_parameter, "summarize: no records");
    std::map<std::tuple<std::string, std::int64_t, double>, SimRecord> pooled;
    for (auto& r : records) {
        auto key = std::make_tuple(r.ensemble, r.N, r.p_channel);
        auto it = pooled.find(key);
        if (it == pooled.end()) {
            pooled.emplace(key, r);
        } else {
            SimRecord& a = it->second;
            a.trials += r.trials;
            a.bit_errors += r.bit_errors;
            a.info_bits_total += r.info_bits_total;
            a.word_errors += r.word_errors;
            a.seed = std::min(a.seed, r.seed);
        }
    }
    std::string out = "ensemble,N,p,trials,bit_errors,info_bits,ber,wer,ci_low,ci_high,seed\n";
    char buf[512];
    for (auto& [key, r] : pooled) {
        r.ber = r.info_bits_total > 0
                    ? static_cast<double>(r.bit_errors) / static_cast<double>(r.info_bits_total)
                    : 0.0;
        r.wer = r.trials > 0 ? static_cast<double>(r.word_errors) / static_cast<double>(r.trials)
                             : 0.0;
        wilson_interval(r.bit_errors, r.info_bits_total, r.ci_low, r.ci_high);
        std::snprintf(buf, sizeof buf, "%s,%lld,%.17g,%lld,%lld,%lld,%.17g,%.17g,%.17g,%.17g,%llu\n",
                      r.ensemble.c_str(), static_cast<long long>(r.N), r.p_channel,
                      static_cast<long long>(r.trials), static_cast<long long>(r.bit_errors),
                      static_cast<long long>(r.info_bits_total), r.ber, r.wer, r.ci_low, r.ci_high,
                      static_cast<unsigned long long>(r.seed));
        out += buf;
    }
    return out;
}

std::string gnuplot_table(const std::vector<SimRecord>& records, const std::string& ensemble,
                          std::int64_t N) {
    std::vector<const SimRecord*> sel;
    for (const auto& r : records)
        if (r.ensemble == ensemble && r.N == N) sel.push_back(&r);
    std::sort(sel.begin(), sel.end(),
              [](const SimRecord* a, const SimRecord* b) { return a->p_channel < b->p_channel; });
    std::string out;
    char buf[80];
    for (const auto* r : sel) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", r->p_channel, r->ber);
        out += buf;
    }
    return out;
}

double complexity_bound(const TruncatedPair& pair) {
    double denom = (1.0 - pair.design_p) * (1.0 - pair.epsilon);
    if (pair.kind == EnsembleKind::bit_regular) return static_cast<double>(pair.q) + 2.0 / denom;
    return 5.0 / denom;
}

std::vector<ComplexityRow> complexity_report(const TruncatedPair& pair,
                                             const std::vector<std::int64_t>& N_list,
                                             std::uint64_t seed, const BuildOptions& opts) {
    std::vector<ComplexityRow> rows;
    double bound = complexity_bound(pair);
    for (std::int64_t N : N_list) {
        TannerGraph g = build_graph(pair, N, Rng::mix(seed, static_cast<std::uint64_t>(N)), opts);
        ComplexityRow r;
        r.N = N;
        r.measured = graph_complexity(g);
        r.bound = bound;
        r.ratio = r.measured / bound;
        rows.push_back(r);
    }
    return rows;
}

std::string complexity_csv(const std::vector<ComplexityRow>& rows) {
    std::string out = "N,measured,bound,ratio\n";
    char buf[160];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g\n", static_cast<long long>(r.N),
                      r.measured, r.bound, r.ratio);
        out += buf;
    }
    return out;
}

}  // namespace ira
