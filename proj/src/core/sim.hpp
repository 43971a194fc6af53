#ifndef IRA_CORE_SIM_HPP
#define IRA_CORE_SIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/degree_dist.hpp"
#include "core/graph.hpp"

namespace ira {

struct SimRecord {
    std::string ensemble;
    std::int64_t N = 0;
    double p_channel = 0.0;
    std::int64_t trials = 0;
    std::int64_t bit_errors = 0;
    std::int64_t info_bits_total = 0;
    std::int64_t word_errors = 0;
    double ber = 0.0;
    double wer = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

struct SweepOptions {
    bool fresh_graph_per_trial = false;  // ensemble-average mode
    int threads = 1;
    BuildOptions build;
};

// One graph per (spec, N) cell (seed-derived, independent of p); trials use
// counter-derived seeds so pooling and parallel order cannot change results.
std::vector<SimRecord> run_sweep(const TruncatedPair& pair, const std::string& ensemble_id,
                                 const std::vector<std::int64_t>& N_list,
                                 const std::vector<double>& p_list, std::int64_t trials,
                                 std::uint64_t seed, const SweepOptions& opts = {});

// Pools duplicate (ensemble, N, p) cells, recomputes rates and intervals,
// sorts, and renders the CSV.
std::string summarize(std::vector<SimRecord> records);

// Two-column "p ber" rows for one (ensemble, N), gnuplot-ready.
std::string gnuplot_table(const std::vector<SimRecord>& records, const std::string& ensemble,
                          std::int64_t N);

struct ComplexityRow {
    std::int64_t N = 0;
    double measured = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
};

// Analytic complexity cap for the pair: q + 2/((1-p)(1-eps)) for bit-regular,
// 5/((1-p)(1-eps)) for check-regular.
double complexity_bound(const TruncatedPair& pair);

std::vector<ComplexityRow> complexity_report(const TruncatedPair& pair,
                                             const std::vector<std::int64_t>& N_list,
                                             std::uint64_t seed, const BuildOptions& opts = {});

std::string complexity_csv(const std::vector<ComplexityRow>& rows);

// 95% Wilson interval for k successes in n trials.
void wilson_interval(std::int64_t k, std::int64_t n, double& lo, double& hi);

}  // namespace ira

#endif
