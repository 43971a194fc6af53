#include "core/bit_regular.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ira {

std::vector<double> q_series(int q, int n_max) {
    if (q < 3) throw error(errc::invalid_parameter, "q_series: q must be >= 3");
    if (n_max < 2) throw error(errc::invalid_parameter, "q_series: n_max must be >= 2");
    double alpha = 1.0 / static_cast<double>(q - 1);
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    // |binom(alpha, k)| via the product formula; sign of (-1)^n binom(alpha, n-1)
    // is + for every n >= 2
    double babs = alpha;  // k = 1
    for (int n = 2; n <= n_max; ++n) {
        out[static_cast<std::size_t>(n)] = static_cast<double>(q) / n * babs;
        int k = n - 1;
        babs *= (static_cast<double>(k) - alpha) / (k + 1);
    }
    return out;
}

DegreeDistribution bit_regular_rho(int q, double p, int n_max) {
    if (q < 3) throw error(errc::invalid_parameter, "bit_regular_rho: q must be >= 3");
    if (!(p > 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "bit_regular_rho: p must be in (0,1)");
    if (n_max < 2) throw error(errc::invalid_parameter, "bit_regular_rho: n_max must be >= 2");

    std::vector<double> Q = q_series(q, n_max);
    std::vector<double> R(static_cast<std::size_t>(n_max) + 1, 0.0);
    const double pr = p / (1.0 - p);
    for (int n = 2; n <= n_max; ++n) {
        double conv = 0.0;
        for (int i = 2; i <= n - 2; ++i) conv += R[i] * Q[n - i];
        R[n] = Q[n] / (1.0 - p) - pr * conv;
    }

    DegreeDistribution dd;
    dd.coeffs.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    const double scale = 1.0 / (static_cast<double>(q) * (1.0 - p));
    for (int n = 2; n <= n_max; ++n) dd.coeffs[n] = static_cast<double>(n) * R[n] * scale;
    dd.analytic_sum = 1.0;                                   // rho(1) = 1
    dd.analytic_integral = 1.0 / (static_cast<double>(q) * (1.0 - p));
    dd.region = bit_regular_region(q, p);
    return dd;
}

DegreeDistribution bit_regular_lambda(int q) {
    if (q < 3) throw error(errc::invalid_parameter, "bit_regular_lambda: q must be >= 3");
    DegreeDistribution dd;
    dd.coeffs.assign(static_cast<std::size_t>(q) + 1, 0.0);
    dd.coeffs[q] = 1.0;
    dd.analytic_sum = 1.0;
    dd.analytic_integral = 1.0 / static_cast<double>(q);
    return dd;
}

TruncatedPair truncate_rho(const DegreeDistribution& rho, int q, double p, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw error(errc::invalid_parameter, "truncate_rho: epsilon must be in (0,1)");
    if (!rho.analytic_sum)
        throw error(errc::insufficient_depth,
                    "truncate_rho: tail cannot be certified without the analytic total");
    const double threshold = epsilon / (static_cast<double>(q) * (1.0 - p));
    const int depth = rho.max_degree();
    double prefix = 0.0;
    int M = -1;
    for (int m = 1; m <= depth; ++m) {
        if (m >= 2) prefix += rho.coeffs[m];
        double tail = *rho.analytic_sum - prefix;
        if (tail < threshold) { M = m; break; }
    }
    if (M < 0)
        throw error(errc::insufficient_depth,
                    "truncate_rho: stored coefficients cannot certify M(epsilon)");

    TruncatedPair pair;
    pair.kind = EnsembleKind::bit_regular;
    pair.q = q;
    pair.design_p = p;
    pair.epsilon = epsilon;
    pair.M = M;
    pair.pilot_fraction = 0.0;

    pair.rho.coeffs.assign(static_cast<std::size_t>(M) + 1, 0.0);
    double kept = 0.0;
    for (int n = 2; n <= M; ++n) {
        pair.rho.coeffs[n] = rho.coeffs[n];
        kept += rho.coeffs[n];
    }
    pair.rho.coeffs[1] = 1.0 - kept;  // tail mass moved to degree-1 checks
    pair.rho.region = rho.region;

    pair.lambda = bit_regular_lambda(q);
    pair.lambda.region = rho.region;
    pair.design_rate = design_rate(pair.lambda, pair.rho);
    return pair;
}

double rho_asymptotic(int q, double p, long long n) {
    if (q < 3) throw error(errc::invalid_parameter, "rho_asymptotic: q must be >= 3");
    if (n < 2) throw error(errc::invalid_parameter, "rho_asymptotic: n must be >= 2");
    const double dq = static_cast<double>(q);
    const double dn = static_cast<double>(n);
    const double expo = dq / (dq - 1.0);
    const double lead = std::pow(dn, -expo) / ((dq - 1.0) * std::tgamma((dq - 2.0) / (dq - 1.0)));
    double corr = 1.0;
    corr += dq / (2.0 * (dq - 1.0) * (dq - 1.0) * dn);
    corr -= 2.0 * p * dq * (2.0 * dq - 1.0) / ((dq - 1.0) * dn);
    if (q > 3) {
        // for q = 3 this term carries Gamma(0) in the denominator and vanishes
        corr += 4.0 * p * (dq + 1.0) * std::tgamma((dq - 2.0) / (dq - 1.0)) /
                (std::tgamma((dq - 3.0) / (dq - 1.0)) * std::pow(dn, expo));
    }
    return lead * corr;
}

}  // namespace ira
