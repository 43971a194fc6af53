#ifndef IRA_CORE_BIT_REGULAR_HPP
#define IRA_CORE_BIT_REGULAR_HPP

#include <vector>

#include "core/degree_dist.hpp"

namespace ira {

// Coefficients Q_n, n = 2..n_max, of Q(x) = qx - (q-1)[1 - (1-x)^{q/(q-1)}].
// Q_n = ((-1)^n q / n) * binom(1/(q-1), n-1); all strictly positive.
// Entry [n] of the result holds Q_n; entries 0,1 are zero.
std::vector<double> q_series(int q, int n_max);

// Check d.d. of the bit-regular ensemble (lambda = x^{q-1}) on a BEC with
// erasure probability p, computed to degree n_max via the R_n convolution
// recursion and rho_n = n R_n / (q (1-p)).
DegreeDistribution bit_regular_rho(int q, double p, int n_max);

// The all-at-degree-q information-bit d.d.
DegreeDistribution bit_regular_lambda(int q);

// Epsilon-truncation: moves the tail mass beyond the minimal admissible M
// onto degree-1 checks. Requires rho deep enough to certify M.
TruncatedPair truncate_rho(const DegreeDistribution& rho, int q, double p, double epsilon);

// Asymptotic estimate of rho_{n+1} (leading term plus the three printed
// corrections; the third vanishes for q = 3).
double rho_asymptotic(int q, double p, long long n);

}  // namespace ira

#endif
