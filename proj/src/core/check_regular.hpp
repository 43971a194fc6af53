#ifndef IRA_CORE_CHECK_REGULAR_HPP
#define IRA_CORE_CHECK_REGULAR_HPP

#include <vector>

#include "core/bigfloat.hpp"
#include "core/bignum.hpp"
#include "core/degree_dist.hpp"

namespace ira {

enum class LambdaMode { exact_rational, extended_precision };

// Integer form of the lambda coefficient recursion
//   a_i^{(m+1)} = [(2m-3i-1)(a_i - 2 a_{i-2}) + (20m-3i-1) a_{i-1}] / (2(m+1)),
//   a_0^{(1)} = 1/2.
// The row is carried as integers A_i with a shared denominator D_n = 2^n n!,
// scaled so that A_i / (D_n v^{2(n-1)}) = a_i^{(n)} (u/v)^i. With u = v = 1 the
// row is the raw a-coefficients of P_n; with u/v = p the row sum yields P_n(p)
// and hence lambda_{n+1}(p) without a separate polynomial evaluation.
class LambdaRowEngine {
public:
    LambdaRowEngine(long long u, long long v);
    void step();
    int index() const { return n_; }  // current row corresponds to P_n
    const std::vector<BigInt>& row() const { return row_; }
    const BigInt& denom() const { return den_; }          // D_n
    const BigInt& pow_1p2p() const { return pow_1p2p_; }  // (v+2u)^{2n-1}
    BigInt row_sum() const;
    // lambda_{n+1}(u/v) = (v-u) * row_sum / (D_n (v+2u)^{2n-1})
    Rational lambda_value() const;
    double lambda_value_double() const;

private:
    std::vector<BigInt> row_;
    BigInt den_;
    BigInt pow_1p2p_;
    long long u_, v_;
    int n_ = 1;
};

// d.d. of the information bits for the check-regular ensemble (rho = x^2).
// exact_rational mode requires p to be (within 1e-13) a rational with
// denominator <= 10^6; extended_precision mode runs the same recursion in
// software floats of max(128, 4 n_max) bits.
DegreeDistribution check_regular_lambda(double p, int n_max, LambdaMode mode);

// Exact values lambda_2 .. lambda_{n_max} at rational p; entry [n] = lambda_n.
std::vector<Rational> check_regular_lambda_exact(long long u, long long v, int n_max);

// Hybrid for deep tails: the extended engine up to n = 600, the asymptotic
// expansion beyond. Head coefficients carry full precision; the tail has
// relative error O(1/n) (about 0.3% at the switch for p <= 0.5, growing as
// p -> 1). Intended for derivative sums and tail diagnostics at depths where
// the 4n-bit extended mode would be needlessly slow.
DegreeDistribution check_regular_lambda_fast(double p, int n_max);

// Independent check: power-series reversion of the explicit series of
//   lambda^{-1}(x) = 1 - ((1-p)/(1-p(1-x)^3))^2 (1-x)^2
// around x = 0, evaluated through the coefficient extraction
//   lambda_n = [x^{n-2}] phi^{n-1}(x) / (n-1),  phi = x / lambda^{-1}(x).
DegreeDistribution lambda_reversion_oracle(double p, int n_max, int max_depth = 256);

// Pilot-bit truncation: keep degrees 2..M where M is minimal with
// tail(sum lambda_n/n) < (1-p) eps / 3; the dropped node mass becomes pilots.
TruncatedPair truncate_lambda(const DegreeDistribution& lambda, double p, double epsilon);

// Asymptotic estimate of the coefficient with subscript n+1. Following the
// reported reference values, the expansion is evaluated at the subscript
// index itself.
double lambda_asymptotic(double p, long long n);

// c(p) = (4(1-p)^3 / (27 p))^(2/3)
double lambda_c_factor(double p);

// Stable evaluation of lambda^{-1}(x) (the DE inner map of the check-regular
// ensemble at erasure probability p), factored to avoid cancellation at x -> 0.
double lambda_inverse_eval(double p, double x);
// lambda(y) obtained by inverting lambda_inverse_eval on [0,1] (monotone).
double lambda_closed_eval(double p, double y);

// Small-denominator rational reconstruction of a double (continued fractions).
// Returns false if no den <= max_den approximates x to 1e-13.
bool to_small_rational(double x, long long max_den, long long& num, long long& den);

}  // namespace ira

#endif
