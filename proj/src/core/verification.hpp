#ifndef IRA_CORE_VERIFICATION_HPP
#define IRA_CORE_VERIFICATION_HPP

#include <string>
#include <vector>

#include "core/bignum.hpp"

namespace ira {

// P_n held as integer coefficient numerators over a common denominator
// (den = 2^n n!), so both recursions stay in exact integer arithmetic.
struct PnPolynomial {
    int n = 1;
    std::vector<BigInt> num;  // degree 2(n-1)
    BigInt den;

    int degree() const { return static_cast<int>(num.size()) - 1; }
    Rational coeff(int i) const;
    Rational eval(const Rational& x) const;
    // ln P_n(x) for double x (requires P_n(x) > 0); handles magnitudes far
    // beyond double range
    double eval_log(double x) const;
    Rational derivative_at_one() const;  // P_n'(1)
};

// P_1..P_n_max through the structural polynomial recursion, cross-checked
// coefficient-by-coefficient against the direct coefficient recursion.
// Throws on any mismatch.
std::vector<PnPolynomial> pn_exact(int n_max);

// Single P_n without keeping the whole sequence (used for large n).
PnPolynomial pn_single(int n);

// lambda_{n+1}(p) = (1-p) P_n(p) / (1+2p)^{2n-1} as an exact rational.
Rational lambda_from_pn(const PnPolynomial& pn, const Rational& p);

struct RhoPositivityRow {
    int k = 0;
    Rational ratio_bound;  // max admissible p/(1-p) at this k
};

struct RhoPositivityReport {
    int q = 3;
    std::vector<RhoPositivityRow> rows;  // k = 4..k_max
    int binding_k = 4;
    Rational binding_ratio;  // min over k
    Rational binding_p;      // binding_ratio/(1+binding_ratio)
    bool closed_form_matches = false;  // q = 3: ratio_k == (2k-5)/(4(k+5)) for all k
    Rational conjecture_p;             // q >= 4 conjectured admissible p; 0 for q = 3

    std::string to_text() const;
};

// Coefficient-domination condition for the non-negativity of the bit-regular
// check d.d.: per k, the largest p/(1-p) with [x^k] cQ >= [x^k] (cQ)^2.
RhoPositivityReport rho_positivity_report(int q, int k_max);

struct NStarResult {
    double p_star = 0.0;
    int n_c11 = 0;
    int n_c12 = 0;
    int n_star = 0;
};

// Minimal indices after which the integral bounds guarantee positive lambda_n
// for all p in [0, p_star]; n_star = max of the two conditions.
NStarResult lambda_nstar(double p_star);

enum class PositivityStatus { certified, not_positive, inconclusive };

struct PositivityResult {
    PositivityStatus status = PositivityStatus::inconclusive;
    std::string method;   // "coefficients" | "shifted-basis" | "grid" | combinations
    std::string witness;  // human-readable details
};

// Certify P_n > 0 on [lo, hi] (0 <= lo < hi <= 1) by (a) positivity of the
// shifted-basis coefficients around p0 = 1/2 (covers [1/2, hi]) and/or (b)
// exact evaluation on an adaptively refined dyadic grid with a derivative
// bound. Certification at n covers every m <= n (a zero of P_m inside [0,1]
// would propagate to P_n).
PositivityResult verify_pn_positive(const PnPolynomial& pn, double lo, double hi);
PositivityResult verify_pn_positive(int n, double lo, double hi);

// Max over the grid of |ln(P_n(x))/n - 2 ln(1+2x)|; diagnostic only.
double pn_log_limit_check(const PnPolynomial& pn, const std::vector<double>& grid);

// Exact binomial coefficient.
BigInt binomial(long long n, long long k);

}  // namespace ira

#endif
