#include "core/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "core/check_regular.hpp"
#include "core/errors.hpp"

namespace ira {

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt r(1ll);
    for (long long j = 1; j <= k; ++j) {
        r.mul_small(n - k + j);
        r.divrem_small(static_cast<std::uint64_t>(j));  // exact at every step
    }
    return r;
}

// ----------------------------------------------------------- PnPolynomial

Rational PnPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return Rational();
    return Rational(num[static_cast<std::size_t>(i)], den);
}

Rational PnPolynomial::eval(const Rational& x) const {
    // sum num[i] a^i b^{deg-i} over den * b^deg, x = a/b
    const BigInt& a = x.num();
    const BigInt& b = x.den();
    std::vector<BigInt> terms(num.size());
    BigInt bpow(1ll);
    for (std::size_t i = num.size(); i-- > 0;) {
        terms[i] = num[i] * bpow;
        if (i > 0) bpow *= b;
    }
    BigInt horner;
    for (std::size_t i = num.size(); i-- > 0;) {
        horner *= a;
        horner += terms[i];
    }
    BigInt denom = den * BigInt::pow(b, static_cast<unsigned long long>(degree()));
    return Rational(horner, denom);
}

namespace {

// double with a wide exponent, value = m * 2^e
struct ScaledDouble {
    double m = 0.0;
    long long e = 0;
    static ScaledDouble of(double v) {
        if (v == 0.0) return {};
        int ex;
        double mm = std::frexp(v, &ex);
        return {mm, ex};
    }
    static ScaledDouble of_exp(double m, long long e) {
        if (m == 0.0) return {};
        int ex;
        double mm = std::frexp(m, &ex);
        return {mm, e + ex};
    }
    ScaledDouble mul(const ScaledDouble& o) const { return of_exp(m * o.m, e + o.e); }
    ScaledDouble add(const ScaledDouble& o) const {
        if (m == 0.0) return o;
        if (o.m == 0.0) return *this;
        long long d = e - o.e;
        if (d > 80) return *this;
        if (d < -80) return o;
        if (d >= 0) return of_exp(m + std::ldexp(o.m, static_cast<int>(-d)), e);
        return of_exp(std::ldexp(m, static_cast<int>(d)) + o.m, o.e);
    }
    double log_abs() const { return std::log(std::fabs(m)) + static_cast<double>(e) * M_LN2; }
    int sign() const { return m == 0.0 ? 0 : (m < 0.0 ? -1 : 1); }
};

}  // namespace

double PnPolynomial::eval_log(double x) const {
    ScaledDouble acc;
    ScaledDouble xs = ScaledDouble::of(x);
    for (std::size_t i = num.size(); i-- > 0;) {
        acc = acc.mul(xs);
        auto [m, e] = num[i].to_double_exp();
        acc = acc.add(ScaledDouble::of_exp(m, e));
    }
    if (acc.sign() <= 0)
        throw error(errc::domain_error, "eval_log: polynomial value is not positive");
    auto [md, ed] = den.to_double_exp();
    return acc.log_abs() - (std::log(md) + static_cast<double>(ed) * M_LN2);
}

Rational PnPolynomial::derivative_at_one() const {
    BigInt s;
    for (std::size_t i = 1; i < num.size(); ++i)
        s.add_mul_small(num[i], static_cast<long long>(i));
    return Rational(s, den);
}

// ------------------------------------------------- structural P recursion

namespace {

// next = (quad * P - cub * P') / (2(n+1)) carried on the shared denominator;
// quad = (14-4n)x^2 + (20n-4)x + (2n-1), cub = 3x + 3x^2 - 6x^3.
PnPolynomial pn_step_structural(const PnPolynomial& p) {
    const long long n = p.n;
    std::vector<BigInt> quad_mul(p.num.size() + 2);
    for (std::size_t i = 0; i < p.num.size(); ++i) {
        quad_mul[i].add_mul_small(p.num[i], 2 * n - 1);
        quad_mul[i + 1].add_mul_small(p.num[i], 20 * n - 4);
        quad_mul[i + 2].add_mul_small(p.num[i], 14 - 4 * n);
    }
    // derivative
    std::vector<BigInt> der(p.num.size() > 1 ? p.num.size() - 1 : 1);
    for (std::size_t i = 1; i < p.num.size(); ++i)
        der[i - 1] = p.num[i].mul_small_copy(static_cast<long long>(i));
    std::vector<BigInt> cub_mul(der.size() + 3);
    for (std::size_t i = 0; i < der.size(); ++i) {
        if (der[i].is_zero()) continue;
        cub_mul[i + 1].add_mul_small(der[i], 3);
        cub_mul[i + 2].add_mul_small(der[i], 3);
        cub_mul[i + 3].add_mul_small(der[i], -6);
    }
    PnPolynomial out;
    out.n = p.n + 1;
    out.num.assign(static_cast<std::size_t>(2 * (out.n - 1)) + 1, BigInt());
    for (std::size_t i = 0; i < out.num.size(); ++i) {
        BigInt v;
        if (i < quad_mul.size()) v = quad_mul[i];
        if (i < cub_mul.size()) v -= cub_mul[i];
        out.num[i] = std::move(v);
    }
    out.den = p.den.mul_small_copy(2 * (n + 1));
    return out;
}

PnPolynomial pn_initial() {
    PnPolynomial p;
    p.n = 1;
    p.num.assign(1, BigInt(1ll));
    p.den = BigInt(2ll);
    return p;
}

}  // namespace

std::vector<PnPolynomial> pn_exact(int n_max) {
    if (n_max < 1) throw error(errc::invalid_parameter, "pn_exact: n_max must be >= 1");
    std::vector<PnPolynomial> out;
    out.reserve(static_cast<std::size_t>(n_max));
    out.push_back(pn_initial());
    LambdaRowEngine direct(1, 1);  // u = v = 1: unscaled a-coefficients
    for (int n = 2; n <= n_max; ++n) {
        out.push_back(pn_step_structural(out.back()));
        direct.step();
        const PnPolynomial& pn = out.back();
        const auto& row = direct.row();
        if (static_cast<int>(row.size()) != static_cast<int>(pn.num.size()) ||
            !(direct.denom() == pn.den))
            throw error(errc::domain_error, "pn_exact: recursion shape mismatch");
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!(row[i] == pn.num[i]))
                throw error(errc::domain_error,
                            "pn_exact: coefficient recursion disagrees with polynomial recursion");
    }
    return out;
}

PnPolynomial pn_single(int n) {
    if (n < 1) throw error(errc::invalid_parameter, "pn_single: n must be >= 1");
    PnPolynomial p = pn_initial();
    while (p.n < n) p = pn_step_structural(p);
    return p;
}

Rational lambda_from_pn(const PnPolynomial& pn, const Rational& p) {
    Rational one(1ll);
    Rational two(2ll);
    Rational value = pn.eval(p);
    Rational base = one + two * p;
    // (1+2p)^{2n-1}
    BigInt bn = BigInt::pow(base.num(), static_cast<unsigned long long>(2 * pn.n - 1));
    BigInt bd = BigInt::pow(base.den(), static_cast<unsigned long long>(2 * pn.n - 1));
    return (one - p) * value * Rational(bd, bn);
}

// ----------------------------------------------------- rho positivity (A)

RhoPositivityReport rho_positivity_report(int q, int k_max) {
    if (q < 3) throw error(errc::invalid_parameter, "rho_positivity_report: q must be >= 3");
    if (k_max < 4) throw error(errc::invalid_parameter, "rho_positivity_report: k_max must be >= 4");
    // exact |Q_k| for k = 2..k_max: Q_k = (q/k) |binom(1/(q-1), k-1)|
    Rational alpha = Rational::of(1, q - 1);
    std::vector<Rational> Q(static_cast<std::size_t>(k_max) + 1);
    Rational babs = alpha;  // |binom(alpha, 1)|
    for (int k = 2; k <= k_max; ++k) {
        Q[static_cast<std::size_t>(k)] = Rational::of(q, k) * babs;
        // |binom(alpha, k)| = |binom(alpha, k-1)| (k-1-alpha)/k
        babs = babs * (Rational(static_cast<long long>(k - 1)) - alpha) / Rational(static_cast<long long>(k));
    }
    RhoPositivityReport rep;
    rep.q = q;
    bool closed_ok = (q == 3);
    for (int k = 4; k <= k_max; ++k) {
        Rational conv;
        for (int i = 2; i <= k - 2; ++i)
            conv += Q[static_cast<std::size_t>(i)] * Q[static_cast<std::size_t>(k - i)];
        if (conv.is_zero()) continue;
        Rational ratio = Q[static_cast<std::size_t>(k)] / conv;
        rep.rows.push_back({k, ratio});
        if (q == 3) {
            Rational closed = Rational::of(2 * k - 5, 4 * (k + 5));
            if (!(closed == ratio)) closed_ok = false;
        }
    }
    if (rep.rows.empty())
        throw error(errc::invalid_parameter, "rho_positivity_report: no admissible k");
    rep.binding_k = rep.rows.front().k;
    rep.binding_ratio = rep.rows.front().ratio_bound;
    for (const auto& row : rep.rows) {
        if (row.ratio_bound < rep.binding_ratio) {
            rep.binding_ratio = row.ratio_bound;
            rep.binding_k = row.k;
        }
    }
    Rational one(1ll);
    rep.binding_p = rep.binding_ratio / (one + rep.binding_ratio);
    rep.closed_form_matches = closed_ok;
    if (q >= 4) {
        long long dq = q;
        if (q <= 8)
            rep.conjecture_p = Rational::of(6 - 7 * dq + 2 * dq * dq, 6 - 13 * dq + 8 * dq * dq);
        else
            rep.conjecture_p = Rational::of(12 - 17 * dq + 6 * dq * dq, 12 - 37 * dq + 26 * dq * dq);
    }
    return rep;
}

std::string RhoPositivityReport::to_text() const {
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "rho positivity report, q=%d\n", q);
    out += buf;
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "  k=%d  max p/(1-p) = %s\n", row.k,
                      row.ratio_bound.to_string().c_str());
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "binding: k=%d, p <= %s (= %.17g)\n", binding_k,
                  binding_p.to_string().c_str(), binding_p.to_double());
    out += buf;
    if (q == 3) {
        std::snprintf(buf, sizeof buf, "closed form (2k-5)/(4(k+5)) matches: %s\n",
                      closed_form_matches ? "yes" : "NO");
        out += buf;
    } else {
        std::snprintf(buf, sizeof buf, "conjectured admissible p: %s (= %.17g)\n",
                      conjecture_p.to_string().c_str(), conjecture_p.to_double());
        out += buf;
    }
    return out;
}

// --------------------------------------------------------- n* (C.11/C.12)

namespace {

bool c11_holds(long long n, double p) {
    if (p <= 0.0) return true;  // RHS vanishes faster than the LHS
    const double sp = std::sqrt(M_PI);
    double lg_ratio1 = std::lgamma(n - 0.5) - std::lgamma(n + 1.0);
    double lg_ratio2 = std::lgamma(n - 3.5) - std::lgamma(n + 1.0);
    double lhs = std::exp(lg_ratio1) / (2.0 * (1.0 - p) * sp) -
                 315.0 * p * p * std::exp(lg_ratio2) / (16.0 * std::pow(1.0 - p, 7.0) * sp);
    double c = lambda_c_factor(p);
    double rhs = 2.0 * std::sqrt(3.0) *
                 std::exp(-0.5 * (static_cast<double>(n) - 1.0) * std::log1p(c)) /
                 (std::cbrt(p) * M_PI * (static_cast<double>(n) - 1.0));
    return lhs >= rhs;
}

}  // namespace

NStarResult lambda_nstar(double p_star) {
    if (!(p_star > 0.0 && p_star < 1.0))
        throw error(errc::invalid_parameter, "lambda_nstar: p_star must be in (0,1)");
    NStarResult res;
    res.p_star = p_star;

    // 200 uniform grid points plus endpoints on [0, p_star], binding values
    // first so failing n reject quickly
    std::vector<double> grid;
    for (int i = 200; i >= 0; --i) grid.push_back(p_star * static_cast<double>(i) / 200.0);

    for (long long n = 5; n <= 2000000; ++n) {
        bool all = true;
        for (double p : grid) {
            if (!c11_holds(n, p)) { all = false; break; }
        }
        if (all) { res.n_c11 = static_cast<int>(n); break; }
    }
    if (res.n_c11 == 0)
        throw error(errc::domain_error, "lambda_nstar: no admissible n for the first condition");

    double s = 1.0 / std::sqrt(1.0 + lambda_c_factor(p_star));
    long long n12 = static_cast<long long>(std::ceil(3.0 / (2.0 * (1.0 - s)) - 1.0));
    while (n12 > 1 && 1.0 - 3.0 / (2.0 * (n12 - 1 + 1.0)) >= s) --n12;
    while (1.0 - 3.0 / (2.0 * (n12 + 1.0)) < s) ++n12;
    res.n_c12 = static_cast<int>(n12);
    res.n_star = std::max(res.n_c11, res.n_c12);
    return res;
}

// ------------------------------------------------ positivity certificates

namespace {

// all coefficients of P represented around p0 = 1/2 strictly positive?
// T(y) = sum num[i] 2^{deg-i} (2y+1)^i; positivity of T's coefficients is
// equivalent to positivity of the shifted-basis coefficients.
bool shifted_basis_positive(const PnPolynomial& p) {
    const std::size_t deg = p.num.size() - 1;
    std::vector<BigInt> res;
    res.push_back(p.num[deg]);
    for (std::size_t i = deg; i-- > 0;) {
        // res = res * (2y+1)
        std::vector<BigInt> nxt(res.size() + 1);
        for (std::size_t j = 0; j < res.size(); ++j) {
            nxt[j] += res[j];
            nxt[j + 1].add_mul_small(res[j], 2);
        }
        // += num[i] * 2^{deg-i}
        nxt[0] += p.num[i].shl_copy(deg - i);
        res = std::move(nxt);
    }
    for (const BigInt& c : res)
        if (c.sign() <= 0) return false;
    return true;
}

// numerator of a coefficient-vector polynomial at x = a / 2^j, scaled by the
// shared factor 2^{j*deg}: sum num[i] a^i 2^{j(deg-i)}
BigInt dyadic_eval_int(const std::vector<BigInt>& num, long long a, int j) {
    BigInt acc;
    for (std::size_t i = num.size(); i-- > 0;) {
        acc.mul_small(a);
        acc += num[i].shl_copy(static_cast<std::size_t>(j) * (num.size() - 1 - i));
    }
    return acc;
}

struct GridCert {
    const PnPolynomial* p = nullptr;
    std::vector<BigInt> abs_deriv;  // coefficient i: (i+1)|num_{i+1}|
    bool positive = true;
    bool conclusive = true;
    int evaluations = 0;
    int max_depth_used = 0;

    // Scaled values share the denominator den*2^{j*deg} at depth j, and the
    // derivative bound (degree deg-1) den*2^{j(deg-1)}. The piece condition
    //   P(lo) + P(hi) > B(hi) * (a_hi - a_lo)/2^j
    // therefore reduces to the integer comparison E_lo + E_hi > EB * da.
    void certify(long long a_lo, long long a_hi, int j, const BigInt& e_lo, const BigInt& e_hi,
                 int depth) {
        if (!positive || !conclusive) return;
        if (e_lo.sign() <= 0 || e_hi.sign() <= 0) { positive = false; return; }
        BigInt rhs = dyadic_eval_int(abs_deriv, a_hi, j);
        rhs.mul_small(a_hi - a_lo);
        if ((e_lo + e_hi <=> rhs) == std::strong_ordering::greater) return;
        // a-values double per level; keep them within 63 bits
        if (depth > 34 || j >= 58 || evaluations > 40000) { conclusive = false; return; }
        long long mid = a_lo + a_hi;  // midpoint numerator at scale j+1
        BigInt e_mid = dyadic_eval_int(p->num, mid, j + 1);
        ++evaluations;
        max_depth_used = std::max(max_depth_used, depth + 1);
        const std::size_t deg = p->num.size() - 1;
        certify(a_lo * 2, mid, j + 1, e_lo.shl_copy(deg), e_mid, depth + 1);
        certify(mid, a_hi * 2, j + 1, e_mid, e_hi.shl_copy(deg), depth + 1);
    }
};

}  // namespace

PositivityResult verify_pn_positive(const PnPolynomial& pn, double lo, double hi) {
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0))
        throw error(errc::invalid_parameter, "verify_pn_positive: need 0 <= lo < hi <= 1");
    PositivityResult res;
    char buf[256];

    // trivial certificate: every raw coefficient nonnegative
    bool all_nonneg = true;
    for (const BigInt& c : pn.num)
        if (c.sign() < 0) { all_nonneg = false; break; }
    if (all_nonneg && pn.num[0].sign() > 0) {
        res.status = PositivityStatus::certified;
        res.method = "coefficients";
        std::snprintf(buf, sizeof buf,
                      "all %d coefficients of P_%d nonnegative, constant term positive; "
                      "covers [0,1] and every m <= %d",
                      pn.degree() + 1, pn.n, pn.n);
        res.witness = buf;
        return res;
    }

    double grid_hi = hi;
    std::string methods;
    if (hi > 0.5 && shifted_basis_positive(pn)) {
        if (lo >= 0.5) {
            res.status = PositivityStatus::certified;
            res.method = "shifted-basis";
            std::snprintf(buf, sizeof buf,
                          "all shifted-basis coefficients around 1/2 positive; covers [1/2,1] "
                          "and every m <= %d",
                          pn.n);
            res.witness = buf;
            return res;
        }
        methods = "shifted-basis";
        grid_hi = 0.5;
    }

    // adaptive dyadic grid with per-piece derivative bounds on [lo, grid_hi]
    const int j = 8;
    long long a_lo = static_cast<long long>(std::floor(lo * std::ldexp(1.0, j)));
    long long a_hi = static_cast<long long>(std::ceil(grid_hi * std::ldexp(1.0, j)));
    if (a_lo < 0) a_lo = 0;
    GridCert cert;
    cert.p = &pn;
    cert.abs_deriv.resize(pn.num.size() > 1 ? pn.num.size() - 1 : 1);
    for (std::size_t i = 1; i < pn.num.size(); ++i)
        cert.abs_deriv[i - 1] = pn.num[i].abs().mul_small_copy(static_cast<long long>(i));
    BigInt e_lo = dyadic_eval_int(pn.num, a_lo, j);
    BigInt e_hi = dyadic_eval_int(pn.num, a_hi, j);
    cert.evaluations = 2;
    cert.certify(a_lo, a_hi, j, e_lo, e_hi, 0);

    if (!cert.positive) {
        res.status = PositivityStatus::not_positive;
        res.method = methods.empty() ? "grid" : methods + "+grid";
        res.witness = "a grid point evaluated <= 0";
        return res;
    }
    if (!cert.conclusive) {
        res.status = PositivityStatus::inconclusive;
        res.method = methods.empty() ? "grid" : methods + "+grid";
        std::snprintf(buf, sizeof buf, "refinement budget exhausted after %d evaluations",
                      cert.evaluations);
        res.witness = buf;
        return res;
    }
    res.status = PositivityStatus::certified;
    res.method = methods.empty() ? "grid" : methods + "+grid";
    std::snprintf(buf, sizeof buf,
                  "certified on [%g,%g]: %d exact evaluations, max refinement depth %d%s; "
                  "covers every m <= %d",
                  lo, hi, cert.evaluations, cert.max_depth_used,
                  methods.empty() ? "" : " plus shifted-basis on [1/2,1]", pn.n);
    res.witness = buf;
    return res;
}

PositivityResult verify_pn_positive(int n, double lo, double hi) {
    return verify_pn_positive(pn_single(n), lo, hi);
}

double pn_log_limit_check(const PnPolynomial& pn, const std::vector<double>& grid) {
    double worst = 0.0;
    for (double x : grid) {
        double lhs = pn.eval_log(x) / static_cast<double>(pn.n);
        double rhs = 2.0 * std::log1p(2.0 * x);
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

}  // namespace ira
