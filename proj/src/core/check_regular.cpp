#include "core/check_regular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "core/errors.hpp"

namespace ira {

// ------------------------------------------------------------ exact engine

LambdaRowEngine::LambdaRowEngine(long long u, long long v) : u_(u), v_(v) {
    // u = v = 1 carries the raw a-coefficients (no p-power scaling)
    if (v <= 0 || u <= 0 || u > v || (u == v && v != 1))
        throw error(errc::invalid_parameter, "LambdaRowEngine: need 0 < u < v or u = v = 1");
    if (v > 1000000000ll)
        throw error(errc::invalid_parameter, "LambdaRowEngine: denominator too large");
    row_.assign(1, BigInt(1ll));  // a_0^{(1)} = 1/2 scaled by D_1 = 2
    den_ = BigInt(2ll);
    pow_1p2p_ = BigInt(v + 2 * u);  // (v+2u)^{2n-1}, n = 1
}

void LambdaRowEngine::step() {
    const long long m = n_;
    const long long v2 = v_ * v_;
    const long long u2 = u_ * u_;
    const long long uv = u_ * v_;
    // multipliers below stay within 63 bits
    if (m > 4000000000000000000ll / (20 * std::max({v2, u2, uv})))
        throw error(errc::invalid_parameter, "LambdaRowEngine: depth overflows the multipliers");
    std::vector<BigInt> next(static_cast<std::size_t>(2 * m) + 1);
    for (long long i = 0; i <= 2 * m; ++i) {
        const long long c1 = 2 * m - 3 * i - 1;
        const long long c2 = 20 * m - 3 * i - 1;
        BigInt acc;
        if (i <= 2 * (m - 1)) acc = row_[static_cast<std::size_t>(i)].mul_small_copy(c1 * v2);
        if (i >= 2) acc.add_mul_small(row_[static_cast<std::size_t>(i - 2)], -2 * c1 * u2);
        if (i >= 1 && i - 1 <= 2 * (m - 1))
            acc.add_mul_small(row_[static_cast<std::size_t>(i - 1)], c2 * uv);
        next[static_cast<std::size_t>(i)] = std::move(acc);
    }
    row_ = std::move(next);
    den_.mul_small(2 * (m + 1));
    pow_1p2p_.mul_small((v_ + 2 * u_) * (v_ + 2 * u_));
    ++n_;
}

BigInt LambdaRowEngine::row_sum() const {
    BigInt s;
    for (const BigInt& a : row_) s += a;
    return s;
}

Rational LambdaRowEngine::lambda_value() const {
    BigInt num = row_sum();
    num.mul_small(v_ - u_);
    return Rational(num, den_ * pow_1p2p_);
}

double LambdaRowEngine::lambda_value_double() const {
    BigInt num = row_sum();
    num.mul_small(v_ - u_);
    auto [mn, en] = num.to_double_exp();
    auto [md, ed] = (den_ * pow_1p2p_).to_double_exp();
    if (mn == 0.0) return 0.0;
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::vector<Rational> check_regular_lambda_exact(long long u, long long v, int n_max) {
    if (n_max < 2) throw error(errc::invalid_parameter, "lambda exact: n_max must be >= 2");
    std::vector<Rational> out(static_cast<std::size_t>(n_max) + 1);
    LambdaRowEngine eng(u, v);
    out[2] = eng.lambda_value();
    for (int n = 3; n <= n_max; ++n) {
        eng.step();
        out[static_cast<std::size_t>(n)] = eng.lambda_value();
    }
    return out;
}

bool to_small_rational(double x, long long max_den, long long& num, long long& den) {
    if (!(x > 0.0 && x < 1.0)) return false;
    // continued fraction convergents
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9e17) break;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        if (q1 > 0 && std::fabs(x - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-13) {
            num = p1;
            den = q1;
            return num > 0 && num < den;
        }
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return false;
}

// --------------------------------------------------------- extended engine

namespace {

DegreeDistribution lambda_common_header(double p, int n_max) {
    DegreeDistribution dd;
    dd.coeffs.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    dd.analytic_sum = 1.0;                       // lambda(1) = 1
    dd.analytic_integral = (1.0 - p) / 3.0;      // sum lambda_n / n
    dd.region = check_regular_region(p);
    return dd;
}

DegreeDistribution check_regular_lambda_extended(double p, int n_max) {
    const unsigned prec =
        std::max(128u, 4u * static_cast<unsigned>(n_max));
    BigFloat pf = BigFloat::from_double(p, prec);
    BigFloat two_p2 = BigFloat::from_double(2.0 * p * p, prec);
    BigFloat one_m_p = BigFloat::from_double(1.0 - p, prec);
    BigFloat inv_sq = BigFloat::reciprocal(BigFloat::from_double((1.0 + 2.0 * p) * (1.0 + 2.0 * p), prec), prec);
    BigFloat inv_pow = BigFloat::reciprocal(BigFloat::from_double(1.0 + 2.0 * p, prec), prec);

    DegreeDistribution dd = lambda_common_header(p, n_max);

    std::vector<BigFloat> row(1, BigFloat::from_double(0.5, prec));  // a_0^{(1)} p^0
    for (int n = 2; n <= n_max; ++n) {
        // lambda_n = (1-p) P_{n-1}(p) / (1+2p)^{2n-3}; the row currently holds
        // the scaled coefficients of P_{n-1}
        BigFloat sum(prec);
        long long max_mag = std::numeric_limits<long long>::min();
        for (const BigFloat& a : row) {
            sum += a;
            max_mag = std::max(max_mag, a.mag2());
        }
        if (!sum.is_zero()) {
            long long lost = max_mag - sum.mag2();
            if (lost > 0 && static_cast<long long>(prec) - lost < 64)
                throw error(errc::precision_exhausted,
                            "check_regular_lambda: cancellation exceeds precision budget");
        }
        BigFloat lam = sum * one_m_p * inv_pow;
        dd.coeffs[static_cast<std::size_t>(n)] = lam.to_double();
        if (n == n_max) break;

        const long long m = n - 1;
        std::vector<BigFloat> next(static_cast<std::size_t>(2 * m) + 1, BigFloat(prec));
        for (long long i = 0; i <= 2 * m; ++i) {
            const long long c1 = 2 * m - 3 * i - 1;
            const long long c2 = 20 * m - 3 * i - 1;
            BigFloat acc(prec);
            if (i <= 2 * (m - 1)) {
                acc = row[static_cast<std::size_t>(i)];
                acc.mul_small(c1);
            }
            if (i >= 2) {
                BigFloat t = row[static_cast<std::size_t>(i - 2)] * two_p2;
                t.mul_small(-c1);
                acc += t;
            }
            if (i >= 1 && i - 1 <= 2 * (m - 1)) {
                BigFloat t = row[static_cast<std::size_t>(i - 1)] * pf;
                t.mul_small(c2);
                acc += t;
            }
            acc.div_small(2 * (m + 1));
            next[static_cast<std::size_t>(i)] = std::move(acc);
        }
        row = std::move(next);
        inv_pow = inv_pow * inv_sq;
    }
    return dd;
}

}  // namespace

DegreeDistribution check_regular_lambda(double p, int n_max, LambdaMode mode) {
    if (!(p > 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "check_regular_lambda: p must be in (0,1)");
    if (n_max < 2) throw error(errc::invalid_parameter, "check_regular_lambda: n_max must be >= 2");
    if (mode == LambdaMode::extended_precision) return check_regular_lambda_extended(p, n_max);

    long long u = 0, v = 1;
    if (!to_small_rational(p, 1000000, u, v))
        throw error(errc::invalid_parameter,
                    "check_regular_lambda: exact mode needs p equal to a small rational");
    DegreeDistribution dd = lambda_common_header(p, n_max);
    LambdaRowEngine eng(u, v);
    dd.coeffs[2] = eng.lambda_value_double();
    for (int n = 3; n <= n_max; ++n) {
        eng.step();
        dd.coeffs[static_cast<std::size_t>(n)] = eng.lambda_value_double();
    }
    return dd;
}

DegreeDistribution check_regular_lambda_fast(double p, int n_max) {
    if (!(p > 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "check_regular_lambda_fast: p must be in (0,1)");
    if (n_max < 2) throw error(errc::invalid_parameter, "check_regular_lambda_fast: n_max >= 2");
    // The value recursion at fixed p amplifies rounding by a constant factor
    // per step, so plain doubles fail beyond a few hundred coefficients. Run
    // the extended engine for the head and hand the tail to the asymptotic
    // expansion, whose relative error is O(n^-3) at the switch point.
    const int n_switch = std::min(n_max, 600);
    DegreeDistribution dd = check_regular_lambda_extended(p, n_switch);
    if (n_max > n_switch) {
        dd.coeffs.resize(static_cast<std::size_t>(n_max) + 1, 0.0);
        for (int n = n_switch + 1; n <= n_max; ++n)
            dd.coeffs[static_cast<std::size_t>(n)] = lambda_asymptotic(p, n - 1);
    }
    return dd;
}

// -------------------------------------------------------- closed-form eval

double lambda_inverse_eval(double p, double x) {
    // lambda^{-1}(x) = x * N1(x) * N2(x) / (1 - p(1-x)^3)^2 with
    //   N1 = (1+2p) - 3px + px^2
    //   N2 = 2(1-p) + (4p-1)x - 3px^2 + px^3
    // (the factored numerator keeps full relative precision at x -> 0)
    const double n1 = (1.0 + 2.0 * p) + x * (-3.0 * p + x * p);
    const double n2 = 2.0 * (1.0 - p) + x * ((4.0 * p - 1.0) + x * (-3.0 * p + x * p));
    const double f = (1.0 - p) + x * (3.0 * p + x * (-3.0 * p + x * p));  // 1 - p(1-x)^3
    return x * n1 * n2 / (f * f);
}

double lambda_closed_eval(double p, double y) {
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    // invert the monotone lambda^{-1} by bisection with a Newton polish
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 90; ++it) {
        double mid = 0.5 * (lo + hi);
        if (lambda_inverse_eval(p, mid) < y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * (1.0 + hi)) break;
    }
    return 0.5 * (lo + hi);
}

// -------------------------------------------------------- reversion oracle

namespace {

// c = a*b truncated to len coefficients
void poly_mul_trunc(const std::vector<BigFloat>& a, const std::vector<BigFloat>& b,
                    std::vector<BigFloat>& c, std::size_t len, unsigned prec) {
    c.assign(len, BigFloat(prec));
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        std::size_t jmax = std::min(b.size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] += a[i] * b[j];
        }
    }
}

// w = 1/a as a power series (a[0] != 0), truncated to len
std::vector<BigFloat> poly_inverse(const std::vector<BigFloat>& a, std::size_t len, unsigned prec) {
    std::vector<BigFloat> w(len, BigFloat(prec));
    BigFloat r0 = BigFloat::reciprocal(a[0], prec);
    w[0] = r0;
    for (std::size_t n = 1; n < len; ++n) {
        BigFloat s(prec);
        std::size_t kmax = std::min(n, a.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (a[k].is_zero() || w[n - k].is_zero()) continue;
            s += a[k] * w[n - k];
        }
        w[n] = -(s * r0);
    }
    return w;
}

}  // namespace

DegreeDistribution lambda_reversion_oracle(double p, int n_max, int max_depth) {
    if (!(p > 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "lambda_reversion_oracle: p must be in (0,1)");
    if (n_max < 2 || n_max > max_depth)
        throw error(errc::invalid_parameter, "lambda_reversion_oracle: need 2 <= n_max <= depth cap");

    // precision grows with the distance of the nearest singularity of
    // lambda^{-1} from the origin, at x = 1 - p^{-1/3}
    const double r = std::pow(p, -1.0 / 3.0) - 1.0;
    const double bits_per_step = std::max(0.0, std::log2(1.0 / std::min(r, 1.0)));
    const unsigned prec = std::max<unsigned>(
        256, static_cast<unsigned>(std::ceil(n_max * (bits_per_step + 0.5))) + 192);

    const std::size_t len = static_cast<std::size_t>(n_max) - 1;  // x^0 .. x^{n_max-2}
    auto bf = [&](double d) { return BigFloat::from_double(d, prec); };

    // s(x) = lambda^{-1}(x)/x = N1 N2 / (1 - p(1-x)^3)^2
    std::vector<BigFloat> den2;  // (1 - p(1-x)^3)^2, degree 6
    {
        std::vector<BigFloat> den{bf(1.0 - p), bf(3.0 * p), bf(-3.0 * p), bf(p)};
        poly_mul_trunc(den, den, den2, 7, prec);
    }
    std::vector<BigFloat> num;  // N1*N2, degree 5
    {
        std::vector<BigFloat> n1{bf(1.0 + 2.0 * p), bf(-3.0 * p), bf(p)};
        std::vector<BigFloat> n2{bf(2.0 * (1.0 - p)), bf(4.0 * p - 1.0), bf(-3.0 * p), bf(p)};
        poly_mul_trunc(n1, n2, num, 6, prec);
    }
    std::vector<BigFloat> inv_den2 = poly_inverse(den2, len, prec);
    std::vector<BigFloat> s;
    poly_mul_trunc(num, inv_den2, s, len, prec);
    std::vector<BigFloat> phi = poly_inverse(s, len, prec);

    DegreeDistribution dd = lambda_common_header(p, n_max);
    std::vector<BigFloat> pw = phi;  // phi^1
    dd.coeffs[2] = pw[0].to_double();
    std::vector<BigFloat> tmp;
    for (int n = 3; n <= n_max; ++n) {
        poly_mul_trunc(pw, phi, tmp, len, prec);
        pw.swap(tmp);
        // lambda_n = [x^{n-2}] phi^{n-1} / (n-1)
        BigFloat c = pw[static_cast<std::size_t>(n - 2)];
        c.div_small(n - 1);
        dd.coeffs[static_cast<std::size_t>(n)] = c.to_double();
    }
    return dd;
}

// ------------------------------------------------------------- truncation

TruncatedPair truncate_lambda(const DegreeDistribution& lambda, double p, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw error(errc::invalid_parameter, "truncate_lambda: epsilon must be in (0,1)");
    if (!lambda.analytic_integral)
        throw error(errc::insufficient_depth,
                    "truncate_lambda: tail cannot be certified without the analytic total");
    const double total = *lambda.analytic_integral;  // (1-p)/3
    const double threshold = (1.0 - p) * epsilon / 3.0;
    const int depth = lambda.max_degree();
    double prefix = 0.0;
    int M = -1;
    double tail_at_M = 0.0;
    for (int m = 2; m <= depth; ++m) {
        prefix += lambda.coeffs[m] / static_cast<double>(m);
        double tail = total - prefix;
        if (tail < threshold) { M = m; tail_at_M = std::max(tail, 0.0); break; }
    }
    if (M < 0)
        throw error(errc::insufficient_depth,
                    "truncate_lambda: stored coefficients cannot certify M(epsilon)");

    TruncatedPair pair;
    pair.kind = EnsembleKind::check_regular;
    pair.q = 0;
    pair.design_p = p;
    pair.epsilon = epsilon;
    pair.M = M;
    pair.pilot_fraction = tail_at_M / total;
    pair.design_rate = (1.0 - p) * (1.0 - pair.pilot_fraction);

    pair.lambda.coeffs.assign(static_cast<std::size_t>(M) + 1, 0.0);
    for (int n = 2; n <= M; ++n) pair.lambda.coeffs[n] = lambda.coeffs[n];
    pair.lambda.region = lambda.region;

    pair.rho.coeffs.assign(4, 0.0);
    pair.rho.coeffs[3] = 1.0;  // rho(x) = x^2
    pair.rho.analytic_sum = 1.0;
    pair.rho.analytic_integral = 1.0 / 3.0;

    pair.lambda_full = lambda.coeffs;
    return pair;
}

// ------------------------------------------------------------ asymptotics

double lambda_c_factor(double p) {
    return std::pow(4.0 * std::pow(1.0 - p, 3.0) / (27.0 * p), 2.0 / 3.0);
}

double lambda_asymptotic(double p, long long n) {
    if (!(p > 0.0 && p < 1.0))
        throw error(errc::invalid_parameter, "lambda_asymptotic: p must be in (0,1)");
    if (n < 1) throw error(errc::invalid_parameter, "lambda_asymptotic: n must be >= 1");
    // evaluated at the subscript of the estimated coefficient, which is how
    // the reference values for lambda_20 and lambda_120 are reproduced
    const double m = static_cast<double>(n + 1);
    const double c = lambda_c_factor(p);
    const std::complex<double> z = 1.0 + c * std::polar(1.0, M_PI / 3.0);
    const double a = std::abs(z);
    const double theta = std::arg(z);
    const double osc =
        1.0 + 1.5 * std::sqrt(2.0) * std::pow(a, -(m - 0.5)) * std::sin((m - 0.5) * theta);
    const double corr = 1.0 + 3.0 / (8.0 * m) + 25.0 / (128.0 * m * m);
    return std::pow(m, -1.5) / (2.0 * std::sqrt(M_PI) * (1.0 - p)) * osc * corr;
}

}  // namespace ira
