#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/bit_regular.hpp"
#include "core/check_regular.hpp"
#include "core/degree_dist.hpp"
#include "core/errors.hpp"
#include "core/verification.hpp"

using namespace ira;

namespace {

// Independent oracle: series coefficients of Q(x) = (-2+2x)(1-sqrt(1-x)) + x
// for q = 3, from the exact binomial series of sqrt(1-x).
std::vector<Rational> q3_series_oracle(int k_max) {
    // sqrt(1-x) = sum binom(1/2,k) (-x)^k; s[k] = coefficient of x^k
    std::vector<Rational> s(static_cast<std::size_t>(k_max) + 2);
    Rational b(1ll);  // binom(1/2, 0)
    s[0] = Rational(1ll);
    for (int k = 1; k <= k_max + 1; ++k) {
        // binom(1/2,k) = binom(1/2,k-1) * (1/2 - (k-1)) / k
        b = b * (Rational::of(1, 2) - Rational(static_cast<long long>(k - 1))) /
            Rational(static_cast<long long>(k));
        s[static_cast<std::size_t>(k)] = (k % 2 == 0) ? b : -b;  // times (-1)^k
    }
    // u(x) = 1 - sqrt(1-x); Q = (-2+2x) u + x
    std::vector<Rational> q(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        Rational u_k = (k == 0) ? Rational(1ll) - s[0] : -s[static_cast<std::size_t>(k)];
        Rational u_km1 = (k >= 1) ? ((k == 1) ? Rational(1ll) - s[0] : -s[static_cast<std::size_t>(k - 1)])
                                  : Rational();
        q[static_cast<std::size_t>(k)] = Rational(-2ll) * u_k + Rational(2ll) * u_km1;
        if (k == 1) q[1] += Rational(1ll);
    }
    return q;
}

}  // namespace

TEST_CASE("q_series matches the closed-form expansion oracle") {
    auto oracle = q3_series_oracle(12);
    CHECK(oracle[2] == Rational::of(3, 4));
    CHECK(oracle[3] == Rational::of(1, 8));
    CHECK(oracle[4] == Rational::of(3, 64));
    auto Q = q_series(3, 12);
    for (int n = 2; n <= 12; ++n)
        CHECK(Q[static_cast<std::size_t>(n)] ==
              doctest::Approx(oracle[static_cast<std::size_t>(n)].to_double()).epsilon(1e-14));
    for (int n = 2; n <= 12; ++n) CHECK(Q[static_cast<std::size_t>(n)] > 0.0);
    CHECK_THROWS_AS(q_series(2, 10), error);
}

TEST_CASE("bit_regular_rho: first coefficient and basic structure") {
    const double p = 1.0 / 13.0;
    auto rho = bit_regular_rho(3, p, 2000);
    // rho_2 = 2 R_2 / (q(1-p)), R_2 = Q_2/(1-p), Q_2 = 3/4 -> 169/288
    Rational expect = Rational::of(169, 288);
    CHECK(rho.coeff(2) == doctest::Approx(expect.to_double()).epsilon(1e-14));
    CHECK(rho.coeff(1) == 0.0);
    for (int n = 2; n <= 2000; ++n) CHECK(rho.coeff(n) >= 0.0);
    CHECK(rho.stored_sum() < 1.0);
    CHECK(rho.stored_sum() > 0.97);
    CHECK(rho.region == RegionStatus::proven);
    CHECK(bit_regular_rho(3, 0.2, 50).region == RegionStatus::unsupported);
    CHECK(bit_regular_rho(4, 0.11, 50).region == RegionStatus::conjectural);
    CHECK_THROWS_AS(bit_regular_rho(3, 1.2, 10), error);
}

TEST_CASE("truncate_rho: minimal M, degree-1 mass, rate bound") {
    const int q = 3;
    const double p = 1.0 / 13.0;
    const double eps = 0.1;
    auto rho = bit_regular_rho(q, p, 4000);
    TruncatedPair pair = truncate_rho(rho, q, p, eps);
    const double thr = eps / (q * (1.0 - p));
    // minimality of M: tail(M) < thr <= tail(M-1)
    double prefix = 0.0;
    for (int n = 2; n <= pair.M; ++n) prefix += rho.coeff(n);
    CHECK(1.0 - prefix < thr);
    CHECK(1.0 - (prefix - rho.coeff(pair.M)) >= thr);
    // coefficients re-sum to one exactly by construction
    CHECK(pair.rho.stored_sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pair.rho.coeff(1) > 0.0);
    CHECK(pair.design_rate > (1.0 - p) / (1.0 + eps));
    CHECK(pair.design_rate > (1.0 - p) * (1.0 - eps));
    CHECK(pair.pilot_fraction == 0.0);

    // pointwise orderings on a grid: rho_eps(x) > rho(x) and R_eps(x) > R(x)
    auto Rn_full = node_perspective(rho, NodeDegreeDistribution::Kind::check);
    auto Rn_trunc = node_perspective(pair.rho, NodeDegreeDistribution::Kind::check);
    for (int i = 1; i < 1000; ++i) {
        double x = static_cast<double>(i) / 1000.0;
        CHECK(pair.rho.eval(x) > rho.eval(x));
        CHECK(Rn_trunc.eval(x) > Rn_full.eval(x));
    }

    // epsilon near 1 gives a small M
    TruncatedPair loose = truncate_rho(rho, q, p, 0.9);
    CHECK(loose.M < pair.M);
    CHECK(loose.rho.stored_sum() == doctest::Approx(1.0).epsilon(1e-12));

    // shallow coefficients cannot certify a tiny epsilon
    auto shallow = bit_regular_rho(q, p, 40);
    CHECK_THROWS_AS(truncate_rho(shallow, q, p, 1e-4), error);
}

TEST_CASE("check_regular_lambda: closed forms lambda_2..lambda_5 exact") {
    struct PV { long long u, v; };
    for (PV pv : {PV{1, 10}, PV{3, 10}, PV{1, 2}, PV{7, 10}, PV{9, 10}}) {
        Rational p = Rational(BigInt(pv.u), BigInt(pv.v));
        Rational one(1ll);
        auto vals = check_regular_lambda_exact(pv.u, pv.v, 5);
        Rational b = one + Rational(2ll) * p;  // 1+2p
        Rational l2 = (one - p) / (Rational(2ll) * b);
        CHECK(vals[2] == l2);
        Rational p2 = p * p, p3 = p2 * p, p4 = p3 * p, p5 = p4 * p, p6 = p5 * p;
        Rational l3 = (one - p) * (Rational(1ll) + Rational(16ll) * p + Rational(10ll) * p2) /
                      (Rational(8ll) * b * b * b);
        CHECK(vals[3] == l3);
        Rational l4 = (one - p) *
                      (Rational(1ll) + Rational(12ll) * p + Rational(168ll) * p2 +
                       Rational(164ll) * p3 + Rational(60ll) * p4) /
                      (Rational(16ll) * b * b * b * b * b);
        CHECK(vals[4] == l4);
        Rational l5 = (one - p) *
                      (Rational(5ll) + Rational(80ll) * p + Rational(470ll) * p2 +
                       Rational(7840ll) * p3 + Rational(9640ll) * p4 + Rational(5920ll) * p5 +
                       Rational(1560ll) * p6) /
                      (Rational(128ll) * b * b * b * b * b * b * b);
        CHECK(vals[5] == l5);
    }
}

TEST_CASE("check_regular_lambda: modes agree; region flag; errors") {
    auto exact_dd = check_regular_lambda(0.3, 80, LambdaMode::exact_rational);
    auto ext_dd = check_regular_lambda(0.3, 80, LambdaMode::extended_precision);
    for (int n = 2; n <= 80; ++n)
        CHECK(std::fabs(exact_dd.coeff(n) - ext_dd.coeff(n)) <= 1e-12 * exact_dd.coeff(n));
    CHECK(exact_dd.coeff(1) == 0.0);
    CHECK(exact_dd.region == RegionStatus::proven);
    CHECK(check_regular_lambda(0.97, 10, LambdaMode::extended_precision).region ==
          RegionStatus::conjectural);
    CHECK_THROWS_AS(check_regular_lambda(0.0, 10, LambdaMode::extended_precision), error);
    // exact mode with a non-rational p
    CHECK_THROWS_AS(check_regular_lambda(0.1234567890123, 10, LambdaMode::exact_rational), error);
}

TEST_CASE("lambda coefficients are positive and sum toward one") {
    auto dd = check_regular_lambda(0.5, 600, LambdaMode::extended_precision);
    double run = 0.0;
    for (int n = 2; n <= 600; ++n) {
        CHECK(dd.coeff(n) > 0.0);
        run += dd.coeff(n);
        CHECK(run <= 1.0 + 1e-12);
    }
    CHECK(run > 0.94);
    // integral partial sums stay below (1-p)/3 and approach it
    double isum = 0.0;
    for (int n = 2; n <= 600; ++n) {
        isum += dd.coeff(n) / n;
        CHECK(isum <= (1.0 - 0.5) / 3.0 + 1e-12);
    }
    CHECK(isum > (1.0 - 0.5) / 3.0 - 2e-4);
}

TEST_CASE("reversion oracle agrees with the recursion") {
    auto orc = lambda_reversion_oracle(0.5, 40);
    CHECK(orc.coeff(2) == doctest::Approx(0.125).epsilon(1e-13));            // phi(0)
    CHECK(orc.coeff(3) == doctest::Approx(0.0898438).epsilon(1e-5));         // closed form
    for (double p : {0.1, 0.5, 0.9}) {
        long long u = 0, v = 1;
        REQUIRE(to_small_rational(p, 100, u, v));
        auto exact_vals = check_regular_lambda_exact(u, v, 60);
        auto rev = lambda_reversion_oracle(p, 60);
        for (int n = 2; n <= 60; ++n) {
            double e = exact_vals[static_cast<std::size_t>(n)].to_double();
            CHECK(std::fabs(rev.coeff(n) - e) <= 1e-10 * e);
        }
    }
    CHECK_THROWS_AS(lambda_reversion_oracle(0.5, 600, 256), error);  // beyond depth cap
}

TEST_CASE("truncate_lambda: pilots, rate, orderings, exact tail identity") {
    const double p = 0.5, eps = 0.1;
    auto lam = check_regular_lambda_fast(p, 2000);
    TruncatedPair pair = truncate_lambda(lam, p, eps);
    CHECK(pair.pilot_fraction < eps);
    CHECK(pair.pilot_fraction > 0.0);
    CHECK(pair.design_rate == doctest::Approx((1.0 - p) * (1.0 - pair.pilot_fraction)));
    CHECK(pair.design_rate > (1.0 - p) * (1.0 - eps));
    // minimality of M against the integral threshold
    const double total = (1.0 - p) / 3.0;
    const double thr = (1.0 - p) * eps / 3.0;
    double prefix = 0.0;
    for (int n = 2; n <= pair.M; ++n) prefix += lam.coeff(n) / n;
    CHECK(total - prefix < thr);
    CHECK(total - (prefix - lam.coeff(pair.M) / pair.M) >= thr);
    // pilot fraction is the certified tail over the analytic total, exactly
    CHECK(pair.pilot_fraction == doctest::Approx((total - prefix) / total).epsilon(1e-15));
    // lambda_eps(x) < lambda(x) on (0,1]: the gap is the dropped tail, which
    // underflows doubles at small x, so assert positivity through the tail
    // series and non-exceedance pointwise
    for (int i = 1; i <= 100; ++i) {
        double x = static_cast<double>(i) / 100.0;
        double tail = 0.0;
        for (int n = lam.max_degree(); n > pair.M; --n) tail = tail * x + lam.coeff(n);
        CHECK(tail > 0.0);
        CHECK(pair.lambda.eval(x) <= lambda_closed_eval(p, x) + 1e-15);
        if (x >= 0.3) CHECK(pair.lambda.eval(x) < lambda_closed_eval(p, x));
    }
    // sub-stochastic, no degree-1 mass, rho = x^2
    CHECK(pair.lambda.coeff(1) == 0.0);
    CHECK(pair.lambda.stored_sum() < 1.0);
    CHECK(pair.rho.coeff(3) == 1.0);
    CHECK_THROWS_AS(truncate_lambda(check_regular_lambda_fast(p, 30), p, 1e-5), error);
}

TEST_CASE("node_perspective basics") {
    DegreeDistribution rho;
    rho.coeffs = {0.0, 0.0, 0.0, 1.0};  // x^2
    auto Rn = node_perspective(rho, NodeDegreeDistribution::Kind::check);
    CHECK(Rn.coeff(3) == doctest::Approx(1.0));
    CHECK(Rn.eval(1.0) == doctest::Approx(1.0));
    CHECK(Rn.eval(0.5) == doctest::Approx(0.125));
    auto lam = bit_regular_lambda(3);
    auto Ln = node_perspective(lam, NodeDegreeDistribution::Kind::info);
    CHECK(Ln.coeff(3) == doctest::Approx(1.0));
    DegreeDistribution empty;
    empty.coeffs = {0.0, 0.0};
    CHECK_THROWS_AS(node_perspective(empty, NodeDegreeDistribution::Kind::check), error);
}

TEST_CASE("design_rate: toy pair and untruncated ensembles") {
    DegreeDistribution lam, rho;
    lam.coeffs = {0.0, 0.0, 0.0, 1.0};  // x^2
    rho.coeffs = {0.0, 0.0, 1.0};       // x
    CHECK(design_rate(lam, rho) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    for (double p : {0.2, 0.5, 0.8}) {
        auto l = check_regular_lambda_fast(p, 2000);
        DegreeDistribution r;
        r.coeffs = {0.0, 0.0, 0.0, 1.0};
        CHECK(design_rate(l, r) == doctest::Approx(1.0 - p).epsilon(1e-6));
    }
    auto r3 = bit_regular_rho(3, 1.0 / 13.0, 4000);
    CHECK(design_rate(bit_regular_lambda(3), r3) ==
          doctest::Approx(12.0 / 13.0).epsilon(1e-6));
}

TEST_CASE("rho_asymptotic: leading factor and error decay") {
    // q = 3 leading term is n^{-3/2} / (2 sqrt(pi))
    double lead = rho_asymptotic(3, 1e-12, 1000);
    CHECK(lead == doctest::Approx(std::pow(1000.0, -1.5) / (2.0 * std::sqrt(M_PI))).epsilon(2e-2));
    auto rho = bit_regular_rho(3, 1.0 / 13.0, 2001);
    double e2 = std::fabs(rho_asymptotic(3, 1.0 / 13.0, 100) - rho.coeff(101)) / rho.coeff(101);
    double e3 = std::fabs(rho_asymptotic(3, 1.0 / 13.0, 2000) - rho.coeff(2001)) / rho.coeff(2001);
    CHECK(e2 < 0.01);
    CHECK(e3 < e2);
    // estimate strictly positive for large n
    for (long long n : {100ll, 1000ll, 100000ll}) CHECK(rho_asymptotic(3, 1.0 / 13.0, n) > 0.0);
}

TEST_CASE("lambda_asymptotic: c(p) and the p -> 1 coefficient limit") {
    CHECK(lambda_c_factor(0.5) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    // lambda_n(p)/(1-p) -> (1/3) 4^{-(n-1)} binom(2n-2, n-1) as p -> 1
    auto vals = check_regular_lambda_exact(999, 1000, 8);
    for (int n = 2; n <= 8; ++n) {
        double ratio = vals[static_cast<std::size_t>(n)].to_double() / (1.0 - 0.999);
        double cnst = binomial(2 * n - 2, n - 1).to_double() / (3.0 * std::pow(4.0, n - 1));
        CHECK(ratio == doctest::Approx(cnst).epsilon(0.01));
    }
}

TEST_CASE("dd_to_csv emits n,coefficient rows") {
    DegreeDistribution dd;
    dd.coeffs = {0.0, 0.25, 0.75};
    std::string csv = dd_to_csv(dd);
    CHECK(csv == "n,coefficient\n1,0.25\n2,0.75\n");
}
