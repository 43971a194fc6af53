#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/analysis.hpp"
#include "core/bit_regular.hpp"
#include "core/check_regular.hpp"
#include "core/errors.hpp"

using namespace ira;

namespace {

TruncatedPair make_check_pair(double p = 0.5, double eps = 0.1) {
    return truncate_lambda(check_regular_lambda_fast(p, 2000), p, eps);
}

TruncatedPair make_bit_pair(double p = 1.0 / 13.0, double eps = 0.1, int q = 3) {
    return truncate_rho(bit_regular_rho(q, p, 4000), q, p, eps);
}

}  // namespace

TEST_CASE("untruncated pairs satisfy the DE equation as an equality") {
    auto cr = DEPair::untruncated_check_regular(0.5, 500);
    auto br = DEPair::untruncated_bit_regular(3, 1.0 / 13.0, 2000);
    double worst_cr = 0.0, worst_br = 0.0;
    for (int i = 1; i <= 500; ++i) {
        double x = static_cast<double>(i) / 500.0;
        worst_cr = std::max(worst_cr, std::fabs(cr.map(0.5, x) - x));
        worst_br = std::max(worst_br, std::fabs(br.map(1.0 / 13.0, x) - x));
    }
    CHECK(worst_cr <= 1e-8);
    CHECK(worst_br <= 1e-8);
}

TEST_CASE("de_map endpoints and the message decomposition") {
    auto pair = DEPair::from_truncated(make_check_pair());
    CHECK(pair.map(0.5, 0.0) == 0.0);
    // untruncated maps fix x = 1
    auto cr = DEPair::untruncated_check_regular(0.5, 300);
    CHECK(cr.map(0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    auto br = DEPair::untruncated_bit_regular(3, 1.0 / 13.0, 1000);
    CHECK(br.map(1.0 / 13.0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // decomposition: x2 = p x1, f = lambda(x3), consistent with map()
    DEMessages m = br.map_detail(1.0 / 13.0, 0.37);
    CHECK(m.x2 == doctest::Approx(m.x1 / 13.0).epsilon(1e-14));
    CHECK(m.f == doctest::Approx(br.map(1.0 / 13.0, 0.37)).epsilon(1e-12));
    CHECK(m.x3 >= 0.0);
    CHECK(m.x3 <= 1.0);
    CHECK_THROWS_AS(pair.map(0.5, 1.5), error);
}

TEST_CASE("de_iterate fixed points and convergence") {
    auto trunc = DEPair::from_truncated(make_check_pair());
    // x = 0 stays 0
    auto t0 = de_iterate(trunc, 0.45, 0.0, 50, 1e-12);
    CHECK(t0.final_value == 0.0);
    // from x = 1 at an operating point below the design erasure rate the
    // iteration contracts geometrically
    auto t1 = de_iterate(trunc, 0.45, 1.0, 2000, 1e-12);
    CHECK(t1.converged);
    CHECK(t1.final_value <= 1e-6);
    // untruncated: the fixed point at x = 1 pins the decoder
    auto cr = DEPair::untruncated_check_regular(0.5, 300);
    auto t2 = de_iterate(cr, 0.5, 1.0, 200, 1e-12);
    CHECK(t2.final_value >= 1.0 - 1e-9);
    auto br = DEPair::untruncated_bit_regular(3, 1.0 / 13.0, 1000);
    auto t3 = de_iterate(br, 1.0 / 13.0, 1.0, 200, 1e-12);
    CHECK(t3.final_value >= 1.0 - 1e-9);
    // truncated bit-regular converges from x = 1 even at the design p
    auto bt = DEPair::from_truncated(make_bit_pair());
    auto t4 = de_iterate(bt, 1.0 / 13.0, 1.0, 2000, 1e-12);
    CHECK(t4.final_value <= 1e-6);
}

TEST_CASE("de_margin_check: truncated pairs pass at their design p") {
    auto ct = DEPair::from_truncated(make_check_pair());
    DEReport rep = de_margin_check(ct, 0.5, 1000);
    CHECK(rep.passes);
    CHECK(rep.min_margin > 0.0);
    auto bt = DEPair::from_truncated(make_bit_pair());
    DEReport rep2 = de_margin_check(bt, 1.0 / 13.0, 1000);
    CHECK(rep2.passes);
    // near-capacity channel fails for any pair
    DEReport rep3 = de_margin_check(ct, 0.995, 500);
    CHECK(!rep3.passes);
    // untruncated pairs fail: x = 1 is a fixed point
    auto cr = DEPair::untruncated_check_regular(0.5, 300);
    CHECK(!de_margin_check(cr, 0.5, 500).passes);
    CHECK_THROWS_AS(de_margin_check(ct, 0.5, 50), error);
    // CSV shape
    std::string csv = rep.to_csv();
    CHECK(csv.substr(0, 13) == "x,f_x,margin\n");
}

TEST_CASE("de monotonicity in x and p") {
    auto ct = DEPair::from_truncated(make_check_pair());
    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        double x = static_cast<double>(i) / 200.0;
        double f = ct.map(0.37, x);
        CHECK(f >= prev - 1e-14);
        prev = f;
    }
    for (int i = 1; i < 20; ++i) {
        double p1 = static_cast<double>(i) / 21.0;
        double p2 = p1 + 0.02;
        CHECK(ct.map(p2, 0.61) >= ct.map(p1, 0.61) - 1e-14);
    }
}

TEST_CASE("threshold_search brackets the design point") {
    auto ct = DEPair::from_truncated(make_check_pair());
    ThresholdResult r = threshold_search(ct, 0.30, 0.95, 1e-5, 500);
    CHECK(r.p_star >= 0.5 - 1e-4);
    CHECK(r.p_star < 1.0);
    CHECK(r.bracket_width <= 1e-5);
    // invariance under grid doubling
    ThresholdResult r2 = threshold_search(ct, 0.30, 0.95, 1e-5, 1000);
    CHECK(std::fabs(r2.p_star - r.p_star) <= 2e-5);
    CHECK_THROWS_AS(threshold_search(ct, 0.98, 0.99, 1e-5, 500), error);
}

TEST_CASE("stability conditions at the endpoints") {
    // bit-regular: lambda_2 = 0 and rho'(1) diverges -> equality in the limit
    auto br = DEPair::untruncated_bit_regular(3, 1.0 / 13.0, 10000);
    StabilityReport s1 = stability_report(br, 1.0 / 13.0);
    CHECK(s1.lambda2 == 0.0);
    CHECK(s1.rho_deriv_divergent);
    CHECK(s1.zero_equality_limit);
    CHECK(s1.zero_ok);
    CHECK(s1.rhs_zero == 0.0);

    // check-regular untruncated: lambda'(1) diverges, rho_2 = 0
    auto cr = DEPair::untruncated_check_regular(0.5, 10000);
    StabilityReport s2 = stability_report(cr, 0.5);
    CHECK(s2.rho2 == 0.0);
    CHECK(s2.lambda_deriv_divergent);
    CHECK(s2.one_equality_limit);
    CHECK(s2.rhs_one == 0.0);
    // and the x=0 condition holds with equality: lambda_2 = (1-p)/(2+4p)
    CHECK(s2.lambda2 == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(s2.zero_equality_limit);

    // truncated check-regular: finite lambda'(1), rho_2 = 0 -> pilots required
    auto ct = DEPair::from_truncated(make_check_pair());
    StabilityReport s3 = stability_report(ct, 0.5);
    CHECK(!s3.lambda_deriv_divergent);
    CHECK(s3.rhs_one > 0.0);
    CHECK(!s3.one_unstable);
    CHECK(!s3.one_equality_limit);
    CHECK(!s3.to_text().empty());
}

TEST_CASE("divergence surrogate: partial sums grow across decades") {
    auto lam = check_regular_lambda_fast(0.5, 10000);
    double s100 = 0.0, s10000 = 0.0;
    for (int i = 2; i <= 10000; ++i) {
        double t = (i - 1.0) * lam.coeff(i);
        if (i <= 100) s100 += t;
        s10000 += t;
    }
    CHECK(s10000 > 10.0 * s100);
    auto rho = bit_regular_rho(3, 1.0 / 13.0, 10000);
    double r100 = 0.0, r10000 = 0.0;
    for (int i = 2; i <= 10000; ++i) {
        double t = (i - 1.0) * rho.coeff(i);
        if (i <= 100) r100 += t;
        r10000 += t;
    }
    CHECK(r10000 > 10.0 * r100);
}

TEST_CASE("margin at the design p equals the dropped tail for check-regular") {
    TruncatedPair pair = make_check_pair();
    auto ct = DEPair::from_truncated(pair);
    // at moderate x both routes agree
    for (double x : {0.3, 0.5, 0.8}) {
        double via_tail = ct.margin(0.5, x);
        double direct = x - ct.map(0.5, x);
        CHECK(via_tail == doctest::Approx(direct).epsilon(1e-6));
    }
    // at tiny x the direct route is pure rounding noise; the tail stays positive
    CHECK(ct.margin(0.5, 1e-9) > 0.0);
    CHECK(ct.margin(0.5, 1e-9) < 1e-12);
}
