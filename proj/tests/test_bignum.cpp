#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "core/bigfloat.hpp"
#include "core/bignum.hpp"
#include "core/rng.hpp"

using namespace ira;

TEST_CASE("BigInt basic arithmetic") {
    BigInt a(123456789012345678ll);
    BigInt b(-98765432109876543ll);
    CHECK((a + b).to_decimal() == "24691356902469135");
    CHECK((a - b).to_decimal() == "222222221122222221");
    CHECK((b - a).to_decimal() == "-222222221122222221");
    CHECK((a * b).to_decimal() == "-12193263113702179407559823419631154");
    CHECK(BigInt(0ll).is_zero());
    CHECK((a - a).is_zero());
}

TEST_CASE("BigInt decimal round trip and shifts") {
    BigInt v = BigInt::from_decimal("340282366920938463463374607431768211456");  // 2^128
    CHECK(v.bit_length() == 129);
    CHECK(v.to_decimal() == "340282366920938463463374607431768211456");
    BigInt one(1ll);
    one.shl(128);
    CHECK(one == v);
    one.shr(128);
    CHECK(one == BigInt(1ll));
    CHECK(BigInt::from_decimal("-25").to_decimal() == "-25");
}

TEST_CASE("BigInt mul_small / add_mul_small / divrem_small") {
    BigInt x = BigInt::from_decimal("99999999999999999999999999");
    BigInt y = x;
    y.mul_small(-7);
    CHECK(y.to_decimal() == "-699999999999999999999999993");
    y.add_mul_small(x, 7);
    CHECK(y.is_zero());
    BigInt z = BigInt::from_decimal("1000000000000000000000");
    std::uint64_t r = z.divrem_small(7);
    CHECK(r == 6);
    CHECK(z.to_decimal() == "142857142857142857142");
}

TEST_CASE("BigInt fuzz against double arithmetic") {
    Rng rng(42);
    for (int it = 0; it < 500; ++it) {
        std::int64_t a = static_cast<std::int64_t>(rng.next() >> 24) - (1ll << 39);
        std::int64_t b = static_cast<std::int64_t>(rng.next() >> 24) - (1ll << 39);
        BigInt A(a), B(b);
        CHECK((A + B).to_double() == doctest::Approx(static_cast<double>(a) + b));
        CHECK((A - B).to_double() == doctest::Approx(static_cast<double>(a) - b));
        CHECK((A * B).to_double() ==
              doctest::Approx(static_cast<double>(a) * static_cast<double>(b)));
        CHECK((A <=> B == std::strong_ordering::less) == (a < b));
    }
}

TEST_CASE("BigInt gcd and divide_exact") {
    BigInt a = BigInt::from_decimal("123456789123456789123456789");
    BigInt g = BigInt::gcd(a.mul_small_copy(35), a.mul_small_copy(21));
    CHECK(g == a.mul_small_copy(7));
    CHECK(BigInt::divide_exact(a.mul_small_copy(35), a) == BigInt(35ll));
    CHECK(BigInt::divide_exact(a * a, a) == a);
    CHECK(BigInt::gcd(BigInt(0ll), a) == a);
}

TEST_CASE("Rational arithmetic and normalization") {
    Rational half = Rational::of(1, 2);
    Rational third = Rational::of(1, 3);
    CHECK((half + third) == Rational::of(5, 6));
    CHECK((half - third) == Rational::of(1, 6));
    CHECK((half * third) == Rational::of(1, 6));
    CHECK((half / third) == Rational::of(3, 2));
    CHECK(Rational::of(-4, -8) == half);
    CHECK(Rational::of(4, -8) == Rational::of(-1, 2));
    CHECK(Rational::of(2, 4).to_string() == "1/2");
    CHECK(Rational::of(6, 3).to_string() == "2");
    CHECK(half < Rational::of(2, 3));
    CHECK(half.to_double() == doctest::Approx(0.5));
}

TEST_CASE("BigFloat add/mul/div against doubles") {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        double a = (rng.uniform01() - 0.5) * 1e6;
        double b = (rng.uniform01() - 0.5) * 1e6 + 1e-3;
        BigFloat A = BigFloat::from_double(a, 192);
        BigFloat B = BigFloat::from_double(b, 192);
        CHECK((A + B).to_double() == doctest::Approx(a + b).epsilon(1e-14));
        CHECK((A - B).to_double() == doctest::Approx(a - b).epsilon(1e-14));
        CHECK((A * B).to_double() == doctest::Approx(a * b).epsilon(1e-14));
        CHECK((A / B).to_double() == doctest::Approx(a / b).epsilon(1e-13));
    }
}

TEST_CASE("BigFloat reciprocal reaches requested precision") {
    // 1/3 at 1024 bits: 3 * reciprocal(3) - 1 should be ~2^-1020 or smaller
    BigFloat three = BigFloat::from_double(3.0, 1024);
    BigFloat r = BigFloat::reciprocal(three, 1024);
    BigFloat err = three * r - BigFloat::from_double(1.0, 1024);
    CHECK(err.mag2() < -1000);
    // also a large magnitude value
    BigFloat big = BigFloat::from_double(1.372e250, 512);
    BigFloat rb = BigFloat::reciprocal(big, 512);
    BigFloat err2 = big * rb - BigFloat::from_double(1.0, 512);
    CHECK(err2.mag2() < -480);
}

TEST_CASE("BigFloat div_small and mul_small") {
    BigFloat x = BigFloat::from_double(1.0, 256);
    x.div_small(3);
    x.mul_small(3);
    BigFloat err = x - BigFloat::from_double(1.0, 256);
    CHECK(err.mag2() < -250);
}

TEST_CASE("BigFloat from_rational") {
    BigFloat x = BigFloat::from_rational(Rational::of(22, 7), 256);
    CHECK(x.to_double() == doctest::Approx(22.0 / 7.0).epsilon(1e-15));
}

TEST_CASE("Rng determinism and range") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng c(5);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t v = c.below(17);
        CHECK(v < 17);
    }
}
