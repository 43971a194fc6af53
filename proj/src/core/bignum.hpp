#ifndef IRA_CORE_BIGNUM_HPP
#define IRA_CORE_BIGNUM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ira {

// Arbitrary-precision signed integer, little-endian 64-bit limbs.
// Division is only provided by small (64-bit) divisors; the higher layers
// never need a full big/big quotient.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v, bool negative = false);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

    static BigInt from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (neg_ ? -1 : 1); }
    bool is_negative() const { return neg_; }
    std::size_t bit_length() const;
    std::size_t limb_count() const { return limbs_.size(); }

    BigInt& operator+=(const BigInt& b);
    BigInt& operator-=(const BigInt& b);
    friend BigInt operator+(BigInt a, const BigInt& b) { a += b; return a; }
    friend BigInt operator-(BigInt a, const BigInt& b) { a -= b; return a; }
    BigInt operator-() const { BigInt r = *this; r.negate(); return r; }

    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // In-place multiply by a machine integer.
    BigInt& mul_small(long long m);
    BigInt mul_small_copy(long long m) const { BigInt r = *this; r.mul_small(m); return r; }
    // *this += b * m
    BigInt& add_mul_small(const BigInt& b, long long m);

    // In-place divide by d (d > 0), returns the remainder (sign follows *this).
    // The caller is responsible for d dividing evenly when exactness matters.
    std::uint64_t divrem_small(std::uint64_t d);

    BigInt& shl(std::size_t bits);
    BigInt& shr(std::size_t bits);  // arithmetic toward zero on the magnitude
    BigInt shl_copy(std::size_t bits) const { BigInt r = *this; r.shl(bits); return r; }

    void negate() { if (!limbs_.empty()) neg_ = !neg_; }
    BigInt abs() const { BigInt r = *this; r.neg_ = false; return r; }

    bool operator==(const BigInt& b) const { return neg_ == b.neg_ && limbs_ == b.limbs_; }
    std::strong_ordering operator<=>(const BigInt& b) const;
    // -1, 0, 1 comparing |a| with |b|
    static int cmp_abs(const BigInt& a, const BigInt& b);

    // Value as m * 2^e with 0.5 <= |m| < 1 (m = 0 for zero).
    std::pair<double, long long> to_double_exp() const;
    double to_double() const;

    std::string to_decimal() const;

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(BigInt base, unsigned long long e);
    // Quotient a/b for the case where b divides a exactly (used by gcd reduction).
    static BigInt divide_exact(const BigInt& a, const BigInt& b);

    // Number of trailing zero bits (value must be nonzero).
    std::size_t trailing_zero_bits() const;

private:
    std::vector<std::uint64_t> limbs_;
    bool neg_ = false;

    void trim();
    BigInt& accumulate(const BigInt& b, bool b_neg);
    static void add_abs_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    // a -= b, requires |a| >= |b|
    static void sub_abs_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static int cmp_abs_limbs(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    friend class BigFloat;
};

// Exact rational with normalized sign (den > 0) and gcd-reduced terms.
class Rational {
public:
    Rational() : num_(0ll), den_(1ll) {}
    Rational(long long v) : num_(v), den_(1ll) {}
    Rational(BigInt num, BigInt den);
    static Rational of(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { Rational r = *this; r.num_.negate(); return r; }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    bool operator==(const Rational& b) const { return num_ == b.num_ && den_ == b.den_; }
    std::strong_ordering operator<=>(const Rational& b) const;

    Rational abs() const { Rational r = *this; if (r.num_.is_negative()) r.num_.negate(); return r; }
    double to_double() const;
    std::pair<double, long long> to_double_exp() const;
    // "num/den", or just "num" when den == 1
    std::string to_string() const;

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace ira

#endif
