#ifndef IRA_CORE_BIGFLOAT_HPP
#define IRA_CORE_BIGFLOAT_HPP

#include <cstdint>
#include <utility>

#include "core/bignum.hpp"

namespace ira {

// Software floating point: value = mant * 2^exp, mantissa kept to `prec` bits
// (truncated toward zero after each operation). Precision propagates as the
// max of the operands' precisions.
class BigFloat {
public:
    BigFloat() : prec_(64) {}
    explicit BigFloat(unsigned prec) : prec_(prec) {}
    BigFloat(const BigInt& v, unsigned prec);
    static BigFloat from_double(double d, unsigned prec);
    static BigFloat from_rational(const Rational& r, unsigned prec);
    static BigFloat from_int(long long v, unsigned prec) { return BigFloat(BigInt(v), prec); }

    bool is_zero() const { return mant_.is_zero(); }
    int sign() const { return mant_.sign(); }
    unsigned precision() const { return prec_; }
    void set_precision(unsigned prec) { prec_ = prec; normalize(); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    BigFloat& operator+=(const BigFloat& b) { *this = *this + b; return *this; }
    BigFloat& operator-=(const BigFloat& b) { *this = *this - b; return *this; }
    BigFloat& operator*=(const BigFloat& b) { *this = *this * b; return *this; }
    BigFloat operator-() const { BigFloat r = *this; r.mant_.negate(); return r; }

    BigFloat& mul_small(long long m);
    BigFloat& div_small(long long d);

    // 1/x to `prec` bits via Newton iteration (no big division anywhere).
    static BigFloat reciprocal(const BigFloat& x, unsigned prec);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        unsigned p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
        return a * reciprocal(b, p);
    }

    int cmp(const BigFloat& b) const;
    bool operator<(const BigFloat& b) const { return cmp(b) < 0; }
    bool operator>(const BigFloat& b) const { return cmp(b) > 0; }

    double to_double() const;
    std::pair<double, long long> to_double_exp() const;  // m in [0.5,1), value = m*2^e
    // floor(log2 |x|) + 1, i.e. the position of the leading bit; INT64_MIN for zero
    long long mag2() const;

private:
    BigInt mant_;
    long long exp_ = 0;
    unsigned prec_;
    void normalize();
};

}  // namespace ira

#endif
