#include "core/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ira {

void BigFloat::normalize() {
    if (mant_.is_zero()) { exp_ = 0; return; }
    std::size_t bl = mant_.bit_length();
    if (bl > prec_) {
        std::size_t drop = bl - prec_;
        mant_.shr(drop);
        exp_ += static_cast<long long>(drop);
        if (mant_.is_zero()) exp_ = 0;
    }
}

BigFloat::BigFloat(const BigInt& v, unsigned prec) : mant_(v), exp_(0), prec_(prec) { normalize(); }

BigFloat BigFloat::from_double(double d, unsigned prec) {
    BigFloat r(prec);
    if (d == 0.0) return r;
    if (!std::isfinite(d)) throw std::domain_error("BigFloat: non-finite double");
    int e;
    double m = std::frexp(d, &e);          // |m| in [0.5, 1)
    long long im = std::llround(m * 9007199254740992.0);  // m * 2^53, exact
    r.mant_ = BigInt(im);
    r.exp_ = e - 53;
    r.normalize();
    return r;
}

BigFloat BigFloat::from_rational(const Rational& r, unsigned prec) {
    BigFloat num(r.num(), prec + 64);
    BigFloat den(r.den(), prec + 64);
    BigFloat q = num * reciprocal(den, prec + 64);
    q.set_precision(prec);
    return q;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    unsigned p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    if (a.is_zero()) { BigFloat r = b; r.prec_ = p; r.normalize(); return r; }
    if (b.is_zero()) { BigFloat r = a; r.prec_ = p; r.normalize(); return r; }
    const BigFloat* hi = &a;
    const BigFloat* lo = &b;
    if (hi->exp_ < lo->exp_) std::swap(hi, lo);
    long long diff = hi->exp_ - lo->exp_;
    BigFloat r(p);
    // if hi dwarfs lo beyond precision, lo only matters when it can still
    // perturb the trailing bit
    long long hi_top = hi->exp_ + static_cast<long long>(hi->mant_.bit_length());
    long long lo_top = lo->exp_ + static_cast<long long>(lo->mant_.bit_length());
    if (hi_top - lo_top > static_cast<long long>(p) + 4) {
        r.mant_ = hi->mant_;
        r.exp_ = hi->exp_;
        r.normalize();
        return r;
    }
    BigInt shifted = hi->mant_;
    shifted.shl(static_cast<std::size_t>(diff));
    shifted += lo->mant_;
    r.mant_ = std::move(shifted);
    r.exp_ = lo->exp_;
    r.normalize();
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat nb = b;
    nb.mant_.negate();
    return a + nb;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    unsigned p = a.prec_ > b.prec_ ? a.prec_ : b.prec_;
    BigFloat r(p);
    if (a.is_zero() || b.is_zero()) return r;
    r.mant_ = a.mant_ * b.mant_;
    r.exp_ = a.exp_ + b.exp_;
    r.normalize();
    return r;
}

BigFloat& BigFloat::mul_small(long long m) {
    if (m == 0) { mant_ = BigInt(); exp_ = 0; return *this; }
    mant_.mul_small(m);
    normalize();
    return *this;
}

BigFloat& BigFloat::div_small(long long d) {
    if (d == 0) throw std::domain_error("BigFloat: division by zero");
    if (mant_.is_zero()) return *this;
    bool dn = d < 0;
    std::uint64_t mag = dn ? (~static_cast<std::uint64_t>(d) + 1ull) : static_cast<std::uint64_t>(d);
    // headroom so the truncated quotient still carries prec_ good bits
    std::size_t up = 64 + (prec_ > mant_.bit_length() ? prec_ - mant_.bit_length() : 0);
    mant_.shl(up);
    exp_ -= static_cast<long long>(up);
    mant_.divrem_small(mag);
    if (dn) mant_.negate();
    normalize();
    return *this;
}

BigFloat BigFloat::reciprocal(const BigFloat& x, unsigned prec) {
    if (x.is_zero()) throw std::domain_error("BigFloat: reciprocal of zero");
    auto [m, e] = x.to_double_exp();
    BigFloat r = from_double(1.0 / m, 64);
    r.exp_ -= e;
    // Newton: r <- r(2 - x r), doubling accuracy per step
    unsigned cur = 50;
    BigFloat two = from_double(2.0, prec + 64);
    while (cur < prec + 32) {
        cur = cur * 2;
        unsigned wp = cur + 64 > prec + 64 ? prec + 64 : cur + 64;
        r.set_precision(wp);
        BigFloat xr = x * r;
        xr.set_precision(wp);
        BigFloat corr = two - xr;
        r = r * corr;
        r.set_precision(wp);
    }
    r.set_precision(prec);
    return r;
}

int BigFloat::cmp(const BigFloat& b) const {
    BigFloat d = *this - b;
    return d.sign();
}

double BigFloat::to_double() const {
    auto [m, e] = to_double_exp();
    if (m == 0.0) return 0.0;
    if (e > 1100) return m > 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
    if (e < -1100) return 0.0;
    return std::ldexp(m, static_cast<int>(e));
}

std::pair<double, long long> BigFloat::to_double_exp() const {
    auto [m, e] = mant_.to_double_exp();
    if (m == 0.0) return {0.0, 0};
    return {m, e + exp_};
}

long long BigFloat::mag2() const {
    if (mant_.is_zero()) return std::numeric_limits<long long>::min();
    return exp_ + static_cast<long long>(mant_.bit_length());
}

}  // namespace ira
