#include "core/bignum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace ira {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    unsigned long long mag = neg_ ? (~static_cast<unsigned long long>(v) + 1ull)
                                  : static_cast<unsigned long long>(v);
    limbs_.push_back(mag);
}

BigInt::BigInt(unsigned long long v, bool negative) {
    if (v == 0) return;
    limbs_.push_back(v);
    neg_ = negative;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

std::size_t BigInt::trailing_zero_bits() const {
    std::size_t n = 0;
    for (u64 limb : limbs_) {
        if (limb == 0) { n += 64; continue; }
        return n + std::countr_zero(limb);
    }
    return n;
}

int BigInt::cmp_abs_limbs(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) { return cmp_abs_limbs(a.limbs_, b.limbs_); }

void BigInt::add_abs_into(std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u128 s = static_cast<u128>(a[i]) + b[i] + carry;
        a[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    for (; carry && i < a.size(); ++i) {
        u128 s = static_cast<u128>(a[i]) + carry;
        a[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    if (carry) a.push_back(carry);
}

void BigInt::sub_abs_into(std::vector<u64>& a, const std::vector<u64>& b) {
    u64 borrow = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
        a[i] = static_cast<u64>(d);
        borrow = (d >> 64) ? 1 : 0;
    }
    for (; borrow && i < a.size(); ++i) {
        u128 d = static_cast<u128>(a[i]) - borrow;
        a[i] = static_cast<u64>(d);
        borrow = (d >> 64) ? 1 : 0;
    }
}

BigInt& BigInt::accumulate(const BigInt& b, bool b_neg) {
    if (b.limbs_.empty()) return *this;
    if (limbs_.empty()) { limbs_ = b.limbs_; neg_ = b_neg; return *this; }
    if (neg_ == b_neg) {
        add_abs_into(limbs_, b.limbs_);
    } else {
        int c = cmp_abs_limbs(limbs_, b.limbs_);
        if (c == 0) { limbs_.clear(); neg_ = false; return *this; }
        if (c > 0) {
            sub_abs_into(limbs_, b.limbs_);
        } else {
            std::vector<u64> t = b.limbs_;
            sub_abs_into(t, limbs_);
            limbs_ = std::move(t);
            neg_ = b_neg;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator+=(const BigInt& b) { return accumulate(b, b.neg_); }

BigInt& BigInt::operator-=(const BigInt& b) {
    if (&b == this) { limbs_.clear(); neg_ = false; return *this; }
    return accumulate(b, !b.neg_);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.limbs_.empty() || b.limbs_.empty()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        u64 carry = 0;
        u64 ai = a.limbs_[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            u128 cur = static_cast<u128>(ai) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            u128 cur = static_cast<u128>(r.limbs_[k]) + carry;
            r.limbs_[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
}

BigInt& BigInt::mul_small(long long m) {
    if (m == 0 || limbs_.empty()) { limbs_.clear(); neg_ = false; return *this; }
    bool mneg = m < 0;
    u64 mag = mneg ? (~static_cast<u64>(m) + 1ull) : static_cast<u64>(m);
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u128 cur = static_cast<u128>(limb) * mag + carry;
        limb = static_cast<u64>(cur);
        carry = static_cast<u64>(cur >> 64);
    }
    if (carry) limbs_.push_back(carry);
    neg_ = neg_ != mneg;
    return *this;
}

BigInt& BigInt::add_mul_small(const BigInt& b, long long m) {
    if (m == 0 || b.limbs_.empty()) return *this;
    BigInt t = b;
    t.mul_small(m);
    return *this += t;
}

std::uint64_t BigInt::divrem_small(u64 d) {
    if (d == 0) throw std::domain_error("BigInt: division by zero");
    u128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        u128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<u64>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<u64>(rem);
}

BigInt& BigInt::shl(std::size_t bits) {
    if (limbs_.empty() || bits == 0) return *this;
    std::size_t words = bits / 64, rest = bits % 64;
    if (rest == 0) {
        limbs_.insert(limbs_.begin(), words, 0);
        return *this;
    }
    u64 carry = 0;
    for (auto& limb : limbs_) {
        u64 nxt = limb >> (64 - rest);
        limb = (limb << rest) | carry;
        carry = nxt;
    }
    if (carry) limbs_.push_back(carry);
    if (words) limbs_.insert(limbs_.begin(), words, 0);
    return *this;
}

BigInt& BigInt::shr(std::size_t bits) {
    if (limbs_.empty() || bits == 0) return *this;
    std::size_t words = bits / 64, rest = bits % 64;
    if (words >= limbs_.size()) { limbs_.clear(); neg_ = false; return *this; }
    if (words) limbs_.erase(limbs_.begin(), limbs_.begin() + words);
    if (rest) {
        u64 carry = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            u64 nxt = limbs_[i] << (64 - rest);
            limbs_[i] = (limbs_[i] >> rest) | carry;
            carry = nxt;
        }
    }
    trim();
    return *this;
}

std::strong_ordering BigInt::operator<=>(const BigInt& b) const {
    if (neg_ != b.neg_) return neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_abs_limbs(limbs_, b.limbs_);
    if (neg_) c = -c;
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::pair<double, long long> BigInt::to_double_exp() const {
    if (limbs_.empty()) return {0.0, 0};
    // take the top 64+ bits
    std::size_t bl = bit_length();
    double m = 0.0;
    // accumulate the top up-to-96 bits
    long long top = static_cast<long long>(bl);
    std::size_t take = limbs_.size();
    std::size_t start = take > 2 ? take - 2 : 0;
    for (std::size_t i = take; i-- > start;) {
        m = m * 9007199254740992.0 * 2048.0;  // 2^64
        m += static_cast<double>(limbs_[i]);
    }
    long long e = static_cast<long long>(start) * 64;
    // normalize m into [0.5, 1)
    int me;
    m = std::frexp(m, &me);
    e += me;
    (void)top;
    if (neg_) m = -m;
    return {m, e};
}

double BigInt::to_double() const {
    auto [m, e] = to_double_exp();
    return std::ldexp(m, static_cast<int>(std::min<long long>(e, 1 << 29)));
}

std::string BigInt::to_decimal() const {
    if (limbs_.empty()) return "0";
    BigInt t = *this;
    t.neg_ = false;
    std::string out;
    while (!t.is_zero()) {
        u64 r = t.divrem_small(10000000000000000000ull);  // 10^19
        char buf[20];
        int len = 0;
        for (int k = 0; k < 19; ++k) { buf[len++] = static_cast<char>('0' + r % 10); r /= 10; }
        if (t.is_zero()) {
            while (len > 1 && buf[len - 1] == '0') --len;
        }
        out.append(buf, buf + len);
    }
    if (neg_) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

BigInt BigInt::from_decimal(std::string_view s) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
    if (i >= s.size()) throw std::invalid_argument("BigInt: empty decimal string");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad decimal digit");
        r.mul_small(10);
        r += BigInt(static_cast<long long>(s[i] - '0'));
    }
    if (neg) r.negate();
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t az = a.trailing_zero_bits(), bz = b.trailing_zero_bits();
    std::size_t shift = std::min(az, bz);
    a.shr(az);
    b.shr(bz);
    while (true) {
        int c = cmp_abs(a, b);
        if (c == 0) break;
        if (c < 0) std::swap(a, b);
        sub_abs_into(a.limbs_, b.limbs_);
        a.trim();
        if (a.is_zero()) { a = b; break; }
        a.shr(a.trailing_zero_bits());
    }
    a.shl(shift);
    return a;
}

BigInt BigInt::pow(BigInt base, unsigned long long e) {
    BigInt r(1ll);
    while (e) {
        if (e & 1ull) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) { den_.negate(); num_.negate(); }
    if (num_.is_zero()) { den_ = BigInt(1ll); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (g.bit_length() > 1) {
        num_ = BigInt::divide_exact(num_, g);
        den_ = BigInt::divide_exact(den_, g);
    }
}

BigInt BigInt::divide_exact(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    if (a.is_zero()) return BigInt();
    if (b.limbs_.size() == 1) {
        BigInt q = a.abs();
        q.divrem_small(b.limbs_[0]);
        if (a.neg_ != b.neg_) q.negate();
        return q;
    }
    // binary long division on magnitudes
    std::size_t bl_a = a.bit_length(), bl_b = b.bit_length();
    if (bl_a < bl_b) return BigInt();
    BigInt rem = a.abs();
    BigInt cur = b.abs();
    long long shift = static_cast<long long>(bl_a - bl_b);
    cur.shl(static_cast<std::size_t>(shift));
    BigInt q;
    for (long long s = shift; s >= 0; --s) {
        q.shl(1);
        if (cmp_abs(rem, cur) >= 0) {
            sub_abs_into(rem.limbs_, cur.limbs_);
            rem.trim();
            q += BigInt(1ll);
        }
        cur.shr(1);
    }
    if (a.neg_ != b.neg_) q.negate();
    return q;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& b) const {
    BigInt lhs = num_ * b.den_;
    BigInt rhs = b.num_ * den_;
    return lhs <=> rhs;
}

double Rational::to_double() const {
    auto [m, e] = to_double_exp();
    if (e > (1ll << 29)) e = 1ll << 29;
    if (e < -(1ll << 29)) e = -(1ll << 29);
    return std::ldexp(m, static_cast<int>(e));
}

std::pair<double, long long> Rational::to_double_exp() const {
    auto [mn, en] = num_.to_double_exp();
    auto [md, ed] = den_.to_double_exp();
    if (mn == 0.0) return {0.0, 0};
    double m = mn / md;
    long long e = en - ed;
    int adj;
    m = std::frexp(m, &adj);
    return {m, e + adj};
}

std::string Rational::to_string() const {
    std::string s = num_.to_decimal();
    BigInt one(1ll);
    if (!(den_ == one)) {
        s.push_back('/');
        s += den_.to_decimal();
    }
    return s;
}

}  // namespace ira
