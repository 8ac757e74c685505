/* Exact arithmetic primitives: rationals over 64-bit integers with checked
   intermediates, an unsigned big integer for dimension counts, and a
   prime-exponent map used to cancel factorial quotients exactly. */

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylbranch {

using i64 = std::int64_t;
using u64 = std::uint64_t;

namespace detail {
inline i64 checked_narrow(__int128 v, const char* ctx) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + ctx);
    return static_cast<i64>(v);
}
}  // namespace detail

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(i64 n) : num_(n), den_(1) {}
    Rational(i64 n, i64 d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator+(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from128(n, d);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        __int128 n = static_cast<__int128>(num_) * o.num_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        return from128(n, d);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::invalid_argument("division by zero rational");
        __int128 n = static_cast<__int128>(num_) * o.den_;
        __int128 d = static_cast<__int128>(den_) * o.num_;
        return from128(n, d);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a == 0) a = 1;
        Rational r;
        r.num_ = detail::checked_narrow(n / a, "rational");
        r.den_ = detail::checked_narrow(d / a, "rational");
        return r;
    }
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }
    i64 num_, den_;
};

/* Nonnegative arbitrary-precision integer, base 10^9 limbs. Only the
   operations the dimension bookkeeping actually needs. */
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    BigUint(u64 v) {
        limbs_.clear();
        if (v == 0) limbs_.push_back(0);
        while (v) { limbs_.push_back(static_cast<std::uint32_t>(v % BASE)); v /= BASE; }
    }

    void mul_small(u64 m) {
        if (m == 0) { limbs_.assign(1, 0); return; }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        while (carry) { limbs_.push_back(static_cast<std::uint32_t>(carry % BASE)); carry /= BASE; }
    }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }
    bool fits_u64() const {
        if (limbs_.size() > 3) return false;
        unsigned __int128 v = value128();
        return v <= static_cast<unsigned __int128>(UINT64_MAX);
    }
    u64 to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUint does not fit in 64 bits: " + str());
        return static_cast<u64>(value128());
    }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return limbs_ != o.limbs_; }
    bool operator==(u64 v) const { return fits_u64() && to_u64() == v; }
    bool operator<=(u64 v) const { return fits_u64() && to_u64() <= v; }
    bool operator>(u64 v) const { return !(*this <= v); }

    std::string str() const {
        std::string out = std::to_string(limbs_.back());
        for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
            std::string part = std::to_string(*it);
            out += std::string(9 - part.size(), '0') + part;
        }
        return out;
    }

  private:
    unsigned __int128 value128() const {
        unsigned __int128 v = 0;
        for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) v = v * BASE + *it;
        return v;
    }
    static constexpr u64 BASE = 1000000000ull;
    std::vector<std::uint32_t> limbs_;  // little-endian
};

/* Product of primes with integer exponents; supports exact quotients of
   factorials and of small-factor products without ever forming the large
   intermediate values. */
class Factored {
  public:
    void mul_integer(i64 v, i64 exponent = 1) {
        if (v <= 0) throw std::invalid_argument("Factored::mul_integer requires positive value");
        for (i64 p = 2; p * p <= v; ++p)
            while (v % p == 0) { exp_[p] += exponent; v /= p; }
        if (v > 1) exp_[v] += exponent;
        trim();
    }
    void mul_factorial(i64 n, i64 exponent = 1) {
        for (i64 i = 2; i <= n; ++i) mul_integer(i, exponent);
    }
    void mul(const Factored& o, i64 exponent = 1) {
        for (auto& [p, e] : o.exp_) exp_[p] += e * exponent;
        trim();
    }
    bool nonnegative() const {
        for (auto& [p, e] : exp_) if (e < 0) return false;
        return true;
    }
    BigUint to_biguint() const {
        if (!nonnegative()) throw std::domain_error("Factored value is not an integer");
        BigUint out(1);
        for (auto& [p, e] : exp_)
            for (i64 i = 0; i < e; ++i) out.mul_small(static_cast<u64>(p));
        return out;
    }

  private:
    void trim() {
        for (auto it = exp_.begin(); it != exp_.end();)
            it = it->second == 0 ? exp_.erase(it) : std::next(it);
    }
    std::map<i64, i64> exp_;
};

}  // namespace weylbranch
