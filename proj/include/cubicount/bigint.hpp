#ifndef CUBICOUNT_BIGINT_HPP
#define CUBICOUNT_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cubicount/common.hpp"

namespace cubicount {

// Arbitrary-precision signed integer, sign-magnitude with 32-bit limbs.
// Sized for exact counting arithmetic (a few thousand bits), not cryptography.
class BigInt {
   public:
    BigInt() = default;
    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        limbs_.push_back(static_cast<std::uint32_t>(m));
        if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
    }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }
    bool odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

    std::size_t bit_length() const {
        if (sign_ == 0) return 0;
        std::uint32_t top = limbs_.back();
        std::size_t b = (limbs_.size() - 1) * 32;
        while (top) {
            ++b;
            top >>= 1;
        }
        return b;
    }
    bool bit(std::size_t i) const {
        std::size_t limb = i / 32;
        if (limb >= limbs_.size()) return false;
        return (limbs_[limb] >> (i % 32)) & 1u;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt{};
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt{};
        BigInt r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                    r.limbs_[i + j] + carry;
                r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                std::uint64_t cur = r.limbs_[k] + carry;
                r.limbs_[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        r.sign_ = a.sign_ * b.sign_;
        r.trim();
        return r;
    }
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division (quotient rounds toward zero, remainder has sign of a).
    static void divrem(const BigInt& a, const BigInt& b, BigInt& quo, BigInt& rem) {
        if (b.sign_ == 0) throw ValidationError("bigint: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            quo = BigInt{};
            rem = a;
            return;
        }
        // simple binary long division on magnitudes
        BigInt q, r;
        std::size_t n = a.bit_length();
        q.limbs_.assign((n + 31) / 32, 0);
        for (std::size_t i = n; i-- > 0;) {
            r.shift_left_1();
            if (a.bit(i)) {
                if (r.limbs_.empty()) r.limbs_.push_back(0);
                r.limbs_[0] |= 1u;
                r.sign_ = 1;
            }
            if (cmp_mag(r.limbs_, b.limbs_) >= 0) {
                r.limbs_ = sub_mag(r.limbs_, b.limbs_);
                r.sign_ = r.limbs_.empty() ? 0 : 1;
                q.limbs_[i / 32] |= (1u << (i % 32));
            }
        }
        q.sign_ = 1;
        q.trim();
        r.trim();
        if (!q.limbs_.empty()) q.sign_ = a.sign_ * b.sign_;
        else q.sign_ = 0;
        if (!r.limbs_.empty()) r.sign_ = a.sign_;
        else r.sign_ = 0;
        quo = q;
        rem = r;
    }
    BigInt operator/(const BigInt& b) const {
        BigInt q, r;
        divrem(*this, b, q, r);
        return q;
    }
    BigInt operator%(const BigInt& b) const {
        BigInt q, r;
        divrem(*this, b, q, r);
        return r;
    }
    // Division that is known to be exact; a nonzero remainder is a bug upstream.
    BigInt divexact(const BigInt& d) const {
        BigInt q, r;
        divrem(*this, d, q, r);
        if (!r.is_zero()) throw InternalError("bigint: checked-exact division left a remainder");
        return q;
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r{1}, b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Residue in [0, m) for m > 0, independent of this->sign().
    long long mod_small(long long m) const {
        if (m <= 0) throw ValidationError("bigint: modulus must be positive");
        unsigned long long acc = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;)
            acc = static_cast<unsigned long long>(
                ((static_cast<unsigned __int128>(acc) << 32) | limbs_[i]) % m);
        long long r = static_cast<long long>(acc);
        if (sign_ < 0 && r != 0) r = m - r;
        return r;
    }

    bool fits_longlong() const {
        if (bit_length() < 63) return true;
        return false;
    }
    long long to_longlong() const {
        if (!fits_longlong()) throw InternalError("bigint: value exceeds long long");
        long long v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return sign_ < 0 ? -v : v;
    }
    bool fits_uint64() const { return sign_ >= 0 && bit_length() <= 64; }
    std::uint64_t to_uint64() const {
        if (!fits_uint64()) throw InternalError("bigint: value exceeds uint64");
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
        return v;
    }
    long double to_long_double() const {
        long double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0L + limbs_[i];
        return sign_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> mag = limbs_;
        std::string out;
        while (!mag.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = mag.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | mag[i];
                mag[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!mag.empty() && mag.back() == 0) mag.pop_back();
            for (int d = 0; d < 9; ++d) {
                out.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (out.size() > 1 && out.back() == '0') out.pop_back();
        if (sign_ < 0) out.push_back('-');
        std::reverse(out.begin(), out.end());
        return out;
    }

    static BigInt from_string(std::string_view s) {
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw ValidationError("bigint: empty numeral");
        BigInt r;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ValidationError("bigint: bad digit in numeral");
            r = r * BigInt{10} + BigInt{s[i] - '0'};
        }
        if (neg) r.sign_ = -r.sign_;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c < 0 : c > 0;
    }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

   private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;  // little-endian, no trailing zero limbs

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }
    void shift_left_1() {
        std::uint32_t carry = 0;
        for (auto& l : limbs_) {
            std::uint32_t nc = l >> 31;
            l = (l << 1) | carry;
            carry = nc;
        }
        if (carry) limbs_.push_back(carry);
        if (!limbs_.empty()) sign_ = sign_ == 0 ? 1 : sign_;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            if (carry == 0 && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = cur < 0;
            if (cur < 0) cur += (std::int64_t{1} << 32);
            r[i] = static_cast<std::uint32_t>(cur);
            if (borrow == 0 && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace cubicount

#endif
