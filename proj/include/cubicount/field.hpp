#ifndef CUBICOUNT_FIELD_HPP
#define CUBICOUNT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cubicount/bigint.hpp"
#include "cubicount/common.hpp"

namespace cubicount {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace fpdetail {

// Dense polynomials over the prime field F_p, coefficients ascending.
// Used to bootstrap field construction before the generic Poly type exists.
using Fp = std::vector<long long>;

inline long long mod_mul(long long a, long long b, long long p) {
    return static_cast<long long>(static_cast<__int128>(a) * b % p);
}

inline long long mod_pow(long long a, long long e, long long p) {
    long long r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline long long mod_inv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw ValidationError("inverse of a non-unit mod p");
    return t < 0 ? t + p : t;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long s : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % s == 0) return n == s;
    }
    // deterministic Miller-Rabin for 64-bit range
    long long d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        long long x = mod_pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < r; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline void trim(Fp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long deg(const Fp& f) { return static_cast<long>(f.size()) - 1; }

inline Fp add(const Fp& a, const Fp& b, long long p) {
    Fp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % p;
    }
    trim(r);
    return r;
}

inline Fp sub(const Fp& a, const Fp& b, long long p) {
    Fp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        long long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((v % p) + p) % p;
    }
    trim(r);
    return r;
}

inline Fp mul(const Fp& a, const Fp& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mod_mul(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

inline void divrem(const Fp& a, const Fp& b, Fp& quo, Fp& rem, long long p) {
    if (b.empty()) throw ValidationError("division by zero polynomial");
    rem = a;
    quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    long long leadinv = mod_inv(b.back(), p);
    while (deg(rem) >= deg(b)) {
        long shift = deg(rem) - deg(b);
        long long c = mod_mul(rem.back(), leadinv, p);
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            long long v = rem[shift + i] - mod_mul(c, b[i], p);
            rem[shift + i] = ((v % p) + p) % p;
        }
        trim(rem);
    }
    trim(quo);
}

inline Fp rem(const Fp& a, const Fp& b, long long p) {
    Fp q, r;
    divrem(a, b, q, r, p);
    return r;
}

inline Fp gcd(Fp a, Fp b, long long p) {
    while (!b.empty()) {
        Fp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        long long inv = mod_inv(a.back(), p);
        for (auto& c : a) c = mod_mul(c, inv, p);
    }
    return a;
}

inline Fp powmod(Fp base, const BigInt& e, const Fp& mod, long long p) {
    Fp r{1};
    base = rem(base, mod, p);
    std::size_t bits = e.bit_length();
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r, p), mod, p);
        if (e.bit(i)) r = rem(mul(r, base, p), mod, p);
    }
    return r;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; static_cast<long long>(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline bool is_irreducible(const Fp& f, long long p) {
    long n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    const Fp x{0, 1};
    // x^{p^n} == x mod f, and x^{p^{n/l}} - x coprime to f for prime l | n
    Fp xp = powmod(x, BigInt::pow(BigInt{p}, static_cast<unsigned long long>(n)), f, p);
    if (xp != rem(x, f, p)) return false;
    for (long l : prime_factors(n)) {
        Fp t = powmod(x, BigInt::pow(BigInt{p}, static_cast<unsigned long long>(n / l)), f, p);
        Fp g = gcd(sub(t, x, p), f, p);
        if (deg(g) != 0) return false;
    }
    return true;
}

// First monic irreducible of the given degree, ordering the non-leading
// coefficient vector as a base-p integer with the constant term least significant.
inline Fp first_irreducible(long long p, int degree) {
    Fp f(degree + 1, 0);
    f[degree] = 1;
    for (std::uint64_t idx = 0;; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < degree; ++i) {
            f[i] = static_cast<long long>(t % static_cast<std::uint64_t>(p));
            t /= static_cast<std::uint64_t>(p);
        }
        if (t != 0) throw InternalError("no irreducible found in scan range");
        if (is_irreducible(f, p)) return f;
    }
}

}  // namespace fpdetail

class FieldElem;

// A finite field F_{p^k} presented as F_p[t]/(modulus). Immutable once built;
// share it via FieldPtr. Two Fields with equal (p, k, modulus) are interchangeable.
class Field : public std::enable_shared_from_this<Field> {
   public:
    static FieldPtr make(long long p, int k) {
        if (!fpdetail::is_prime(p)) throw ValidationError("field characteristic must be prime");
        if (k < 1) throw ValidationError("field extension degree must be at least 1");
        auto f = std::shared_ptr<Field>(new Field());
        f->p_ = p;
        f->k_ = k;
        f->q_ = BigInt::pow(BigInt{p}, static_cast<unsigned long long>(k));
        if (k > 1) f->modulus_ = fpdetail::first_irreducible(p, k);
        return f;
    }

    long long characteristic() const { return p_; }
    int degree() const { return k_; }
    const BigInt& order() const { return q_; }
    bool order_fits_u64() const { return q_.fits_uint64(); }
    std::uint64_t order_u64() const { return q_.to_uint64(); }
    // Empty for prime fields; otherwise monic of degree k, coefficients ascending.
    const fpdetail::Fp& modulus() const { return modulus_; }

    bool same_as(const Field& o) const {
        return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
    }

    inline FieldElem zero() const;
    inline FieldElem one() const;
    inline FieldElem from_int(long long v) const;  // ring map Z -> F
    inline FieldElem generator() const;            // the class of t (k > 1)
    inline FieldElem element(std::uint64_t index) const;  // base-p digits of index
    inline std::uint64_t index_of(const FieldElem& e) const;

   private:
    Field() = default;
    long long p_ = 0;
    int k_ = 0;
    BigInt q_;
    fpdetail::Fp modulus_;
};

class FieldElem {
   public:
    FieldElem() = default;

    const FieldPtr& field() const { return fld_; }
    const std::vector<long long>& coeffs() const { return c_; }
    bool valid() const { return static_cast<bool>(fld_); }
    bool is_zero() const {
        for (long long v : c_)
            if (v) return false;
        return true;
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check_pair(a, b);
        FieldElem r = a;
        long long p = a.fld_->characteristic();
        for (int i = 0; i < a.fld_->degree(); ++i) r.c_[i] = (r.c_[i] + b.c_[i]) % p;
        return r;
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check_pair(a, b);
        FieldElem r = a;
        long long p = a.fld_->characteristic();
        for (int i = 0; i < a.fld_->degree(); ++i) r.c_[i] = ((r.c_[i] - b.c_[i]) % p + p) % p;
        return r;
    }
    FieldElem operator-() const {
        require_valid();
        FieldElem r = *this;
        long long p = fld_->characteristic();
        for (auto& v : r.c_) v = (p - v) % p;
        return r;
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check_pair(a, b);
        const long long p = a.fld_->characteristic();
        const int k = a.fld_->degree();
        if (k == 1) {
            FieldElem r = a;
            r.c_[0] = fpdetail::mod_mul(a.c_[0], b.c_[0], p);
            return r;
        }
        std::vector<long long> prod(2 * k - 1, 0);
        for (int i = 0; i < k; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < k; ++j)
                prod[i + j] = (prod[i + j] + fpdetail::mod_mul(a.c_[i], b.c_[j], p)) % p;
        }
        const auto& m = a.fld_->modulus();
        for (int i = 2 * k - 2; i >= k; --i) {
            long long c = prod[i];
            if (c == 0) continue;
            for (int j = 0; j < k; ++j) {
                long long v = prod[i - k + j] - fpdetail::mod_mul(c, m[j], p);
                prod[i - k + j] = ((v % p) + p) % p;
            }
            prod[i] = 0;
        }
        FieldElem r = a;
        for (int i = 0; i < k; ++i) r.c_[i] = prod[i];
        return r;
    }

    FieldElem inv() const {
        require_valid();
        if (is_zero()) throw ValidationError("inverse of zero field element");
        const long long p = fld_->characteristic();
        if (fld_->degree() == 1) {
            FieldElem r = *this;
            r.c_[0] = fpdetail::mod_inv(c_[0], p);
            return r;
        }
        // extended Euclid in F_p[t] against the modulus: s0 * this == r0 (mod m)
        fpdetail::Fp r0 = c_;
        fpdetail::trim(r0);
        fpdetail::Fp r1 = fld_->modulus();
        fpdetail::Fp s0{1}, s1{};
        while (!r1.empty()) {
            fpdetail::Fp q, rr;
            fpdetail::divrem(r0, r1, q, rr, p);
            fpdetail::Fp ns = fpdetail::sub(s0, fpdetail::mul(q, s1, p), p);
            r0 = std::move(r1);
            r1 = std::move(rr);
            s0 = std::move(s1);
            s1 = std::move(ns);
        }
        if (fpdetail::deg(r0) != 0) throw InternalError("modulus not irreducible");
        long long s = fpdetail::mod_inv(r0[0], p);
        FieldElem r = fld_->zero();
        for (std::size_t i = 0; i < s0.size() && i < r.c_.size(); ++i)
            r.c_[i] = fpdetail::mod_mul(s0[i], s, p);
        return r;
    }

    FieldElem pow(const BigInt& e) const {
        require_valid();
        if (e.sign() < 0) throw ValidationError("negative exponent");
        FieldElem r = fld_->one();
        if (e.is_zero()) return r;
        FieldElem base = *this;
        for (std::size_t i = e.bit_length(); i-- > 0;) {
            r = r * r;
            if (e.bit(i)) r = r * base;
        }
        return r;
    }
    FieldElem pow(long long e) const { return pow(BigInt{e}); }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        check_pair(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

   private:
    friend class Field;
    FieldElem(FieldPtr f, std::vector<long long> c) : fld_(std::move(f)), c_(std::move(c)) {}

    void require_valid() const {
        if (!fld_) throw ValidationError("uninitialized field element");
    }
    static void check_pair(const FieldElem& a, const FieldElem& b) {
        a.require_valid();
        b.require_valid();
        if (!a.fld_->same_as(*b.fld_))
            throw ValidationError("field elements have different owners");
    }

    FieldPtr fld_;
    std::vector<long long> c_;
};

inline FieldElem Field::zero() const {
    return FieldElem(shared_from_this(), std::vector<long long>(k_, 0));
}
inline FieldElem Field::one() const {
    std::vector<long long> c(k_, 0);
    c[0] = 1 % p_;
    return FieldElem(shared_from_this(), std::move(c));
}
inline FieldElem Field::from_int(long long v) const {
    std::vector<long long> c(k_, 0);
    c[0] = ((v % p_) + p_) % p_;
    return FieldElem(shared_from_this(), std::move(c));
}
inline FieldElem Field::generator() const {
    if (k_ < 2) throw ValidationError("prime field has no polynomial generator");
    std::vector<long long> c(k_, 0);
    c[1] = 1;
    return FieldElem(shared_from_this(), std::move(c));
}
inline FieldElem Field::element(std::uint64_t index) const {
    std::vector<long long> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<long long>(index % static_cast<std::uint64_t>(p_));
        index /= static_cast<std::uint64_t>(p_);
    }
    if (index != 0) throw ValidationError("element index out of range");
    return FieldElem(shared_from_this(), std::move(c));
}
inline std::uint64_t Field::index_of(const FieldElem& e) const {
    if (!e.field()->same_as(*this)) throw ValidationError("element of a different field");
    std::uint64_t idx = 0;
    for (int i = k_; i-- > 0;)
        idx = idx * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(e.coeffs()[i]);
    return idx;
}

// Sum of Frobenius conjugates e + e^p + ... + e^{p^{k-1}}, landing in F_p.
inline long long absolute_trace(const FieldElem& e) {
    const FieldPtr& F = e.field();
    FieldElem acc = e, total = e;
    for (int i = 1; i < F->degree(); ++i) {
        acc = acc.pow(F->characteristic());
        total = total + acc;
    }
    for (std::size_t i = 1; i < total.coeffs().size(); ++i)
        if (total.coeffs()[i] != 0) throw InternalError("trace did not land in the prime field");
    return total.coeffs()[0];
}

// e^{(q-1)/2} read in {+1, 0, -1}. Odd characteristic only.
inline int quadratic_character(const FieldElem& e) {
    const FieldPtr& F = e.field();
    if (F->characteristic() == 2)
        throw ValidationError("quadratic character undefined in characteristic 2");
    if (e.is_zero()) return 0;
    BigInt half = (F->order() - BigInt{1}).divexact(BigInt{2});
    FieldElem t = e.pow(half);
    if (t == F->one()) return 1;
    if (t == -F->one()) return -1;
    throw InternalError("power map left {+1,-1}");
}

// The Legendre symbol (q/3): +1 or -1 as q = +-1 (mod 3).
inline int legendre3(const BigInt& q) {
    long long r = q.mod_small(3);
    if (r == 0) throw ValidationError("legendre3 requires q coprime to 3");
    return r == 1 ? 1 : -1;
}

inline FieldElem find_nonsquare(const FieldPtr& F) {
    if (F->characteristic() == 2) throw ValidationError("no nonsquares in characteristic 2");
    if (!F->order_fits_u64()) throw LimitError("field too large to scan");
    for (std::uint64_t i = 1; i < F->order_u64(); ++i) {
        FieldElem e = F->element(i);
        if (quadratic_character(e) == -1) return e;
    }
    throw InternalError("odd field without nonsquares");
}

inline FieldElem find_trace_one(const FieldPtr& F) {
    if (!F->order_fits_u64()) throw LimitError("field too large to scan");
    for (std::uint64_t i = 0; i < F->order_u64(); ++i) {
        FieldElem e = F->element(i);
        if (absolute_trace(e) == 1) return e;
    }
    throw InternalError("trace map not surjective");
}

inline FieldElem find_noncube(const FieldPtr& F) {
    if ((F->order() - BigInt{1}).mod_small(3) != 0)
        throw ValidationError("every element is a cube when 3 does not divide q-1");
    if (!F->order_fits_u64()) throw LimitError("field too large to scan");
    BigInt third = (F->order() - BigInt{1}).divexact(BigInt{3});
    for (std::uint64_t i = 1; i < F->order_u64(); ++i) {
        FieldElem e = F->element(i);
        if (!(e.pow(third) == F->one())) return e;
    }
    throw InternalError("no non-cube found despite 3 | q-1");
}

// Realizes F_{p^k} inside F_{p^{k n}} by sending the generator of the source
// to a root of the source modulus in the target.
class Embedding {
   public:
    Embedding(FieldPtr src, FieldPtr dst, FieldElem gen_image)
        : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(gen_image)) {}

    const FieldPtr& source() const { return src_; }
    const FieldPtr& target() const { return dst_; }
    const FieldElem& generator_image() const { return img_; }

    FieldElem apply(const FieldElem& e) const {
        if (!e.field()->same_as(*src_)) throw ValidationError("element not in embedding source");
        // Horner in the generator image; source coefficients are prime-field scalars.
        FieldElem acc = dst_->zero();
        for (std::size_t i = e.coeffs().size(); i-- > 0;)
            acc = acc * img_ + dst_->from_int(e.coeffs()[i]);
        return acc;
    }

   private:
    FieldPtr src_, dst_;
    FieldElem img_;
};

struct Extension {
    FieldPtr field;
    Embedding emb;
};

// Degree-n extension of base, built over the prime field with the deterministic
// modulus rule of Field::make. The embedding picks the first root of the base
// modulus in element enumeration order.
inline Extension extend(const FieldPtr& base, long n, std::uint64_t limit = kDefaultEnumLimit) {
    if (n < 1) throw ValidationError("extension degree must be at least 1");
    const int k = base->degree();
    const long long p = base->characteristic();
    if (n == 1) {
        FieldElem img = k > 1 ? base->generator() : base->one();
        return {base, Embedding(base, base, img)};
    }
    if (static_cast<long long>(k) * n > 62) throw LimitError("extension degree out of range");
    FieldPtr ext = Field::make(p, static_cast<int>(k * n));
    if (k == 1) return {ext, Embedding(base, ext, ext->one())};
    if (!ext->order_fits_u64() || ext->order_u64() > limit)
        throw LimitError("extension exceeds the enumeration limit");
    const auto& m = base->modulus();
    for (std::uint64_t i = 0; i < ext->order_u64(); ++i) {
        FieldElem e = ext->element(i);
        FieldElem acc = ext->zero();
        for (std::size_t j = m.size(); j-- > 0;) acc = acc * e + ext->from_int(m[j]);
        if (acc.is_zero()) return {ext, Embedding(base, ext, e)};
    }
    throw InternalError("base modulus has no root in its own extension");
}

}  // namespace cubicount

#endif
