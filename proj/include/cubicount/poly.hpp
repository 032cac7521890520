#ifndef CUBICOUNT_POLY_HPP
#define CUBICOUNT_POLY_HPP

#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicount/field.hpp"

namespace cubicount {

// Dense univariate polynomial over a Field. Coefficients ascend by degree,
// trailing zeros stripped; the zero polynomial has an empty coefficient list.
class Poly {
   public:
    Poly() = default;
    explicit Poly(FieldPtr f) : fld_(std::move(f)) {}

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly constant(const FieldPtr& f, const FieldElem& c) {
        Poly r(f);
        if (!c.is_zero()) r.c_.push_back(c);
        return r;
    }
    static Poly constant(const FieldPtr& f, long long v) { return constant(f, f->from_int(v)); }
    static Poly x(const FieldPtr& f) { return monomial(f, 1, f->one()); }
    static Poly monomial(const FieldPtr& f, long d, const FieldElem& c) {
        Poly r(f);
        if (!c.is_zero()) {
            r.c_.assign(static_cast<std::size_t>(d) + 1, f->zero());
            r.c_.back() = c;
        }
        return r;
    }
    static Poly from_coeffs(FieldPtr f, std::vector<FieldElem> ascending) {
        Poly r(std::move(f));
        r.c_ = std::move(ascending);
        r.trim();
        return r;
    }

    const FieldPtr& field() const { return fld_; }
    bool valid() const { return static_cast<bool>(fld_); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem coeff(long i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return fld_->zero();
        return c_[static_cast<std::size_t>(i)];
    }
    const FieldElem& leading() const {
        if (c_.empty()) throw ValidationError("zero polynomial has no leading coefficient");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == fld_->one(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check_pair(a, b);
        Poly r(a.fld_);
        std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            FieldElem v = i < a.c_.size() ? a.c_[i] : a.fld_->zero();
            if (i < b.c_.size()) v = v + b.c_[i];
            r.c_.push_back(v);
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check_pair(a, b);
        Poly r(a.fld_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, a.fld_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const FieldElem& s) {
        Poly r = a;
        if (s.is_zero()) return Poly(a.fld_);
        for (auto& v : r.c_) v = v * s;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    static void divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
        check_pair(a, b);
        if (b.is_zero()) throw ValidationError("division by zero polynomial");
        quo = Poly(a.fld_);
        rem = a;
        if (a.degree() < b.degree()) return;
        FieldElem leadinv = b.leading().inv();
        quo.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, a.fld_->zero());
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            long shift = rem.degree() - b.degree();
            FieldElem c = rem.leading() * leadinv;
            quo.c_[static_cast<std::size_t>(shift)] = c;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rem.c_[static_cast<std::size_t>(shift) + i] =
                    rem.c_[static_cast<std::size_t>(shift) + i] - c * b.c_[i];
            rem.trim();
        }
        quo.trim();
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divrem(a, b, q, r);
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) {
        Poly q, r;
        divrem(a, b, q, r);
        return r;
    }

    FieldElem eval(const FieldElem& at) const {
        FieldElem acc = fld_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    Poly monicized() const {
        if (is_zero()) return *this;
        if (is_monic()) return *this;
        return *this * leading().inv();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        check_pair(a, b);
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

   private:
    static void check_pair(const Poly& a, const Poly& b) {
        if (!a.fld_ || !b.fld_) throw ValidationError("uninitialized polynomial");
        if (!a.fld_->same_as(*b.fld_)) throw ValidationError("polynomials have different owners");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr fld_;
    std::vector<FieldElem> c_;
};

inline Poly derivative(const Poly& f) {
    const FieldPtr& F = f.field();
    std::vector<FieldElem> c;
    for (long i = 1; i <= f.degree(); ++i) c.push_back(f.coeff(i) * F->from_int(i));
    return Poly::from_coeffs(F, std::move(c));
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monicized();
}

inline Poly powmod(const Poly& base, const BigInt& e, const Poly& mod) {
    if (mod.degree() < 1) throw ValidationError("modulus polynomial must have degree >= 1");
    if (e.sign() < 0) throw ValidationError("negative exponent");
    const FieldPtr& F = base.field();
    Poly r = Poly::constant(F, 1LL) % mod;
    Poly b = base % mod;
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        r = (r * r) % mod;
        if (e.bit(i)) r = (r * b) % mod;
    }
    return r;
}

// Number of distinct roots of f in its own field: deg gcd(x^q - x mod f, f).
inline long distinct_roots_in_field(const Poly& f) {
    if (f.is_zero()) throw ValidationError("root count of the zero polynomial");
    if (f.degree() < 1) return 0;
    const FieldPtr& F = f.field();
    Poly xq = powmod(Poly::x(F), F->order(), f);
    Poly g = gcd(xq - (Poly::x(F) % f), f);
    if (g.is_zero()) return f.degree();  // f divides x^q - x: squarefree and fully split
    return g.degree();
}

// Standard criterion: x^{q^n} = x (mod f) and gcd(x^{q^{n/l}} - x, f) = 1
// for each prime l dividing n.
inline bool is_irreducible(const Poly& f) {
    long n = f.degree();
    if (n < 1) throw ValidationError("irreducibility undefined for constants");
    if (n == 1) return true;
    const FieldPtr& F = f.field();
    const Poly x = Poly::x(F);
    Poly xq = powmod(x, BigInt::pow(F->order(), static_cast<unsigned long long>(n)), f);
    if (!(xq == x % f)) return false;
    for (long l : fpdetail::prime_factors(n)) {
        Poly t = powmod(x, BigInt::pow(F->order(), static_cast<unsigned long long>(n / l)), f);
        if (gcd(t - (x % f), f).degree() != 0) return false;
    }
    return true;
}

inline Poly embed(const Poly& f, const Embedding& emb) {
    std::vector<FieldElem> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(emb.apply(v));
    return Poly::from_coeffs(emb.target(), std::move(c));
}

// Distinct roots of f, viewed in the extension field reached by emb.
inline long count_roots_in(const Poly& f, const FieldPtr& ext, const Embedding& emb) {
    if (!ext->same_as(*emb.target())) throw ValidationError("extension does not match embedding");
    Poly fe = embed(f, emb);
    if (fe.is_zero()) throw ValidationError("root count of the zero polynomial");
    if (fe.degree() < 1) return 0;
    return distinct_roots_in_field(fe);
}

enum class CubicPattern {
    ThreeDistinctRoots,
    DoublePlusSimple,
    TripleRoot,
    QuadraticTimesLinear,
    IrreducibleCubic,
};

inline const char* to_string(CubicPattern p) {
    switch (p) {
        case CubicPattern::ThreeDistinctRoots: return "three-distinct-roots";
        case CubicPattern::DoublePlusSimple: return "double-plus-simple";
        case CubicPattern::TripleRoot: return "triple-root";
        case CubicPattern::QuadraticTimesLinear: return "quadratic-times-linear";
        case CubicPattern::IrreducibleCubic: return "irreducible-cubic";
    }
    return "?";
}

namespace detail {

// Multiplicity of the root a in f.
inline int root_multiplicity(const Poly& f, const FieldElem& a) {
    const FieldPtr& F = f.field();
    Poly lin = Poly::x(F) - Poly::constant(F, a);
    Poly cur = f;
    int m = 0;
    while (!cur.is_zero() && cur.degree() >= 1) {
        Poly q, r;
        Poly::divrem(cur, lin, q, r);
        if (!r.is_zero()) break;
        ++m;
        cur = q;
    }
    return m;
}

}  // namespace detail

// Splitting pattern of a monic cubic over its own field. The five patterns
// partition all monic cubics; multiplicities are decided by gcd with the
// derivative, with the inseparable char-3 case (derivative identically zero)
// classified directly: cubing is a bijection of any F_{3^k}, so x^3 - e always
// has a triple root in the field.
inline CubicPattern cubic_pattern(const Poly& f) {
    if (f.degree() != 3) throw ValidationError("cubic pattern requires degree 3");
    if (!f.is_monic()) throw ValidationError("cubic pattern requires a monic polynomial");
    const FieldPtr& F = f.field();
    Poly d = derivative(f);
    if (d.is_zero()) return CubicPattern::TripleRoot;
    Poly g1 = gcd(f, d);
    if (g1.degree() == 0) {
        long r = distinct_roots_in_field(f);
        switch (r) {
            case 3: return CubicPattern::ThreeDistinctRoots;
            case 1: return CubicPattern::QuadraticTimesLinear;
            case 0: return CubicPattern::IrreducibleCubic;
            default: throw InternalError("separable cubic with two rational roots");
        }
    }
    if (g1.degree() == 1) return CubicPattern::DoublePlusSimple;
    if (g1.degree() == 2) {
        // g1 must be (x - a)^2; recover a and count its multiplicity in f.
        FieldElem u = g1.coeff(1), v = g1.coeff(0);
        FieldElem a = F->zero();
        if (F->characteristic() == 2) {
            if (!u.is_zero()) throw InternalError("repeated-factor gcd is not a square");
            a = v.pow(F->order().divexact(BigInt{2}));  // square root via Frobenius
        } else {
            a = -(u * F->from_int(2).inv());
        }
        int m = detail::root_multiplicity(f, a);
        if (m == 3) return CubicPattern::TripleRoot;
        if (m == 2) return CubicPattern::DoublePlusSimple;
        throw InternalError("degenerate gcd without a repeated root");
    }
    throw InternalError("gcd(f, f') of unexpected degree");
}

inline FieldElem mul_int(const FieldElem& e, long long v) { return e * e.field()->from_int(v); }
inline Poly mul_int(const Poly& f, long long v) { return f * f.field()->from_int(v); }

// Discriminant of the monic cubic x^3 + a x^2 + b x + c over any commutative
// coefficient ring (field elements, or polynomials in a parameter).
template <class R>
R cubic_discriminant(const R& a, const R& b, const R& c) {
    R abc = a * b * c;
    return mul_int(abc, 18) - mul_int(a * a * a * c, 4) + a * a * b * b - mul_int(b * b * b, 4) -
           mul_int(c * c, 27);
}

// Quadratic resolvent x^2 + s x + t of the monic cubic x^3 + a x^2 + b x + c:
// s = ab - 3c, t = a^3 c + b^3 + 9 c^2 - 6 abc. Reducibility of the resolvent
// detects a Galois group inside A_3 in every characteristic.
template <class R>
std::pair<R, R> quadratic_resolvent(const R& a, const R& b, const R& c) {
    R s = a * b - mul_int(c, 3);
    R t = a * a * a * c + b * b * b + mul_int(c * c, 9) - mul_int(a * b * c, 6);
    return {s, t};
}

// Monic polynomials of degree n in deterministic order: the non-leading
// coefficient vector read as a base-q integer, constant term least significant.
inline void for_each_monic_irreducible(const FieldPtr& F, long n, std::uint64_t limit,
                                       const std::function<void(const Poly&)>& fn) {
    if (n < 1) throw ValidationError("degree must be at least 1");
    if (!F->order_fits_u64()) throw LimitError("field order exceeds the enumeration limit");
    const std::uint64_t q = F->order_u64();
    std::uint64_t total = 1;
    for (long i = 0; i < n; ++i) {
        if (total > limit / q) throw LimitError("q^n exceeds the enumeration limit");
        total *= q;
    }
    std::vector<FieldElem> coeffs(static_cast<std::size_t>(n) + 1, F->zero());
    coeffs.back() = F->one();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (long i = 0; i < n; ++i) {
            coeffs[static_cast<std::size_t>(i)] = F->element(t % q);
            t /= q;
        }
        Poly f = Poly::from_coeffs(F, coeffs);
        if (is_irreducible(f)) fn(f);
    }
}

inline std::vector<Poly> monic_irreducibles(const FieldPtr& F, long n,
                                            std::uint64_t limit = kDefaultEnumLimit) {
    std::vector<Poly> out;
    for_each_monic_irreducible(F, n, limit, [&](const Poly& f) { out.push_back(f); });
    return out;
}

// --- text format ------------------------------------------------------------
//
// Two shapes, never mixed:
//   expression: "x^3+2*x+1"  (caret powers, optional '*', coefficients as
//               decimal residues; for extension fields an integer literal is
//               the base-p digit encoding of the element)
//   list:       "1,0,2,1"    (coefficients in descending degree)

namespace detail {

inline FieldElem literal_to_elem(const FieldPtr& F, long long v, bool negate) {
    FieldElem e = F->zero();
    if (F->degree() == 1) {
        e = F->from_int(v);
    } else {
        if (v < 0) throw ValidationError("negative coefficient literal in an extension field");
        std::uint64_t idx = static_cast<std::uint64_t>(v);
        e = F->element(idx);  // throws if out of range
    }
    return negate ? -e : e;
}

}  // namespace detail

inline Poly parse_poly(std::string_view text, const FieldPtr& F) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ValidationError("empty polynomial text");

    if (s.find(',') != std::string::npos) {
        if (s.find('x') != std::string::npos || s.find('^') != std::string::npos)
            throw ValidationError("mixed polynomial formats");
        std::vector<FieldElem> desc;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find(',', pos);
            std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.empty()) throw ValidationError("empty coefficient in list");
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                throw ValidationError("bad coefficient literal: " + tok);
            }
            if (used != tok.size()) throw ValidationError("bad coefficient literal: " + tok);
            desc.push_back(detail::literal_to_elem(F, v < 0 ? -v : v, v < 0));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        std::vector<FieldElem> asc(desc.rbegin(), desc.rend());
        return Poly::from_coeffs(F, std::move(asc));
    }

    Poly out = Poly::zero(F);
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    while (i < s.size()) {
        long long coef_lit = 1;
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            try {
                coef_lit = std::stoll(s.substr(i, j - i));
            } catch (const std::exception&) {
                throw ValidationError("coefficient literal out of range");
            }
            has_coef = true;
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
        }
        long exp = 0;
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j == i) throw ValidationError("missing exponent after '^'");
                if (j - i > 4) throw ValidationError("exponent out of range");
                exp = std::stol(s.substr(i, j - i));
                if (exp > 4096) throw ValidationError("exponent out of range");
                i = j;
            }
        } else if (!has_coef) {
            throw ValidationError("unexpected character in polynomial text");
        }
        FieldElem c = detail::literal_to_elem(F, coef_lit, neg);
        out += Poly::monomial(F, exp, c);
        if (i == s.size()) break;
        if (s[i] == '+' || s[i] == '-') {
            neg = s[i] == '-';
            ++i;
            if (i == s.size()) throw ValidationError("dangling sign in polynomial text");
        } else {
            throw ValidationError("unexpected character in polynomial text");
        }
    }
    return out;
}

inline std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    const FieldPtr& F = f.field();
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        FieldElem c = f.coeff(i);
        if (c.is_zero()) continue;
        std::uint64_t idx = F->index_of(c);
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(idx);
        } else {
            if (idx != 1) out += std::to_string(idx) + "*";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace cubicount

#endif
