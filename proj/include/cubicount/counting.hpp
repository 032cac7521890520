#ifndef CUBICOUNT_COUNTING_HPP
#define CUBICOUNT_COUNTING_HPP

#include <vector>

#include "cubicount/curves.hpp"

namespace cubicount {

inline int mobius_mu(long d) {
    if (d < 1) throw ValidationError("Moebius function needs a positive argument");
    int mu = 1;
    for (long f = 2; f * f <= d; ++f) {
        if (d % f == 0) {
            d /= f;
            if (d % f == 0) return 0;
            mu = -mu;
        }
    }
    if (d > 1) mu = -mu;
    return mu;
}

// Largest power of 3 dividing n.
inline long n3(long n) {
    if (n < 1) throw ValidationError("n3 needs a positive argument");
    long r = 1;
    while (n % 3 == 0) {
        r *= 3;
        n /= 3;
    }
    return r;
}

inline std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (std::size_t i = large.size(); i-- > 0;) small.push_back(large[i]);
    return small;
}

// I(n, q) = (1/n) sum_{d|n} mu(d) q^{n/d}, the count of monic irreducibles of
// degree n over F_q, evaluated as a polynomial in q so that q may be any
// integer (0, 1, negative). Zero for n < 1 by convention.
inline BigInt I_func(long n, const BigInt& q) {
    if (n < 1) return BigInt{};
    BigInt sum;
    for (long d : divisors(n)) {
        int mu = mobius_mu(d);
        if (mu == 0) continue;
        BigInt term = BigInt::pow(q, static_cast<unsigned long long>(n / d));
        sum += mu == 1 ? term : -term;
    }
    return sum.divexact(BigInt{n});
}

// I(num/den, q) with the convention that a non-integer first argument gives 0.
inline BigInt I_func_frac(long num, long den, const BigInt& q) {
    if (den < 1) throw ValidationError("denominator must be positive");
    if (num % den != 0) return BigInt{};
    return I_func(num / den, q);
}

// Fiber census of one extension: A counts roots of h, and B, C, D count beta
// whose fiber g - beta*h has the indicated splitting pattern. N comes from the
// resolvent curve. ubar is the number of irreducible fibers; both closed forms
// for it are checked against the direct tally.
struct Breakdown {
    long n = 0;
    long long A = 0, B = 0, C = 0, D = 0;
    long long N = 0;
    long long ubar = 0;
};

inline Breakdown breakdown(const RatExpr& R, long n, std::uint64_t limit = kDefaultEnumLimit) {
    detail::require_normalized(R, "breakdown");
    const FieldPtr& F = R.field();
    Extension E = extend(F, n, limit);
    if (!E.field->order_fits_u64() || E.field->order_u64() > limit)
        throw LimitError("q^n exceeds the enumeration limit");
    const std::uint64_t Q = E.field->order_u64();

    Breakdown out;
    out.n = n;
    out.A = R.h.degree() >= 1 ? count_roots_in(R.h, E.field, E.emb) : 0;

    Poly ge = embed(R.g, E.emb), he = embed(R.h, E.emb);
    for (std::uint64_t i = 0; i < Q; ++i) {
        FieldElem beta = E.field->element(i);
        Poly fiber = ge - he * beta;
        switch (cubic_pattern(fiber)) {
            case CubicPattern::DoublePlusSimple: ++out.B; break;
            case CubicPattern::TripleRoot: ++out.C; break;
            case CubicPattern::QuadraticTimesLinear: ++out.D; break;
            case CubicPattern::IrreducibleCubic: ++out.ubar; break;
            case CubicPattern::ThreeDistinctRoots: break;
        }
    }
    out.N = count_points(R, n, CurveKind::Resolvent, limit).N;

    const long long qn = static_cast<long long>(Q);
    long long lhs1 = 2 * qn + out.A - out.B - 2 * out.C - 2 * out.D;
    long long lhs2 = out.N + out.A - out.C;
    if (lhs1 % 3 != 0 || lhs1 / 3 != out.ubar)
        throw InternalError("fiber census does not match (2q^n+A-B-2C-2D)/3");
    if (lhs2 % 3 != 0 || lhs2 / 3 != out.ubar)
        throw InternalError("fiber census does not match (N+A-C)/3");
    if (out.N != 2 * qn - out.B - out.C - 2 * out.D)
        throw InternalError("resolvent point count does not match the fiber census");
    return out;
}

enum class CountMethod { Brute, Capelli, Inversion, Formula, Bound };

inline const char* to_string(CountMethod m) {
    switch (m) {
        case CountMethod::Brute: return "brute";
        case CountMethod::Capelli: return "capelli";
        case CountMethod::Inversion: return "inversion";
        case CountMethod::Formula: return "formula";
        case CountMethod::Bound: return "bound";
    }
    return "?";
}

struct CountResult {
    long long value = 0;
    CountMethod method = CountMethod::Brute;
    std::vector<Breakdown> detail;  // per-divisor breakdowns for the inversion path
};

// Definition-level count: enumerate monic irreducibles f of degree n over F_q
// and test irreducibility of the transform directly.
inline CountResult count_brute(const RatExpr& R, long n, std::uint64_t limit = kDefaultEnumLimit) {
    if (n <= 1) throw ValidationError("transform counting requires degree n > 1");
    CountResult out;
    out.method = CountMethod::Brute;
    for_each_monic_irreducible(R.field(), n, limit, [&](const Poly& f) {
        if (is_irreducible(transform(f, R))) ++out.value;
    });
    return out;
}

namespace detail {

inline bool cubic_has_no_root(const Poly& f) { return distinct_roots_in_field(f) == 0; }

}  // namespace detail

// Count beta in F_{q^n} of exact degree n whose fiber g - beta*h is
// irreducible over F_{q^n}; the count is n times the answer.
inline CountResult count_capelli(const RatExpr& R, long n,
                                 std::uint64_t limit = kDefaultEnumLimit) {
    if (n <= 1) throw ValidationError("transform counting requires degree n > 1");
    if (R.r != 3) throw ValidationError("this counting path requires a cubic expression");
    RatExpr norm = normalize_cubic(R).expr;
    const FieldPtr& F = norm.field();
    Extension E = extend(F, n, limit);
    if (!E.field->order_fits_u64() || E.field->order_u64() > limit)
        throw LimitError("q^n exceeds the enumeration limit");
    const std::uint64_t Q = E.field->order_u64();

    std::vector<BigInt> subfield_powers;  // q^{n/l} for prime l | n
    for (long l : fpdetail::prime_factors(n))
        subfield_powers.push_back(BigInt::pow(F->order(), static_cast<unsigned long long>(n / l)));

    Poly ge = embed(norm.g, E.emb), he = embed(norm.h, E.emb);
    long long hits = 0;
    for (std::uint64_t i = 0; i < Q; ++i) {
        FieldElem beta = E.field->element(i);
        bool exact_degree = true;
        for (const BigInt& pw : subfield_powers) {
            if (beta.pow(pw) == beta) {
                exact_degree = false;
                break;
            }
        }
        if (!exact_degree) continue;
        if (detail::cubic_has_no_root(ge - he * beta)) ++hits;
    }
    if (hits % n != 0) throw InternalError("degree-n fiber count not divisible by n");
    CountResult out;
    out.method = CountMethod::Capelli;
    out.value = hits / n;
    return out;
}

// Moebius inversion over the irreducible-fiber counts of the subextensions:
// (1/n) sum over d | n with 3 not dividing d of mu(d) * ubar(n/d).
inline CountResult count_inversion(const RatExpr& R, long n,
                                   std::uint64_t limit = kDefaultEnumLimit) {
    if (n <= 1) throw ValidationError("transform counting requires degree n > 1");
    if (R.r != 3) throw ValidationError("this counting path requires a cubic expression");
    RatExpr norm = normalize_cubic(R).expr;
    CountResult out;
    out.method = CountMethod::Inversion;
    long long sum = 0;
    for (long d : divisors(n)) {
        if (d % 3 == 0) continue;
        int mu = mobius_mu(d);
        if (mu == 0) continue;
        Breakdown bd = breakdown(norm, n / d, limit);
        sum += mu * bd.ubar;
        out.detail.push_back(bd);
    }
    if (sum < 0 || sum % n != 0) throw InternalError("inverted fiber sum not divisible by n");
    out.value = sum / n;
    return out;
}

}  // namespace cubicount

#endif
