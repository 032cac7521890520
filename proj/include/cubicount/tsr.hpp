#ifndef CUBICOUNT_TSR_HPP
#define CUBICOUNT_TSR_HPP

#include "cubicount/formulas.hpp"

namespace cubicount {

// |GL_m(F_q)| = prod_{i=0}^{m-1} (q^m - q^i).
inline BigInt gl_order(long m, const BigInt& q) {
    if (m < 1) throw ValidationError("matrix size must be at least 1");
    BigInt qm = BigInt::pow(q, static_cast<unsigned long long>(m));
    BigInt out{1};
    for (long i = 0; i < m; ++i) out *= qm - BigInt::pow(q, static_cast<unsigned long long>(i));
    return out;
}

// Reflect h (deg h < 3, h(0) = 1) through x -> 1/x on both sides of x^3/h:
// the result x^3 * h(1/x) is monic of degree 3 with zero constant term, and
// counting transforms of x^3/h equals counting transforms of this polynomial.
inline Poly tsr_normalize(const Poly& h) {
    if (h.degree() >= 3) throw ValidationError("register polynomial must have degree < 3");
    if (!(h.coeff(0) == h.field()->one()))
        throw ValidationError("register polynomial must have constant term 1");
    const FieldPtr& F = h.field();
    return Poly::monomial(F, 3, F->one()) + Poly::monomial(F, 2, h.coeff(1)) +
           Poly::monomial(F, 1, h.coeff(2));
}

enum class TsrMethod { Formula, Sum };

inline const char* to_string(TsrMethod m) { return m == TsrMethod::Formula ? "formula" : "sum"; }

struct TsrCount {
    long m = 0;
    BigInt q;
    BigInt value;
    TsrMethod method = TsrMethod::Formula;
};

// Direct evaluation of the register count: sum the transform counts of
// x^3 + a x^2 + b x over all (a, b), scaled by |GL_m| / (q^m - 1).
inline TsrCount tsr_count_sum(const FieldPtr& F, long m, std::uint64_t limit = kDefaultEnumLimit) {
    if (m <= 1) throw ValidationError("register length must exceed 1");
    if (!F->order_fits_u64()) throw LimitError("base field exceeds the enumeration limit");
    const std::uint64_t q = F->order_u64();
    BigInt total;
    for (std::uint64_t ai = 0; ai < q; ++ai) {
        for (std::uint64_t bi = 0; bi < q; ++bi) {
            Poly g = Poly::monomial(F, 3, F->one()) + Poly::monomial(F, 2, F->element(ai)) +
                     Poly::monomial(F, 1, F->element(bi));
            RatExpr R = ratexpr_new(std::move(g), Poly::constant(F, 1LL));
            total += BigInt{count_inversion(R, m, limit).value};
        }
    }
    BigInt qm_minus_1 = BigInt::pow(F->order(), static_cast<unsigned long long>(m)) - BigInt{1};
    TsrCount out;
    out.m = m;
    out.q = F->order();
    out.method = TsrMethod::Sum;
    out.value = (gl_order(m, F->order()) * total).divexact(qm_minus_1);
    return out;
}

// Closed form for the register count, with the index of summation running
// over divisors d of m with 3 not dividing d.
inline TsrCount tsr_count_formula(const FieldPtr& F, long m) {
    if (m <= 1) throw ValidationError("register length must exceed 1");
    const BigInt& q = F->order();
    BigInt sum;
    const bool char3 = F->characteristic() == 3;
    for (long d : divisors(m)) {
        if (d % 3 == 0) continue;
        int mu = mobius_mu(d);
        if (mu == 0) continue;
        long e = m / d;
        BigInt qe = BigInt::pow(q, static_cast<unsigned long long>(e));
        BigInt term;
        if (!char3) {
            long long eps_e = legendre3(q) == 1 ? 1 : (e % 2 == 0 ? 1 : -1);  // eps^{m/d}
            term = (q + BigInt{eps_e}) * (qe - BigInt{eps_e});
        } else {
            long long half = e % 2 == 0 ? 2 : 1;  // (3 + (-1)^e) / 2
            term = (q + BigInt{half}) * qe;
        }
        sum += mu == 1 ? term : -term;
    }
    BigInt qm_minus_1 = BigInt::pow(q, static_cast<unsigned long long>(m)) - BigInt{1};
    BigInt prefactor_num = char3 ? (q - BigInt{1}) * gl_order(m, q) : q * gl_order(m, q);
    BigInt value = (prefactor_num * sum).divexact(BigInt{3 * m} * qm_minus_1);

    if (!char3 && legendre3(q) == 1) {
        // the compact variant available when q = 1 (mod 3) must agree
        long m3 = n3(m);
        BigInt qm3 = BigInt::pow(q, static_cast<unsigned long long>(m3));
        BigInt inner = I_func_frac(m, m3, qm3) - I_func_frac(m, m3, BigInt{1});
        BigInt alt = (gl_order(m, q) * q * (q + BigInt{1}) * inner)
                         .divexact(qm_minus_1 * BigInt{3 * m3});
        if (alt != value) throw InternalError("compact register formula disagrees");
    }

    TsrCount out;
    out.m = m;
    out.q = q;
    out.method = TsrMethod::Formula;
    out.value = value;
    return out;
}

}  // namespace cubicount

#endif
