#ifndef CUBICOUNT_FORMULAS_HPP
#define CUBICOUNT_FORMULAS_HPP

#include <cmath>
#include <string>

#include "cubicount/counting.hpp"

namespace cubicount {

// Exact count of irreducible transforms under x^3. Unified over both residues
// of q mod 3 via the least k in {1, 2} with 3 | q^k - 1:
//   (2 / (3 k n_3)) * (I(n/(k n_3), q^{k n_3}) - I(n/(k n_3), 1)).
// Powers of 3 give 0: every transform is then a cube.
inline BigInt f_x3(long n, const BigInt& q) {
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    if (q.mod_small(3) == 0) return BigInt{};
    long k = legendre3(q) == 1 ? 1 : 2;
    long m = k * n3(n);
    BigInt qm = BigInt::pow(q, static_cast<unsigned long long>(m));
    BigInt num = (I_func_frac(n, m, qm) - I_func_frac(n, m, BigInt{1})) * BigInt{2};
    return num.divexact(BigInt{3 * m});
}

// Exact count for the twisted two-ramification class (and its char-2 twin).
inline BigInt f_two_ram(long n, const BigInt& q) {
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    int eps = legendre3(q);
    long m = n3(n);
    if (eps == 1) {
        BigInt q2m = BigInt::pow(q, static_cast<unsigned long long>(2 * m));
        BigInt num = I_func_frac(n, 2 * m, q2m) - I_func_frac(n, 2 * m, BigInt{1});
        return num.divexact(BigInt{3 * m});
    }
    BigInt qm = BigInt::pow(q, static_cast<unsigned long long>(m));
    BigInt num = (I_func_frac(n, m, qm) - I_func_frac(n, m, BigInt{-1})) * BigInt{2};
    return num.divexact(BigInt{3 * m});
}

// Exact count for the three-ramification classes (square and nonsquare alike),
// and for the char-2 class with ramification indices (3,2).
inline BigInt f_three_ram(long n, const BigInt& q) {
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    int eps = legendre3(q);
    long m = n3(n);
    BigInt qm = BigInt::pow(q, static_cast<unsigned long long>(m));
    BigInt num = I_func_frac(n, m, qm) - I_func_frac(n, m, BigInt{eps});
    return num.divexact(BigInt{3 * m});
}

// Characteristic three, ramification indices (3,2):  I(n/n_3, q^{n_3}) / (3 n_3).
inline BigInt f_char3_32(long n, const BigInt& q) {
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    if (q.mod_small(3) != 0) throw ValidationError("this formula requires a power of 3");
    long m = n3(n);
    BigInt qm = BigInt::pow(q, static_cast<unsigned long long>(m));
    return I_func_frac(n, m, qm).divexact(BigInt{3 * m});
}

// Characteristic three, single ramification point: the class equivalent to
// x^3 - x (square) or to x^3 - sigma x (nonsquare).
inline BigInt f_char3_lin(long n, const BigInt& q, bool square) {
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    if (q.mod_small(3) != 0) throw ValidationError("this formula requires a power of 3");
    long m = n3(n);
    if (square) {
        BigInt qm = BigInt::pow(q, static_cast<unsigned long long>(m));
        return (I_func_frac(n, m, qm) * BigInt{2}).divexact(BigInt{3 * m});
    }
    BigInt q2m = BigInt::pow(q, static_cast<unsigned long long>(2 * m));
    return I_func_frac(n, 2 * m, q2m).divexact(BigInt{3 * m});
}

struct Rational {
    BigInt num;
    BigInt den{1};

    long double to_long_double() const { return num.to_long_double() / den.to_long_double(); }
};

struct GenusOneBound {
    Rational center;
    long double radius = 0;
    int kappa = 0;
};

// Genus-one cases have no closed form; the envelope pairs the inversion
// formula's main term with per-divisor Hasse-Weil radii. The slack of 4 per
// divisor absorbs the A and C corrections (each at most 2).
inline GenusOneBound f_genus_one_bound(long n, const BigInt& q, int kappa) {
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    if (kappa != 2 && kappa != 6) throw ValidationError("bound coefficient must be 2 or 6");
    GenusOneBound out;
    out.kappa = kappa;
    BigInt num;
    long double radius = 0;
    for (long d : divisors(n)) {
        if (d % 3 == 0) continue;
        int mu = mobius_mu(d);
        if (mu == 0) continue;
        BigInt qnd = BigInt::pow(q, static_cast<unsigned long long>(n / d));
        num += mu == 1 ? qnd : -qnd;
        radius += kappa * std::sqrt(qnd.to_long_double()) + 4;
    }
    out.center = Rational{num, BigInt{3 * n}};
    out.radius = radius / (3.0L * static_cast<long double>(n));
    return out;
}

enum class FormulaKind { Exact, Bound, EmptyByPermutation };

inline const char* to_string(FormulaKind k) {
    switch (k) {
        case FormulaKind::Exact: return "exact";
        case FormulaKind::Bound: return "bound";
        case FormulaKind::EmptyByPermutation: return "empty-by-permutation";
    }
    return "?";
}

struct FormulaResult {
    FormulaKind kind = FormulaKind::Exact;
    BigInt value;             // exact kinds
    Rational center;          // bound kind
    long double radius = 0;   // bound kind
    int kappa = 0;            // bound kind
    std::string rule;         // which evaluator produced the result
    std::string reason;       // "permutation" / "inseparable" for the zero cases
    Classification cls{CanonicalClass::Cube, {}, std::nullopt, -1, std::nullopt};
};

// Classify R and evaluate the matching closed form (or bound). Exact zeros
// that come from R inducing a permutation of F_{q^n} are flagged as such.
inline FormulaResult dispatch(const RatExpr& R, long n,
                              long long search_budget = kDefaultSearchBudget) {
    if (R.r != 3) throw ValidationError("formula dispatch requires a cubic expression");
    if (n <= 1) throw ValidationError("formulas require degree n > 1");
    const BigInt& q = R.field()->order();
    FormulaResult out;
    out.cls = classify(R, search_budget);
    int eps = q.mod_small(3) == 0 ? 0 : legendre3(q);

    switch (out.cls.cls) {
        case CanonicalClass::Cube:
        case CanonicalClass::C2_I:
            out.value = f_x3(n, q);
            out.rule = "x3";
            if (eps == -1 && n % 2 == 1) {
                out.kind = FormulaKind::EmptyByPermutation;
                out.reason = "permutation";
            }
            break;
        case CanonicalClass::TwistedCube:
        case CanonicalClass::C2_II:
            out.value = f_two_ram(n, q);
            out.rule = "two-ram";
            if (eps == 1 && n % 2 == 1) {
                out.kind = FormulaKind::EmptyByPermutation;
                out.reason = "permutation";
            }
            break;
        case CanonicalClass::ThreeRamSquare:
        case CanonicalClass::ThreeRamNonsquare:
        case CanonicalClass::C2_III:
            out.value = f_three_ram(n, q);
            out.rule = "three-ram";
            break;
        case CanonicalClass::C3_32:
            out.value = f_char3_32(n, q);
            out.rule = "char3-32";
            break;
        case CanonicalClass::C3_LinSquare:
            out.value = f_char3_lin(n, q, true);
            out.rule = "char3-linear";
            break;
        case CanonicalClass::C3_LinNonsquare:
            out.value = f_char3_lin(n, q, false);
            out.rule = "char3-linear";
            if (n % 2 == 1) {
                out.kind = FormulaKind::EmptyByPermutation;
                out.reason = "permutation";
            }
            break;
        case CanonicalClass::C3_Inseparable:
            out.value = BigInt{};
            out.rule = "inseparable";
            out.reason = "inseparable";
            break;
        case CanonicalClass::FourRamification:
        case CanonicalClass::C2_IV:
        case CanonicalClass::C2_V:
        case CanonicalClass::C2_VI: {
            long dd = delta_poly(normalize_cubic(R).expr).degree();
            GenusOneBound b = f_genus_one_bound(n, q, detail::genus_one_kappa(out.cls, dd));
            out.kind = FormulaKind::Bound;
            out.center = b.center;
            out.radius = b.radius;
            out.kappa = b.kappa;
            out.rule = "genus-one-bound";
            break;
        }
    }
    if (out.kind == FormulaKind::EmptyByPermutation && !out.value.is_zero())
        throw InternalError("permutation case produced a nonzero count");
    return out;
}

}  // namespace cubicount

#endif
