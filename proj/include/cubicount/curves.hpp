#ifndef CUBICOUNT_CURVES_HPP
#define CUBICOUNT_CURVES_HPP

#include <cmath>
#include <utility>

#include "cubicount/ratexpr.hpp"

namespace cubicount {

enum class CurveKind { Resolvent, Discriminant };

inline const char* to_string(CurveKind k) {
    return k == CurveKind::Resolvent ? "resolvent" : "discriminant";
}

struct CurveCount {
    long n = 0;         // extension degree
    long long N = 0;    // affine solutions over F_{q^n}
    CurveKind which = CurveKind::Resolvent;
    long delta_degree = -1;
};

namespace detail {

inline void require_normalized(const RatExpr& R, const char* who) {
    if (R.r != 3 || R.g.degree() != 3 || !R.g.is_monic() || R.h.degree() >= 3)
        throw ValidationError(std::string(who) + " requires deg h < 3 and monic cubic g");
}

// Coefficients of the monic cubic g - beta*h in x, each linear in beta.
inline void fiber_coefficients(const RatExpr& R, Poly& a, Poly& b, Poly& c) {
    const FieldPtr& F = R.field();
    auto lin = [&](long i) {
        return Poly::from_coeffs(F, {R.g.coeff(i), -R.h.coeff(i)});
    };
    a = lin(2);
    b = lin(1);
    c = lin(0);
}

}  // namespace detail

// Delta(beta) = Disc_x(g - beta*h), a polynomial of degree at most 4 in beta;
// degree at most 3 exactly when infinity is a ramification point.
inline Poly delta_poly(const RatExpr& R) {
    detail::require_normalized(R, "delta_poly");
    Poly a, b, c;
    detail::fiber_coefficients(R, a, b, c);
    return cubic_discriminant(a, b, c);
}

// (s(beta), t(beta)) with x^2 + s(beta) x + t(beta) the quadratic resolvent
// of g - beta*h.
inline std::pair<Poly, Poly> resolvent_pair(const RatExpr& R) {
    detail::require_normalized(R, "resolvent_pair");
    Poly a, b, c;
    detail::fiber_coefficients(R, a, b, c);
    return quadratic_resolvent(a, b, c);
}

namespace detail {

// Number of roots of x^2 + s x + t in the given field: 0, 1 or 2.
inline int quadratic_root_count(const FieldElem& s, const FieldElem& t, const FieldPtr& F) {
    if (F->characteristic() == 2) {
        if (s.is_zero()) return 1;  // x^2 = t has the single root t^{q/2}
        return absolute_trace(t * (s * s).inv()) == 0 ? 2 : 0;
    }
    FieldElem disc = s * s - mul_int(t, 4);
    return 1 + quadratic_character(disc);
}

}  // namespace detail

// Count affine points over F_{q^n} by full enumeration of beta: fibers of the
// resolvent curve x^2 + s(beta) x + t(beta) = 0, or of y^2 = Delta(beta) in
// odd characteristic.
inline CurveCount count_points(const RatExpr& R, long n, CurveKind which,
                               std::uint64_t limit = kDefaultEnumLimit) {
    detail::require_normalized(R, "count_points");
    const FieldPtr& F = R.field();
    if (which == CurveKind::Discriminant && F->characteristic() == 2)
        throw ValidationError("discriminant curve undefined in characteristic 2");
    Extension E = extend(F, n, limit);
    if (!E.field->order_fits_u64() || E.field->order_u64() > limit)
        throw LimitError("q^n exceeds the enumeration limit");
    const std::uint64_t Q = E.field->order_u64();

    CurveCount out;
    out.n = n;
    out.which = which;
    out.delta_degree = delta_poly(R).degree();

    if (which == CurveKind::Resolvent) {
        auto [s, t] = resolvent_pair(R);
        Poly se = embed(s, E.emb), te = embed(t, E.emb);
        for (std::uint64_t i = 0; i < Q; ++i) {
            FieldElem beta = E.field->element(i);
            out.N += detail::quadratic_root_count(se.eval(beta), te.eval(beta), E.field);
        }
    } else {
        Poly de = embed(delta_poly(R), E.emb);
        for (std::uint64_t i = 0; i < Q; ++i) {
            FieldElem beta = E.field->element(i);
            out.N += 1 + quadratic_character(de.eval(beta));
        }
    }
    return out;
}

struct HasseWeilCheck {
    long n = 0;
    long long N = 0;
    int kappa = 0;  // 2 for a genus-one cubic model, 6 for the singular quartic
    long double bound = 0;
    bool pass = false;
};

namespace detail {

// Bound coefficient for the genus-one cases: 2 where the curve model is a
// non-singular cubic, 6 where it is a quartic with a singularity at infinity
// (arithmetic genus 3).
inline int genus_one_kappa(const Classification& cls, long delta_degree) {
    switch (cls.cls) {
        case CanonicalClass::FourRamification:
            return delta_degree == 3 ? 2 : 6;
        case CanonicalClass::C2_IV:
        case CanonicalClass::C2_V:
            return 2;
        case CanonicalClass::C2_VI:
            return 6;
        default:
            throw ValidationError("not a genus-one case");
    }
}

}  // namespace detail

// Verify |N - q^n| <= kappa * sqrt(q^n) on the resolvent curve of a genus-one
// case (four ramification points in odd characteristic, or the char-2 classes
// with no ramification index 3).
inline HasseWeilCheck hasse_weil_check(const RatExpr& R, long n,
                                       std::uint64_t limit = kDefaultEnumLimit,
                                       long long search_budget = kDefaultSearchBudget) {
    Normalized norm = normalize_cubic(R);
    Classification cls = classify(R, search_budget);
    long delta_degree = delta_poly(norm.expr).degree();
    HasseWeilCheck out;
    out.kappa = detail::genus_one_kappa(cls, delta_degree);
    out.n = n;
    out.N = count_points(norm.expr, n, CurveKind::Resolvent, limit).N;
    long double qn = BigInt::pow(R.field()->order(), static_cast<unsigned long long>(n)).to_long_double();
    out.bound = out.kappa * std::sqrt(qn);
    long double dev = std::fabs(static_cast<long double>(out.N) - qn);
    out.pass = dev <= out.bound;
    return out;
}

}  // namespace cubicount

#endif
