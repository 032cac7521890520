#ifndef CUBICOUNT_CORPUS_HPP
#define CUBICOUNT_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "cubicount/ratexpr.hpp"

namespace cubicount {

struct NamedForm {
    std::string label;
    RatExpr expr;
};

// Every canonical representative instantiable over F, in deterministic order.
// Parametric char-2 families contribute one form per admissible parameter.
inline std::vector<NamedForm> canonical_forms(const FieldPtr& F) {
    std::vector<NamedForm> out;
    const long long p = F->characteristic();
    if (p >= 5) {
        FieldElem sigma = find_nonsquare(F);
        out.push_back({"x3", canonical::x3(F)});
        out.push_back({"twisted-cube", canonical::twisted_cube(F, sigma)});
        out.push_back({"three-ram-square", canonical::x3_minus_3tau_x(F, F->one())});
        out.push_back({"three-ram-nonsquare", canonical::x3_minus_3tau_x(F, sigma)});
    } else if (p == 3) {
        FieldElem sigma = find_nonsquare(F);
        out.push_back({"x3+x2", canonical::x3_plus_x2(F)});
        out.push_back({"x3+x", ratexpr_new(parse_poly("x^3+x", F), Poly::constant(F, 1LL))});
        Poly g = Poly::monomial(F, 3, F->one()) + Poly::monomial(F, 1, sigma);
        out.push_back({"x3+sigma*x", ratexpr_new(std::move(g), Poly::constant(F, 1LL))});
    } else {
        if (!F->order_fits_u64()) throw LimitError("field too large to enumerate forms");
        const std::uint64_t q = F->order_u64();
        FieldElem sigma = find_trace_one(F);
        out.push_back({"x3", canonical::x3(F)});
        out.push_back({"char2-ii", canonical::char2_ii(F, sigma)});
        out.push_back({"x3+x2", canonical::x3_plus_x2(F)});
        out.push_back({"char2-iv(1)", canonical::char2_iv(F, F->one())});
        if (F->degree() % 2 == 0) {
            FieldElem theta = find_noncube(F);
            out.push_back({"char2-iv(theta)", canonical::char2_iv(F, theta)});
            out.push_back({"char2-iv(theta^2)", canonical::char2_iv(F, theta * theta)});
        }
        for (std::uint64_t i = 2; i < q; ++i)
            out.push_back({"char2-v(" + std::to_string(i) + ")",
                           canonical::char2_v(F, F->element(i))});
        for (std::uint64_t i = 2; i < q; ++i)
            out.push_back({"char2-vi(" + std::to_string(i) + ")",
                           canonical::char2_vi(F, F->element(i), sigma)});
    }
    return out;
}

// Seeded corpus generation. Raw engine output is reduced by modulo so corpora
// are identical across standard library implementations.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

inline Poly random_poly(const FieldPtr& F, long deg, std::mt19937_64& rng) {
    const std::uint64_t q = F->order_u64();
    std::vector<FieldElem> c;
    for (long i = 0; i < deg; ++i) c.push_back(F->element(rng_below(rng, q)));
    c.push_back(F->element(1 + rng_below(rng, q - 1)));  // nonzero leading coefficient
    return Poly::from_coeffs(F, std::move(c));
}

// Random coprime cubic expression: degree-3 numerator, denominator of degree
// drawn from 0..2, retried until coprime.
inline RatExpr random_cubic(const FieldPtr& F, std::mt19937_64& rng) {
    for (;;) {
        Poly g = random_poly(F, 3, rng);
        long dh = static_cast<long>(rng_below(rng, 3));
        Poly h = random_poly(F, dh, rng);
        if (gcd(g, h).degree() != 0) continue;
        return ratexpr_new(std::move(g), std::move(h));
    }
}

inline std::vector<RatExpr> random_cubics(const FieldPtr& F, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RatExpr> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_cubic(F, rng));
    return out;
}

// Separable cubics with four ramification points (odd characteristic).
inline std::vector<RatExpr> random_four_ram(const FieldPtr& F, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RatExpr> out;
    while (static_cast<int>(out.size()) < count) {
        RatExpr R = random_cubic(F, rng);
        RamificationData rd = ramification_data(R);
        if (!rd.inseparable && rd.total == 4) out.push_back(std::move(R));
    }
    return out;
}

inline Mobius random_mobius(const FieldPtr& F, std::mt19937_64& rng) {
    const std::uint64_t q = F->order_u64();
    for (;;) {
        Mobius m{F->element(rng_below(rng, q)), F->element(rng_below(rng, q)),
                 F->element(rng_below(rng, q)), F->element(rng_below(rng, q))};
        if (!m.det().is_zero()) return m;
    }
}

}  // namespace cubicount

#endif
