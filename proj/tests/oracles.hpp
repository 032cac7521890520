#ifndef CUBICOUNT_TESTS_ORACLES_HPP
#define CUBICOUNT_TESTS_ORACLES_HPP

// Independent brute-force oracles used to freeze expected values. These stay
// on the dumbest possible path (trial division, exhaustive scans) and never
// call the library's irreducibility or pattern analysis.

#include <map>
#include <vector>

#include "cubicount/cubicount.hpp"

namespace oracles {

using namespace cubicount;

// All monic polynomials of the given degree, ascending base-q index order.
inline std::vector<Poly> all_monic(const FieldPtr& F, long n) {
    const std::uint64_t q = F->order_u64();
    std::uint64_t total = 1;
    for (long i = 0; i < n; ++i) total *= q;
    std::vector<Poly> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElem> c;
        std::uint64_t t = idx;
        for (long i = 0; i < n; ++i) {
            c.push_back(F->element(t % q));
            t /= q;
        }
        c.push_back(F->one());
        out.push_back(Poly::from_coeffs(F, std::move(c)));
    }
    return out;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1 .. deg/2.
inline bool trial_division_irreducible(const Poly& f) {
    long n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    for (long d = 1; d <= n / 2; ++d) {
        for (const Poly& g : all_monic(f.field(), d)) {
            Poly q, r;
            Poly::divrem(f, g, q, r);
            if (r.is_zero()) return false;
        }
    }
    return true;
}

// Roots in the field, with multiplicities, by exhaustive scan.
inline std::map<std::uint64_t, int> root_scan(const Poly& f) {
    const FieldPtr& F = f.field();
    std::map<std::uint64_t, int> roots;
    for (std::uint64_t i = 0; i < F->order_u64(); ++i) {
        FieldElem a = F->element(i);
        if (!f.eval(a).is_zero()) continue;
        Poly lin = Poly::x(F) - Poly::constant(F, a);
        Poly cur = f;
        int m = 0;
        for (;;) {
            Poly q, r;
            Poly::divrem(cur, lin, q, r);
            if (!r.is_zero()) break;
            ++m;
            cur = q;
        }
        roots[i] = m;
    }
    return roots;
}

// Splitting pattern of a monic cubic by root scan plus trial division.
inline CubicPattern pattern_by_scan(const Poly& f) {
    auto roots = root_scan(f);
    int total = 0, distinct = 0, max_mult = 0;
    for (const auto& [idx, m] : roots) {
        total += m;
        ++distinct;
        max_mult = std::max(max_mult, m);
    }
    if (max_mult == 3) return CubicPattern::TripleRoot;
    if (max_mult == 2) return CubicPattern::DoublePlusSimple;
    if (distinct == 3) return CubicPattern::ThreeDistinctRoots;
    if (distinct == 1) return CubicPattern::QuadraticTimesLinear;
    if (distinct == 0) return CubicPattern::IrreducibleCubic;
    throw std::logic_error("cubic with two simple rational roots");
}

// Affine point count of x^2 + s(beta) x + t(beta) = 0 by scanning both
// coordinates.
inline long long resolvent_points_by_scan(const Poly& s, const Poly& t) {
    const FieldPtr& F = s.field();
    long long n = 0;
    for (std::uint64_t b = 0; b < F->order_u64(); ++b) {
        FieldElem beta = F->element(b);
        FieldElem sv = s.eval(beta), tv = t.eval(beta);
        for (std::uint64_t x = 0; x < F->order_u64(); ++x) {
            FieldElem xv = F->element(x);
            if ((xv * xv + sv * xv + tv).is_zero()) ++n;
        }
    }
    return n;
}

// Affine point count of y^2 = delta(beta) by scanning both coordinates.
inline long long discriminant_points_by_scan(const Poly& delta) {
    const FieldPtr& F = delta.field();
    long long n = 0;
    for (std::uint64_t b = 0; b < F->order_u64(); ++b) {
        FieldElem dv = delta.eval(F->element(b));
        for (std::uint64_t y = 0; y < F->order_u64(); ++y) {
            FieldElem yv = F->element(y);
            if ((yv * yv - dv).is_zero()) ++n;
        }
    }
    return n;
}

}  // namespace oracles

#endif
