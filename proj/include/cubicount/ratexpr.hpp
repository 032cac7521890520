#ifndef CUBICOUNT_RATEXPR_HPP
#define CUBICOUNT_RATEXPR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubicount/poly.hpp"

namespace cubicount {

// A rational expression R = g/h of degree r = max(deg g, deg h), with g and h
// coprime. The concrete pair is kept as constructed: the polynomial transform
// depends on (g, h), not just on their quotient.
struct RatExpr {
    Poly g;
    Poly h;
    long r = 0;

    const FieldPtr& field() const { return g.field(); }
};

inline RatExpr ratexpr_new(Poly g, Poly h) {
    if (!g.valid() || !h.valid()) throw ValidationError("uninitialized polynomial");
    if (h.is_zero()) throw ValidationError("zero denominator");
    long r = std::max(g.degree(), h.degree());
    if (r < 1) throw ValidationError("rational expression must have degree at least 1");
    if (gcd(g, h).degree() != 0) throw ValidationError("not coprime");
    return RatExpr{std::move(g), std::move(h), r};
}

inline RatExpr parse_ratexpr(std::string_view text, const FieldPtr& F) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return ratexpr_new(parse_poly(text, F), Poly::constant(F, 1LL));
    return ratexpr_new(parse_poly(text.substr(0, slash), F),
                       parse_poly(text.substr(slash + 1), F));
}

inline std::string to_string(const RatExpr& R) {
    if (R.h.degree() == 0 && R.h.coeff(0) == R.field()->one()) return to_string(R.g);
    return to_string(R.g) + " / " + to_string(R.h);
}

// f_R = h^{deg f} * f(g/h). Degree is r*deg f unless h_r != 0 and f(g_r/h_r) = 0.
inline Poly transform(const Poly& f, const RatExpr& R) {
    if (f.is_zero()) throw ValidationError("transform of the zero polynomial");
    const FieldPtr& F = f.field();
    if (!F->same_as(*R.field())) throw ValidationError("polynomial and expression owners differ");
    long n = f.degree();
    // Horner in g with a running power of h: sum f_i g^i h^{n-i}.
    Poly acc = Poly::constant(F, f.coeff(n));
    Poly hpow = Poly::constant(F, 1LL);
    for (long i = n - 1; i >= 0; --i) {
        hpow *= R.h;
        acc = acc * R.g + Poly::constant(F, f.coeff(i)) * hpow;
    }
    return acc;
}

// A Moebius transformation (a x + b) / (c x + d), kept as a matrix up to scalar.
struct Mobius {
    FieldElem a, b, c, d;

    FieldElem det() const { return a * d - b * c; }
};

inline Mobius mobius_new(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
    Mobius m{std::move(a), std::move(b), std::move(c), std::move(d)};
    if (m.det().is_zero()) throw ValidationError("singular Moebius matrix");
    return m;
}

inline Mobius mobius_identity(const FieldPtr& F) {
    return Mobius{F->one(), F->zero(), F->zero(), F->one()};
}

inline Mobius mobius_compose(const Mobius& m1, const Mobius& m2) {  // m1 after m2
    return Mobius{m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                  m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d};
}

// A point of the projective line: a field element or the distinguished infinity.
struct ProjPoint {
    bool infinite = false;
    FieldElem value;

    static ProjPoint infinity() { return ProjPoint{true, FieldElem{}}; }
    static ProjPoint finite(FieldElem v) { return ProjPoint{false, std::move(v)}; }
};

inline bool operator==(const ProjPoint& p, const ProjPoint& q) {
    if (p.infinite || q.infinite) return p.infinite == q.infinite;
    return p.value == q.value;
}

inline ProjPoint mobius_apply(const Mobius& m, const ProjPoint& pt) {
    if (pt.infinite) {
        if (m.c.is_zero()) return ProjPoint::infinity();
        return ProjPoint::finite(m.a * m.c.inv());
    }
    FieldElem num = m.a * pt.value + m.b;
    FieldElem den = m.c * pt.value + m.d;
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite(num * den.inv());
}

// Value of R at a projective point.
inline ProjPoint ratexpr_apply(const RatExpr& R, const ProjPoint& pt) {
    if (pt.infinite) {
        if (R.h.degree() == R.r) {
            if (R.g.degree() < R.r) return ProjPoint::finite(R.field()->zero());
            return ProjPoint::finite(R.g.leading() * R.h.leading().inv());
        }
        return ProjPoint::infinity();
    }
    FieldElem num = R.g.eval(pt.value);
    FieldElem den = R.h.eval(pt.value);
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint::finite(num * den.inv());
}

inline ProjPoint parse_point(std::string_view text, const FieldPtr& F) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s == "∞" || s == "inf" || s == "oo") return ProjPoint::infinity();
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ValidationError("bad point literal: " + s);
    }
    if (used != s.size()) throw ValidationError("bad point literal: " + s);
    return ProjPoint::finite(detail::literal_to_elem(F, v < 0 ? -v : v, v < 0));
}

inline std::string to_string(const ProjPoint& pt, const FieldPtr& F) {
    if (pt.infinite) return "∞";
    return std::to_string(F->index_of(pt.value));
}

namespace detail {

// Divide out any common factor a compose step may have introduced and check
// the degree is preserved.
inline RatExpr make_composite(Poly g, Poly h, long r) {
    Poly d = gcd(g, h);
    if (d.degree() > 0) {
        g = g / d;
        h = h / d;
    }
    if (std::max(g.degree(), h.degree()) != r)
        throw InternalError("composition changed the degree of a rational expression");
    return RatExpr{std::move(g), std::move(h), r};
}

}  // namespace detail

// R o A for a Moebius transformation A = (a x + b)/(c x + d): substitute and
// clear denominators with (c x + d)^r on both components.
inline RatExpr pre_compose(const RatExpr& R, const Mobius& A) {
    const FieldPtr& F = R.field();
    Poly num = Poly::from_coeffs(F, {A.b, A.a});
    Poly den = Poly::from_coeffs(F, {A.d, A.c});
    std::vector<Poly> npow(static_cast<std::size_t>(R.r) + 1, Poly::constant(F, 1LL));
    std::vector<Poly> dpow = npow;
    for (long i = 1; i <= R.r; ++i) {
        npow[i] = npow[i - 1] * num;
        dpow[i] = dpow[i - 1] * den;
    }
    Poly g = Poly::zero(F), h = Poly::zero(F);
    for (long i = 0; i <= R.r; ++i) {
        Poly basis = npow[i] * dpow[R.r - i];
        g += basis * R.g.coeff(i);
        h += basis * R.h.coeff(i);
    }
    return detail::make_composite(std::move(g), std::move(h), R.r);
}

// B o R: (a g + b h) / (c g + d h).
inline RatExpr post_compose(const Mobius& B, const RatExpr& R) {
    Poly g = R.g * B.a + R.h * B.b;
    Poly h = R.g * B.c + R.h * B.d;
    return detail::make_composite(std::move(g), std::move(h), R.r);
}

struct Normalized {
    RatExpr expr;
    Mobius witness;  // expr = witness o input
};

// Post-compose a cubic expression into the shape the fiber analysis wants:
// deg h < 3 and g monic, so g - beta*h is monic cubic for every beta.
// When deg h = 3 we first send R(infinity) = g_3/h_3 to infinity via
// x -> 1/(x - g_3/h_3), then rescale to make the numerator monic.
inline Normalized normalize_cubic(const RatExpr& R) {
    if (R.r != 3) throw ValidationError("normalization requires a cubic expression");
    const FieldPtr& F = R.field();
    RatExpr cur = R;
    Mobius B = mobius_identity(F);
    if (cur.h.degree() == 3) {
        FieldElem v = cur.g.coeff(3) * cur.h.coeff(3).inv();
        Mobius shift = mobius_new(F->zero(), F->one(), F->one(), -v);
        cur = post_compose(shift, cur);
        B = mobius_compose(shift, B);
    }
    if (cur.h.degree() >= 3 || cur.g.degree() != 3)
        throw InternalError("normalization did not reach deg h < 3");
    if (!cur.g.is_monic()) {
        Mobius scale = mobius_new(cur.g.leading().inv(), F->zero(), F->zero(), F->one());
        cur = post_compose(scale, cur);
        B = mobius_compose(scale, B);
    }
    return Normalized{std::move(cur), std::move(B)};
}

struct RamificationData {
    bool inseparable = false;   // derivative of R identically zero (char 3 only)
    long wronskian_degree = -1;  // deg(g'h - gh')
    int finite_count = 0;       // distinct zeros of g'h - gh' over the closure
    bool infinity_ramified = false;
    int total = 0;
};

// Ramification points are the zeros of g'h - gh', plus infinity when that
// polynomial has degree below 2r - 2. Distinct zeros over the closure are
// counted by root counting in one extension large enough to split every
// factor of degree <= deg w (lcm of 1..4 = 12 suffices for cubics).
inline RamificationData ramification_data(const RatExpr& R) {
    if (R.r != 3) throw ValidationError("ramification analysis requires a cubic expression");
    const FieldPtr& F = R.field();
    Poly w = derivative(R.g) * R.h - R.g * derivative(R.h);
    RamificationData out;
    if (w.is_zero()) {
        out.inseparable = true;
        return out;
    }
    out.wronskian_degree = w.degree();
    if (w.degree() >= 1) {
        static constexpr unsigned long long kSplitDeg[5] = {1, 1, 2, 6, 12};
        unsigned long long j = kSplitDeg[w.degree()];
        Poly x = Poly::x(F);
        Poly t = powmod(x, BigInt::pow(F->order(), j), w);
        Poly g = gcd(t - (x % w), w);
        out.finite_count = static_cast<int>(g.is_zero() ? w.degree() : g.degree());
    }
    out.infinity_ramified = w.degree() < 2 * R.r - 2;
    out.total = out.finite_count + (out.infinity_ramified ? 1 : 0);
    return out;
}

namespace detail {

// Solve p*u + q*v = target for scalars (p, q), where u, v are linearly
// independent polynomials. Returns nothing when target is outside their span.
inline std::optional<std::pair<FieldElem, FieldElem>> solve_span2(const Poly& u, const Poly& v,
                                                                  const Poly& target) {
    long top = std::max({u.degree(), v.degree(), target.degree()});
    for (long i = 0; i <= top; ++i) {
        for (long j = i + 1; j <= top; ++j) {
            FieldElem det = u.coeff(i) * v.coeff(j) - u.coeff(j) * v.coeff(i);
            if (det.is_zero()) continue;
            FieldElem inv = det.inv();
            FieldElem p = (target.coeff(i) * v.coeff(j) - target.coeff(j) * v.coeff(i)) * inv;
            FieldElem q = (u.coeff(i) * target.coeff(j) - u.coeff(j) * target.coeff(i)) * inv;
            Poly cand = u * p + v * q;
            if (cand == target) return std::make_pair(p, q);
            return std::nullopt;
        }
    }
    throw InternalError("numerator and denominator not linearly independent");
}

template <class Fn>
void for_each_pgl2(const FieldPtr& F, Fn&& fn) {
    const std::uint64_t q = F->order_u64();
    // representatives: a = 1 (all b, c, d with d != bc), then a = 0, b = 1 (c != 0)
    for (std::uint64_t bi = 0; bi < q; ++bi)
        for (std::uint64_t ci = 0; ci < q; ++ci)
            for (std::uint64_t di = 0; di < q; ++di) {
                FieldElem b = F->element(bi), c = F->element(ci), d = F->element(di);
                if ((F->one() * d - b * c).is_zero()) continue;
                if (fn(Mobius{F->one(), b, c, d})) return;
            }
    for (std::uint64_t ci = 1; ci < q; ++ci)
        for (std::uint64_t di = 0; di < q; ++di) {
            FieldElem c = F->element(ci), d = F->element(di);
            if (fn(Mobius{F->zero(), F->one(), c, d})) return;
        }
}

}  // namespace detail

// Search for (A, B) with B o R1 o A = R2 as pairs up to scalar. A sweeps
// PGL_2(F_q) in deterministic order; B is solved from linear constraints on
// the coefficient vectors rather than searched.
inline std::optional<std::pair<Mobius, Mobius>> equivalent(
    const RatExpr& R1, const RatExpr& R2, long long search_budget = kDefaultSearchBudget) {
    const FieldPtr& F = R1.field();
    if (!F->same_as(*R2.field())) throw ValidationError("expressions over different fields");
    if (R1.r != 3 || R2.r != 3) throw ValidationError("equivalence search requires cubics");
    if (!F->order_fits_u64() || F->order() > BigInt{search_budget})
        throw LimitError("field too large for the equivalence search budget");
    std::optional<std::pair<Mobius, Mobius>> found;
    detail::for_each_pgl2(F, [&](const Mobius& A) {
        RatExpr S = pre_compose(R1, A);
        auto ab = detail::solve_span2(S.g, S.h, R2.g);
        if (!ab) return false;
        auto cd = detail::solve_span2(S.g, S.h, R2.h);
        if (!cd) return false;
        Mobius B{ab->first, ab->second, cd->first, cd->second};
        if (B.det().is_zero()) throw InternalError("coprime target with singular solution");
        found = std::make_pair(A, B);
        return true;
    });
    return found;
}

enum class CanonicalClass {
    // characteristic >= 5
    Cube,
    TwistedCube,
    ThreeRamSquare,
    ThreeRamNonsquare,
    FourRamification,  // any odd characteristic
    // characteristic 3
    C3_32,
    C3_LinSquare,
    C3_LinNonsquare,
    C3_Inseparable,
    // characteristic 2
    C2_I,
    C2_II,
    C2_III,
    C2_IV,
    C2_V,
    C2_VI,
};

inline const char* to_string(CanonicalClass c) {
    switch (c) {
        case CanonicalClass::Cube: return "cube";
        case CanonicalClass::TwistedCube: return "twisted-cube";
        case CanonicalClass::ThreeRamSquare: return "three-ram-square";
        case CanonicalClass::ThreeRamNonsquare: return "three-ram-nonsquare";
        case CanonicalClass::FourRamification: return "four-ramification";
        case CanonicalClass::C3_32: return "char3-(3,2)";
        case CanonicalClass::C3_LinSquare: return "char3-linear-square";
        case CanonicalClass::C3_LinNonsquare: return "char3-linear-nonsquare";
        case CanonicalClass::C3_Inseparable: return "char3-inseparable";
        case CanonicalClass::C2_I: return "char2-i";
        case CanonicalClass::C2_II: return "char2-ii";
        case CanonicalClass::C2_III: return "char2-iii";
        case CanonicalClass::C2_IV: return "char2-iv";
        case CanonicalClass::C2_V: return "char2-v";
        case CanonicalClass::C2_VI: return "char2-vi";
    }
    return "?";
}

struct Classification {
    CanonicalClass cls;
    RamificationData ram;
    std::optional<FieldElem> param;  // sigma/tau/c/b, when the class carries one
    int theta_power = -1;            // char2-iv: which of 1, theta, theta^2
    std::optional<std::pair<Mobius, Mobius>> witness;
};

namespace canonical {

inline RatExpr x3(const FieldPtr& F) {
    return ratexpr_new(parse_poly("x^3", F), Poly::constant(F, 1LL));
}
inline RatExpr twisted_cube(const FieldPtr& F, const FieldElem& sigma) {
    Poly g = Poly::monomial(F, 3, F->one()) + Poly::monomial(F, 1, mul_int(sigma, 3));
    Poly h = Poly::monomial(F, 2, F->from_int(3)) + Poly::constant(F, sigma);
    return ratexpr_new(std::move(g), std::move(h));
}
inline RatExpr x3_minus_3tau_x(const FieldPtr& F, const FieldElem& tau) {
    Poly g = Poly::monomial(F, 3, F->one()) - Poly::monomial(F, 1, mul_int(tau, 3));
    return ratexpr_new(std::move(g), Poly::constant(F, 1LL));
}
inline RatExpr x3_plus_x2(const FieldPtr& F) {
    return ratexpr_new(parse_poly("x^3+x^2", F), Poly::constant(F, 1LL));
}
inline RatExpr x3_minus_tau_x(const FieldPtr& F, const FieldElem& tau) {
    Poly g = Poly::monomial(F, 3, F->one()) - Poly::monomial(F, 1, tau);
    return ratexpr_new(std::move(g), Poly::constant(F, 1LL));
}
inline RatExpr char2_ii(const FieldPtr& F, const FieldElem& sigma) {
    Poly g = Poly::monomial(F, 3, F->one()) + Poly::monomial(F, 1, sigma) + Poly::constant(F, sigma);
    Poly h = Poly::monomial(F, 2, F->one()) + Poly::x(F) + Poly::constant(F, sigma + F->one());
    return ratexpr_new(std::move(g), std::move(h));
}
inline RatExpr char2_iv(const FieldPtr& F, const FieldElem& c) {  // (x^3 + c)/x
    Poly g = Poly::monomial(F, 3, F->one()) + Poly::constant(F, c);
    return ratexpr_new(std::move(g), Poly::x(F));
}
inline RatExpr char2_v(const FieldPtr& F, const FieldElem& c) {  // (x^3 + c)/(x + c)
    Poly g = Poly::monomial(F, 3, F->one()) + Poly::constant(F, c);
    Poly h = Poly::x(F) + Poly::constant(F, c);
    return ratexpr_new(std::move(g), std::move(h));
}
inline RatExpr char2_vi(const FieldPtr& F, const FieldElem& b, const FieldElem& sigma) {
    FieldElem bp1 = b + F->one();
    Poly g = Poly::monomial(F, 3, F->one()) + Poly::monomial(F, 2, b) +
             Poly::monomial(F, 1, sigma) + Poly::constant(F, bp1 * sigma);
    Poly h = Poly::monomial(F, 2, F->one()) + Poly::x(F) + Poly::constant(F, bp1 + sigma);
    return ratexpr_new(std::move(g), std::move(h));
}

}  // namespace canonical

// Classify a cubic expression to its canonical equivalence class. Buckets are
// keyed by characteristic and ramification count; within a bucket the class
// (and its parameter, where the classification says "for a unique ...") is
// resolved by equivalence search against the candidate canonical forms.
inline Classification classify(const RatExpr& R, long long search_budget = kDefaultSearchBudget) {
    if (R.r != 3) throw ValidationError("classification requires a cubic expression");
    const FieldPtr& F = R.field();
    const long long p = F->characteristic();
    RamificationData ram = ramification_data(R);

    Classification out{CanonicalClass::Cube, ram, std::nullopt, -1, std::nullopt};

    if (ram.inseparable) {
        if (p != 3) throw InternalError("inseparable cubic expression away from characteristic 3");
        out.cls = CanonicalClass::C3_Inseparable;
        return out;
    }
    if (ram.total == 4) {
        if (p == 2) throw InternalError("four ramification points in characteristic 2");
        out.cls = CanonicalClass::FourRamification;
        return out;
    }

    if (F->order() > BigInt{search_budget})
        throw LimitError("field too large for the equivalence search budget");

    struct Candidate {
        CanonicalClass cls;
        RatExpr form;
        std::optional<FieldElem> param;
        int theta_power;
    };
    std::vector<Candidate> candidates;

    if (p >= 5) {
        FieldElem sigma = find_nonsquare(F);
        if (ram.total == 2) {
            candidates.push_back({CanonicalClass::Cube, canonical::x3(F), std::nullopt, -1});
            candidates.push_back(
                {CanonicalClass::TwistedCube, canonical::twisted_cube(F, sigma), sigma, -1});
        } else if (ram.total == 3) {
            candidates.push_back({CanonicalClass::ThreeRamSquare,
                                  canonical::x3_minus_3tau_x(F, F->one()), F->one(), -1});
            candidates.push_back({CanonicalClass::ThreeRamNonsquare,
                                  canonical::x3_minus_3tau_x(F, sigma), sigma, -1});
        } else {
            throw InternalError("unexpected ramification count in characteristic >= 5");
        }
    } else if (p == 3) {
        if (ram.total == 2) {
            candidates.push_back({CanonicalClass::C3_32, canonical::x3_plus_x2(F), std::nullopt, -1});
        } else if (ram.total == 1) {
            FieldElem sigma = find_nonsquare(F);
            candidates.push_back({CanonicalClass::C3_LinSquare,
                                  canonical::x3_minus_tau_x(F, F->one()), F->one(), -1});
            candidates.push_back({CanonicalClass::C3_LinNonsquare,
                                  canonical::x3_minus_tau_x(F, sigma), sigma, -1});
        } else {
            throw InternalError("unexpected ramification count in characteristic 3");
        }
    } else {  // p == 2
        const std::uint64_t q = F->order_u64();
        if (ram.total == 1) {
            candidates.push_back(
                {CanonicalClass::C2_IV, canonical::char2_iv(F, F->one()), F->one(), 0});
            if (F->degree() % 2 == 0) {
                FieldElem theta = find_noncube(F);
                candidates.push_back(
                    {CanonicalClass::C2_IV, canonical::char2_iv(F, theta), theta, 1});
                candidates.push_back({CanonicalClass::C2_IV, canonical::char2_iv(F, theta * theta),
                                      theta * theta, 2});
            }
        } else if (ram.total == 2) {
            FieldElem sigma = find_trace_one(F);
            candidates.push_back({CanonicalClass::C2_I, canonical::x3(F), std::nullopt, -1});
            candidates.push_back({CanonicalClass::C2_II, canonical::char2_ii(F, sigma), sigma, -1});
            candidates.push_back(
                {CanonicalClass::C2_III, canonical::x3_plus_x2(F), std::nullopt, -1});
            for (std::uint64_t i = 2; i < q; ++i) {
                FieldElem c = F->element(i);
                candidates.push_back({CanonicalClass::C2_V, canonical::char2_v(F, c), c, -1});
            }
            for (std::uint64_t i = 2; i < q; ++i) {
                FieldElem b = F->element(i);
                candidates.push_back({CanonicalClass::C2_VI, canonical::char2_vi(F, b, sigma), b, -1});
            }
        } else {
            throw InternalError("unexpected ramification count in characteristic 2");
        }
    }

    for (const auto& cand : candidates) {
        auto w = equivalent(R, cand.form, search_budget);
        if (w) {
            out.cls = cand.cls;
            out.param = cand.param;
            out.theta_power = cand.theta_power;
            out.witness = w;
            return out;
        }
    }
    throw InternalError("cubic expression matched no canonical form");
}

}  // namespace cubicount

#endif
