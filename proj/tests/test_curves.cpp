#include "doctest.h"

#include "oracles.hpp"

using namespace cubicount;

TEST_CASE("delta polynomials of the canonical forms") {
    auto F7 = Field::make(7, 1);
    Poly beta7 = Poly::x(F7);
    RatExpr three = parse_ratexpr("x^3+6x", F7);  // x^3 - x, tau = 1
    CHECK(delta_poly(three) == Poly::constant(F7, 4LL) - mul_int(beta7 * beta7, 27));

    auto F5 = Field::make(5, 1);
    FieldElem sigma = find_nonsquare(F5);  // 2
    RatExpr twisted = canonical::twisted_cube(F5, sigma);
    Poly beta5 = Poly::x(F5);
    Poly sq = beta5 * beta5 - Poly::constant(F5, sigma);
    Poly expected = mul_int(sq * sq, -108) * Poly::constant(F5, sigma);
    CHECK(delta_poly(twisted) == expected);  // -108 sigma (beta^2 - sigma)^2

    auto F3 = Field::make(3, 1);
    RatExpr lin = parse_ratexpr("x^3+2x", F3);  // x^3 - x, tau = 1
    CHECK(delta_poly(lin) == Poly::constant(F3, 1LL));  // tau^3, constant in beta

    CHECK_THROWS_AS(delta_poly(parse_ratexpr("x^3+1 / x^3", F5)), ValidationError);
}

TEST_CASE("delta degree tracks ramification at infinity") {
    // Ramification at infinity forces deg Delta <= 3. The converse holds unless
    // the normalized denominator is a perfect square (its double root is a
    // ramification point with branch value at infinity): the beta^4 coefficient
    // of Delta is h_2^2 * disc(h).
    std::vector<FieldPtr> fields{Field::make(5, 1), Field::make(7, 1), Field::make(3, 1),
                                 Field::make(2, 2)};
    for (const auto& F : fields) {
        for (const auto& R : random_cubics(F, 8, 777)) {
            RamificationData rd = ramification_data(R);
            if (rd.inseparable) continue;
            RatExpr norm = normalize_cubic(R).expr;
            Poly d = delta_poly(norm);
            RamificationData rdn = ramification_data(norm);
            CHECK(d.degree() <= 4);
            if (rdn.infinity_ramified) CHECK(d.degree() <= 3);
            const Poly& h = norm.h;
            FieldElem lead4 = h.coeff(2) * h.coeff(2) *
                              (h.coeff(1) * h.coeff(1) - mul_int(h.coeff(2) * h.coeff(0), 4));
            CHECK((d.degree() == 4) == !lead4.is_zero());
            if (!rdn.infinity_ramified && gcd(h, derivative(h)).degree() == 0 && h.degree() == 2)
                CHECK(d.degree() == 4);
        }
    }
}

TEST_CASE("resolvent pairs of the canonical forms") {
    auto F5 = Field::make(5, 1);
    auto [s, t] = resolvent_pair(canonical::x3(F5));
    Poly beta = Poly::x(F5);
    CHECK(s == mul_int(beta, 3));
    CHECK(t == mul_int(beta * beta, 9));

    auto F2 = Field::make(2, 1);
    auto [s2, t2] = resolvent_pair(canonical::x3_plus_x2(F2));
    Poly b2 = Poly::x(F2);
    CHECK(s2 == b2);
    CHECK(t2 == b2 * b2 + b2);

    // (x^3 + c)/x: the resolvent reduces to x^2 + c x = beta^3 + c^2
    auto [s4, t4] = resolvent_pair(canonical::char2_iv(F2, F2->one()));
    CHECK(s4 == Poly::constant(F2, 1LL));
    CHECK(t4 == b2 * b2 * b2 + Poly::constant(F2, 1LL));
}

TEST_CASE("char2-vi resolvent leading coefficient") {
    // The curve is x^2 + s(beta) x = u(beta) with u = t in characteristic 2.
    // u is a quartic with leading coefficient b+1+sigma, which can vanish for
    // one b; no lower-order coefficients are pinned down.
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 2}, {2, 3}}) {
        auto F = Field::make(p, k);
        FieldElem sigma = find_trace_one(F);
        for (std::uint64_t i = 2; i < F->order_u64(); ++i) {
            FieldElem b = F->element(i);
            auto [s, t] = resolvent_pair(canonical::char2_vi(F, b, sigma));
            CHECK(s == Poly::x(F) * Poly::x(F) + Poly::x(F) + Poly::constant(F, sigma));
            FieldElem lead = b + F->one() + sigma;
            CHECK(t.degree() <= 4);
            if (!lead.is_zero()) {
                CHECK(t.degree() == 4);
                CHECK(t.leading() == lead);
            } else {
                CHECK(t.degree() < 4);
            }
        }
    }
}

TEST_CASE("point counts against the derived values and the scan oracle") {
    auto F7 = Field::make(7, 1);
    CHECK(count_points(canonical::x3(F7), 1, CurveKind::Resolvent).N == 13);

    auto F2 = Field::make(2, 1);
    CHECK(count_points(canonical::x3(F2), 1, CurveKind::Resolvent).N == 1);

    auto F5 = Field::make(5, 1);
    RatExpr lin5 = parse_ratexpr("x^3+4x", F5);  // x^3 - x
    CHECK(count_points(lin5, 1, CurveKind::Discriminant).N == 6);  // q - eps = 5 + 1

    // full agreement with the two-coordinate scan oracle
    for (const auto& R : {canonical::x3(F5), lin5, canonical::twisted_cube(F5, find_nonsquare(F5))}) {
        auto [s, t] = resolvent_pair(R);
        CHECK(count_points(R, 1, CurveKind::Resolvent).N == oracles::resolvent_points_by_scan(s, t));
        CHECK(count_points(R, 1, CurveKind::Discriminant).N ==
              oracles::discriminant_points_by_scan(delta_poly(R)));
    }
    auto [s2, t2] = resolvent_pair(canonical::x3_plus_x2(F2));
    CHECK(count_points(canonical::x3_plus_x2(F2), 1, CurveKind::Resolvent).N ==
          oracles::resolvent_points_by_scan(s2, t2));

    CHECK_THROWS_AS(count_points(canonical::x3(F2), 1, CurveKind::Discriminant), ValidationError);
    CHECK_THROWS_AS(count_points(canonical::x3(F5), 20, CurveKind::Resolvent), LimitError);
}

TEST_CASE("resolvent and discriminant counts agree in odd characteristic") {
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        auto F = Field::make(p, k);
        std::vector<RatExpr> rs;
        for (const auto& nf : canonical_forms(F)) rs.push_back(nf.expr);
        for (auto& r : random_cubics(F, 5, 999)) rs.push_back(r);
        for (const auto& R : rs) {
            RatExpr norm = normalize_cubic(R).expr;
            for (long n : {1L, 2L}) {
                CHECK(count_points(norm, n, CurveKind::Resolvent).N ==
                      count_points(norm, n, CurveKind::Discriminant).N);
            }
        }
    }
}

TEST_CASE("fiber structure of the discriminant curve") {
    // In odd characteristic a fiber has one point exactly over roots of delta.
    auto F7 = Field::make(7, 1);
    for (const auto& R : random_cubics(F7, 5, 1234)) {
        RatExpr norm = normalize_cubic(R).expr;
        Poly delta = delta_poly(norm);
        long long n = 0;
        for (std::uint64_t i = 0; i < 7; ++i) {
            FieldElem beta = F7->element(i);
            int fiber = 1 + quadratic_character(delta.eval(beta));
            CHECK(fiber >= 0);
            CHECK(fiber <= 2);
            CHECK((fiber == 1) == delta.eval(beta).is_zero());
            n += fiber;
        }
        CHECK(n == count_points(norm, 1, CurveKind::Discriminant).N);
    }
}

TEST_CASE("hasse weil checks") {
    auto F2 = Field::make(2, 1);
    HasseWeilCheck hw = hasse_weil_check(canonical::char2_iv(F2, F2->one()), 3);
    CHECK(hw.kappa == 2);
    CHECK(hw.pass);
    CHECK(hw.bound == doctest::Approx(2 * std::sqrt(8.0)));

    auto F4 = Field::make(2, 2);
    for (std::uint64_t i = 2; i < 4; ++i) {
        CHECK(hasse_weil_check(canonical::char2_v(F4, F4->element(i)), 2).pass);
        CHECK(hasse_weil_check(canonical::char2_vi(F4, F4->element(i), find_trace_one(F4)), 2).pass);
    }

    auto F5 = Field::make(5, 1);
    for (const auto& R : random_four_ram(F5, 5, 6021)) {
        for (long n : {1L, 2L}) CHECK(hasse_weil_check(R, n).pass);
    }
    CHECK_THROWS_AS(hasse_weil_check(canonical::x3(F5), 2), ValidationError);
}
