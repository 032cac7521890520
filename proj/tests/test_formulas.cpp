#include "doctest.h"

#include "oracles.hpp"

using namespace cubicount;

TEST_CASE("closed-form spot values") {
    CHECK(f_x3(2, BigInt{7}) == BigInt{14});
    CHECK(f_x3(2, BigInt{5}) == BigInt{8});
    CHECK(f_x3(3, BigInt{4}) == BigInt{14});
    CHECK(f_x3(2, BigInt{3}) == BigInt{});  // powers of three: always reducible

    CHECK(f_two_ram(2, BigInt{5}) == BigInt{6});
    CHECK(f_two_ram(3, BigInt{7}) == BigInt{});  // q = 1 (mod 3), odd n
    CHECK(f_two_ram(2, BigInt{2}) == BigInt{});

    CHECK(f_three_ram(2, BigInt{5}) == BigInt{3});
    CHECK(f_three_ram(2, BigInt{2}) == BigInt{});
    CHECK(f_three_ram(2, BigInt{7}) == BigInt{7});

    CHECK(f_char3_32(2, BigInt{3}) == BigInt{1});
    CHECK(f_char3_lin(2, BigInt{3}, true) == BigInt{2});
    CHECK(f_char3_lin(2, BigInt{3}, false) == BigInt{3});
    CHECK_THROWS_AS(f_char3_32(2, BigInt{5}), ValidationError);
}

TEST_CASE("branch integrality across a parameter sweep") {
    // every exact evaluator divides exactly; divexact throws otherwise
    for (long long q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27}) {
        for (long n = 2; n <= 12; ++n) {
            BigInt Q{q};
            bool char3 = q % 3 == 0;
            if (!char3) {
                CHECK_NOTHROW(f_x3(n, Q));
                CHECK_NOTHROW(f_two_ram(n, Q));
                CHECK_NOTHROW(f_three_ram(n, Q));
                CHECK(f_x3(n, Q) >= BigInt{});
                CHECK(f_two_ram(n, Q) >= BigInt{});
                CHECK(f_three_ram(n, Q) >= BigInt{});
            } else {
                CHECK_NOTHROW(f_char3_32(n, Q));
                CHECK_NOTHROW(f_char3_lin(n, Q, true));
                CHECK_NOTHROW(f_char3_lin(n, Q, false));
            }
        }
    }
}

TEST_CASE("dispatch routes and values") {
    auto F7 = Field::make(7, 1);
    FormulaResult r1 = dispatch(canonical::x3(F7), 2);
    CHECK(r1.kind == FormulaKind::Exact);
    CHECK(r1.value == BigInt{14});
    CHECK(r1.rule == "x3");

    auto F5 = Field::make(5, 1);
    FormulaResult r2 = dispatch(parse_ratexpr("x^3+4x", F5), 2);  // x^3 - 3*2*x = x^3 - x
    CHECK(r2.value == BigInt{3});
    CHECK(r2.rule == "three-ram");

    auto F3 = Field::make(3, 1);
    FormulaResult r3 = dispatch(canonical::x3_plus_x2(F3), 4);
    CHECK(r3.value == BigInt{6});  // I(4,3)/3 = 18/3

    FormulaResult r4 = dispatch(canonical::x3(F3), 2);
    CHECK(r4.kind == FormulaKind::Exact);
    CHECK(r4.value == BigInt{});
    CHECK(r4.reason == "inseparable");

    FormulaResult r5 = dispatch(canonical::x3(Field::make(2, 1)), 3);
    CHECK(r5.kind == FormulaKind::EmptyByPermutation);
    CHECK(r5.value == BigInt{});

    FormulaResult r6 = dispatch(canonical::twisted_cube(F7, find_nonsquare(F7)), 3);
    CHECK(r6.kind == FormulaKind::EmptyByPermutation);
}

TEST_CASE("the two three-ramification classes share one count") {
    for (auto F : {Field::make(5, 1), Field::make(7, 1)}) {
        FieldElem sigma = find_nonsquare(F);
        for (long n : {2L, 3L, 4L}) {
            FormulaResult a = dispatch(canonical::x3_minus_3tau_x(F, F->one()), n);
            FormulaResult b = dispatch(canonical::x3_minus_3tau_x(F, sigma), n);
            CHECK(a.value == b.value);
        }
    }
}

TEST_CASE("genus-one bounds") {
    CHECK_THROWS_AS(f_genus_one_bound(2, BigInt{5}, 3), ValidationError);
    GenusOneBound b = f_genus_one_bound(2, BigInt{5}, 2);
    CHECK(b.center.to_long_double() == doctest::Approx((25.0 - 5.0) / 6.0));

    auto F5 = Field::make(5, 1);
    for (const auto& R : random_four_ram(F5, 5, 98)) {
        FormulaResult fr = dispatch(R, 2);
        REQUIRE(fr.kind == FormulaKind::Bound);
        long long exact = count_inversion(R, 2).value;
        CHECK(std::fabs(static_cast<long double>(exact) - fr.center.to_long_double()) <=
              fr.radius);
    }

    auto F2 = Field::make(2, 1);
    FormulaResult f4 = dispatch(canonical::char2_iv(F2, F2->one()), 4);
    CHECK(f4.kind == FormulaKind::Bound);
    CHECK(f4.kappa == 2);
    long long exact = count_inversion(canonical::char2_iv(F2, F2->one()), 4).value;
    CHECK(std::fabs(static_cast<long double>(exact) - f4.center.to_long_double()) <= f4.radius);

    auto F4f = Field::make(2, 2);
    FormulaResult f6 = dispatch(canonical::char2_vi(F4f, F4f->element(2), find_trace_one(F4f)), 2);
    CHECK(f6.kind == FormulaKind::Bound);
    CHECK(f6.kappa == 6);
}

TEST_CASE("formula agrees with the brute oracle on small fields") {
    for (auto [p, k] : std::vector<std::pair<long long, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto F = Field::make(p, k);
        for (const auto& nf : canonical_forms(F)) {
            for (long n : {2L, 3L}) {
                FormulaResult fr = dispatch(nf.expr, n);
                if (fr.kind == FormulaKind::Bound) continue;
                CAPTURE(nf.label);
                CAPTURE(p);
                CAPTURE(n);
                CHECK(fr.value == BigInt{count_brute(nf.expr, n).value});
            }
        }
    }
}
