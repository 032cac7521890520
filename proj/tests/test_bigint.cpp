#include "doctest.h"

#include "cubicount/bigint.hpp"

using cubicount::BigInt;

TEST_CASE("construction and string round trips") {
    CHECK(BigInt{}.to_string() == "0");
    CHECK(BigInt{-1}.to_string() == "-1");
    CHECK(BigInt{1234567890123456789LL}.to_string() == "1234567890123456789");
    CHECK(BigInt::from_string("-987654321098765432109876543210").to_string() ==
          "-987654321098765432109876543210");
    CHECK_THROWS_AS(BigInt::from_string("12x"), cubicount::ValidationError);
}

TEST_CASE("ring operations") {
    BigInt a = BigInt::from_string("123456789123456789123456789");
    BigInt b = BigInt::from_string("987654321987654321");
    CHECK((a + b) - b == a);
    CHECK((a * b) / b == a);
    CHECK(a * BigInt{0} == BigInt{});
    CHECK((-a) + a == BigInt{});
    CHECK(a - a == BigInt{});
    CHECK(BigInt{-6} * BigInt{7} == BigInt{-42});
}

TEST_CASE("division semantics") {
    BigInt q, r;
    BigInt::divrem(BigInt{17}, BigInt{5}, q, r);
    CHECK(q == BigInt{3});
    CHECK(r == BigInt{2});
    BigInt::divrem(BigInt{-17}, BigInt{5}, q, r);
    CHECK(q == BigInt{-3});
    CHECK(r == BigInt{-2});
    CHECK(BigInt{84}.divexact(BigInt{12}) == BigInt{7});
    CHECK_THROWS_AS(BigInt{85}.divexact(BigInt{12}), cubicount::InternalError);
    CHECK_THROWS_AS(BigInt{1} / BigInt{0}, cubicount::ValidationError);

    BigInt big = BigInt::pow(BigInt{10}, 40) + BigInt{7};
    BigInt::divrem(big, BigInt::pow(BigInt{10}, 20), q, r);
    CHECK(q == BigInt::pow(BigInt{10}, 20));
    CHECK(r == BigInt{7});
}

TEST_CASE("pow and bits") {
    CHECK(BigInt::pow(BigInt{2}, 64).to_string() == "18446744073709551616");
    CHECK(BigInt::pow(BigInt{-3}, 3) == BigInt{-27});
    CHECK(BigInt::pow(BigInt{5}, 0) == BigInt{1});
    BigInt v = BigInt::pow(BigInt{2}, 100);
    CHECK(v.bit_length() == 101);
    CHECK(v.bit(100));
    CHECK(!v.bit(99));
}

TEST_CASE("small residues and conversions") {
    CHECK(BigInt{100}.mod_small(7) == 2);
    CHECK(BigInt{-100}.mod_small(7) == 5);
    CHECK(BigInt::pow(BigInt{10}, 30).mod_small(9) == 1);
    CHECK(BigInt{42}.fits_longlong());
    CHECK(BigInt{42}.to_longlong() == 42);
    CHECK(!BigInt::pow(BigInt{2}, 70).fits_longlong());
    CHECK(BigInt{1000}.to_long_double() == doctest::Approx(1000.0));
}

TEST_CASE("ordering") {
    CHECK(BigInt{-5} < BigInt{3});
    CHECK(BigInt{3} < BigInt{5});
    CHECK(BigInt{-5} < BigInt{-3});
    CHECK(BigInt::pow(BigInt{2}, 40) > BigInt{1});
}
