#include "spinflat/exact_coeff.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace spinflat;

TEST_CASE("addition on exact coefficients") {
    CHECK(ExactCoeff(1) + ExactCoeff(-1) == ExactCoeff(0, 0, 0));
    CHECK(ExactCoeff(1, 0, 1) + ExactCoeff(1, 0, 1) == ExactCoeff(1, 0, 0)); // 1/2 + 1/2
    CHECK(ExactCoeff(0, 1, 1) + ExactCoeff(0, 1, 1) == ExactCoeff(0, 1, 0)); // 2/sqrt2 = sqrt2
}

TEST_CASE("multiplication on exact coefficients") {
    CHECK(ExactCoeff(1, 1, 0) * ExactCoeff(1, -1, 0) == ExactCoeff(-1)); // (1+s)(1-s) = -1
    CHECK(ExactCoeff::inv_sqrt2() * ExactCoeff::inv_sqrt2() == ExactCoeff(1, 0, 1));
    ExactCoeff x(7, -3, 4);
    CHECK(ExactCoeff::one() * x == x);
}

TEST_CASE("unit sign recognition") {
    CHECK(ExactCoeff(1).unit_sign() == UnitSign::plus);
    CHECK(ExactCoeff(-1).unit_sign() == UnitSign::minus);
    CHECK(ExactCoeff::inv_sqrt2().unit_sign() == UnitSign::neither);
    CHECK(ExactCoeff(0).unit_sign() == UnitSign::neither);
    CHECK(ExactCoeff(2).unit_sign() == UnitSign::neither);
}

TEST_CASE("normalization is idempotent and canonical") {
    CHECK(ExactCoeff(2, 0, 1) == ExactCoeff(1, 0, 0));
    CHECK(ExactCoeff(4, 2, 2) == ExactCoeff(2, 1, 1));
    CHECK(ExactCoeff(0, 0, 17) == ExactCoeff(0, 0, 0));
    // odd component stops the reduction even if the other is even
    CHECK(ExactCoeff(2, 1, 3) == ExactCoeff(2, 1, 3));
}

TEST_CASE("value map respects ring operations on random inputs") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<i64> coef(-1000000, 1000000);
    std::uniform_int_distribution<int> expo(0, 20);
    for (int iter = 0; iter < 2000; ++iter) {
        ExactCoeff x(coef(rng), coef(rng), expo(rng));
        ExactCoeff y(coef(rng), coef(rng), expo(rng));
        double sum = (x + y).value();
        double prod = (x * y).value();
        double ref_sum = x.value() + y.value();
        double ref_prod = x.value() * y.value();
        CHECK(std::abs(sum - ref_sum) <= 1e-9 * std::max(1.0, std::abs(ref_sum)));
        CHECK(std::abs(prod - ref_prod) <= 1e-9 * std::max(1.0, std::abs(ref_prod)));
    }
}

TEST_CASE("ring axioms hold exactly on random triples") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<i64> coef(-1000, 1000);
    std::uniform_int_distribution<int> expo(0, 6);
    for (int iter = 0; iter < 500; ++iter) {
        ExactCoeff x(coef(rng), coef(rng), expo(rng));
        ExactCoeff y(coef(rng), coef(rng), expo(rng));
        ExactCoeff z(coef(rng), coef(rng), expo(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("overflow is detected, never wrapped") {
    ExactCoeff big(i64(1) << 62);
    CHECK_THROWS_AS(big * big, OverflowError);
    ExactCoeff huge((i64(1) << 62) + ((i64(1) << 62) - 1));
    CHECK_THROWS_AS(huge + huge, OverflowError);
}

TEST_CASE("diagnostic rendering") {
    CHECK(ExactCoeff(3).str() == "3");
    CHECK(ExactCoeff::inv_sqrt2().str() == "(0+1*sqrt2)/2^1");
    CHECK(ExactCoeff(1, -1, 2).str() == "(1-1*sqrt2)/2^2");
}
