#include "spinflat/clifford.hpp"

#include <doctest.h>

#include <random>

using namespace spinflat;

namespace {

CliffordElement transposition_factor(int n, int p, int q) {
    CliffordElement t = CliffordElement::scalar(n, ExactCoeff::inv_sqrt2());
    t.add_term((1u << (p - 1)) | (1u << (q - 1)), ExactCoeff::inv_sqrt2());
    return t;
}

CliffordElement random_element(int n, std::mt19937_64& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<Blade> mask(0, (1u << n) - 1);
    std::uniform_int_distribution<i64> coef(-4, 4);
    std::uniform_int_distribution<int> expo(0, 2);
    CliffordElement x(n);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) x.add_term(mask(rng), ExactCoeff(coef(rng), coef(rng), expo(rng)));
    return x;
}

} // namespace

TEST_CASE("blade products") {
    CHECK(blade_mul(0b1, 0b1).blade == 0);    // e1 e1
    CHECK(blade_mul(0b1, 0b1).sign == -1);    // = -1
    CHECK(blade_mul(0b11, 0b11).blade == 0);  // (e1 e2)^2
    CHECK(blade_mul(0b11, 0b11).sign == -1);  // = -1
    CHECK(blade_mul(0b10, 0b01).blade == 0b11); // e2 e1 = -e1 e2
    CHECK(blade_mul(0b10, 0b01).sign == -1);
    CHECK(blade_mul(0b01, 0b10).sign == +1);
}

TEST_CASE("algebra product") {
    int n = 5;
    std::mt19937_64 rng(5);
    CliffordElement x = random_element(n, rng);
    CHECK(CliffordElement::one(n) * x == x);

    // ((1 + e4 e5)/sqrt2)^2 = e4 e5
    CliffordElement t = transposition_factor(n, 4, 5);
    CHECK(t * t == CliffordElement::blade_elem(n, 0b11000));

    // (e2 e4)^2 = -1
    CliffordElement b = CliffordElement::blade_elem(n, 0b01010);
    CHECK(b * b == CliffordElement::scalar(n, ExactCoeff(-1)));
}

TEST_CASE("three involutions") {
    int n = 3;
    CliffordElement e1 = CliffordElement::basis_vector(n, 1);
    CliffordElement e12 = CliffordElement::blade_elem(n, 0b11);

    CHECK(e12.star() == -e12); // e2 e1 = -e1 e2
    CliffordElement mixed = e1 + e12;
    CHECK(mixed.prime() == -e1 + e12);
    CHECK(e1.bar() == -e1);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        CliffordElement x = random_element(4, rng);
        CHECK(x.star().star() == x);
        CHECK(x.prime().prime() == x);
        CHECK(x.bar().bar() == x);
        CHECK(x.bar() == x.prime().star());
    }
}

TEST_CASE("star and bar are anti-automorphisms (exhaustive blades, n=5)") {
    int n = 5;
    for (Blade a = 0; a < (1u << n); ++a)
        for (Blade b = 0; b < (1u << n); ++b) {
            CliffordElement x = CliffordElement::blade_elem(n, a);
            CliffordElement y = CliffordElement::blade_elem(n, b);
            CHECK((x * y).star() == y.star() * x.star());
            CHECK((x * y).bar() == y.bar() * x.bar());
        }
}

TEST_CASE("product is associative") {
    // exhaustive on blades for n = 4
    int n = 4;
    for (Blade a = 0; a < (1u << n); ++a)
        for (Blade b = 0; b < (1u << n); ++b)
            for (Blade c = 0; c < (1u << n); ++c) {
                CliffordElement x = CliffordElement::blade_elem(n, a);
                CliffordElement y = CliffordElement::blade_elem(n, b);
                CliffordElement z = CliffordElement::blade_elem(n, c);
                CHECK((x * y) * z == x * (y * z));
            }
    // randomized dense elements for n = 5, 6
    std::mt19937_64 rng(2024);
    for (int dim = 5; dim <= 6; ++dim)
        for (int i = 0; i < 40; ++i) {
            CliffordElement x = random_element(dim, rng);
            CliffordElement y = random_element(dim, rng);
            CliffordElement z = random_element(dim, rng);
            CHECK((x * y) * z == x * (y * z));
        }
}

TEST_CASE("spin membership") {
    int n = 5;
    CHECK(CliffordElement::blade_elem(n, 0b01010).is_spin()); // e2 e4
    CHECK_FALSE(CliffordElement::basis_vector(n, 1).is_spin()); // odd grade
    CHECK(transposition_factor(n, 1, 2).is_spin());
    CHECK_FALSE(CliffordElement::scalar(n, ExactCoeff(2)).is_spin());
}

TEST_CASE("covering map on simple elements") {
    int n = 5;
    CHECK(CliffordElement::one(n).lambda_matrix() == RatMat::identity(n));
    CHECK(CliffordElement::scalar(n, ExactCoeff(-1)).lambda_matrix() == RatMat::identity(n));

    RatMat expected = RatMat::identity(n);
    expected.at(1, 1) = Rat(-1);
    expected.at(3, 3) = Rat(-1);
    CHECK(CliffordElement::blade_elem(n, 0b01010).lambda_matrix() == expected); // e2 e4
}

TEST_CASE("covering map rejects non-Spin elements that slip past the precondition") {
    // 1 + e1 e2 e3 maps e1 to 2 e1 - 2 e2 e3, which is not a vector
    int n = 3;
    CliffordElement x = CliffordElement::one(n);
    x.add_term(0b111, ExactCoeff::one());
    CHECK_THROWS_AS(x.lambda_matrix(), InternalError);
}

TEST_CASE("dimension safety") {
    CHECK_THROWS_AS(CliffordElement(1), InternalError);
    CHECK_THROWS_AS(CliffordElement(9), InternalError);
    CHECK_THROWS_AS(CliffordElement::blade_elem(3, 0b1000), InternalError);
    CliffordElement a = CliffordElement::one(3);
    CliffordElement b = CliffordElement::one(4);
    CHECK_THROWS_AS(a * b, InternalError);
    CHECK_THROWS_AS(a + b, InternalError);
}

TEST_CASE("rendering") {
    int n = 5;
    CHECK(CliffordElement::one(n).str() == "1");
    CHECK(CliffordElement::blade_elem(n, 0b01010).str() == "e2 e4");
    CHECK((-CliffordElement::blade_elem(n, 0b01010)).str() == "-e2 e4");
}
