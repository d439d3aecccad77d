#include "spinflat/spinlift.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace spinflat;

namespace {

IntMat diag(std::vector<i64> d) {
    IntMat m(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

// the 5x5 image of the second dihedral generator under the matched representation:
// diag(1,-1,-1) + a rotation block on coordinates 4,5
IntMat example_phi_b() {
    IntMat m = diag({1, -1, -1, 0, 0});
    m.at(3, 4) = 1;
    m.at(4, 3) = -1;
    return m;
}

// all signed permutation matrices of determinant +1 in dimension n
std::vector<IntMat> all_rotations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<IntMat> out;
    do {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            IntMat m(n);
            for (int c = 0; c < n; ++c) m.at(perm[c], c) = (signs >> c & 1) ? -1 : 1;
            if (m.signed_permutation_det() == 1) out.push_back(m);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

IntMat random_rotation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<unsigned> bits(0, (1u << n) - 1);
    IntMat m(n);
    unsigned signs = bits(rng);
    for (int c = 0; c < n; ++c) m.at(perm[c], c) = (signs >> c & 1) ? -1 : 1;
    if (m.signed_permutation_det() != 1) {
        // flip one sign to land in SO(n,Z)
        for (int r = 0; r < n; ++r)
            if (m.at(r, 0) != 0) {
                m.at(r, 0) = -m.at(r, 0);
                break;
            }
    }
    return m;
}

} // namespace

TEST_CASE("factorization of simple matrices") {
    SUBCASE("identity") {
        auto f = factor(IntMat::identity(4));
        CHECK(f.transpositions.empty());
        CHECK(f.diagonal == std::vector<int>{1, 1, 1, 1});
    }
    SUBCASE("pure diagonal") {
        auto f = factor(diag({1, -1, 1, -1, 1}));
        CHECK(f.transpositions.empty());
        CHECK(f.diagonal == std::vector<int>{1, -1, 1, -1, 1});
    }
    SUBCASE("one rotation block") {
        auto f = factor(example_phi_b());
        CHECK(f.transpositions == std::vector<std::pair<int, int>>{{4, 5}});
        CHECK(f.diagonal == std::vector<int>{1, -1, -1, -1, -1});
    }
    SUBCASE("rejects bad input") {
        CHECK_THROWS_AS(factor(diag({1, 1, -1})), std::invalid_argument); // det -1
        IntMat notperm(2);
        notperm.at(0, 0) = 2;
        notperm.at(1, 1) = 1;
        CHECK_THROWS_AS(factor(notperm), std::invalid_argument);
    }
}

TEST_CASE("lifts of the dihedral generator images") {
    SUBCASE("diagonal lifts to a blade monomial") {
        CliffordElement x = lift(diag({1, -1, 1, -1, 1}));
        CHECK(x == CliffordElement::blade_elem(5, 0b01010)); // e2 e4
    }
    SUBCASE("rotation block lifts to a two-term element") {
        CliffordElement x = lift(example_phi_b());
        // expected: +- e2 e3 (1 + e5 e4)/sqrt2 = +- (e2 e3 - e2 e3 e4 e5)/sqrt2... up to sign
        CliffordElement expected(5);
        expected.add_term(0b00110, ExactCoeff::inv_sqrt2());          // e2 e3
        expected.add_term(0b11110, -ExactCoeff::inv_sqrt2());         // -e2 e3 e4 e5
        CHECK((x == expected || x == -expected));
    }
    SUBCASE("identity lifts to 1") {
        CHECK(lift(IntMat::identity(5)) == CliffordElement::one(5));
    }
}

TEST_CASE("round trip is exact: exhaustive in low dimension") {
    for (int n = 2; n <= 4; ++n) {
        auto mats = all_rotations(n);
        if (n == 4) CHECK(mats.size() == 192);
        for (const IntMat& X : mats) {
            CliffordElement x = lift(X);
            CHECK(x.is_spin());
            CHECK(x.lambda_matrix() == X.to_rational());
        }
    }
}

TEST_CASE("round trip on random samples in dimension 5 and 6") {
    std::mt19937_64 rng(314159);
    for (int n = 5; n <= 6; ++n)
        for (int i = 0; i < 1000; ++i) {
            IntMat X = random_rotation(n, rng);
            CliffordElement x = lift(X);
            CHECK(x.is_spin());
            CHECK(x.lambda_matrix() == X.to_rational());
        }
}

TEST_CASE("the two preimages differ by sign") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        IntMat X = random_rotation(5, rng);
        CliffordElement x = lift(X);
        CHECK((-x).lambda_matrix() == X.to_rational());
        CHECK((-x).is_spin());
    }
}

TEST_CASE("lifting is a cocycle up to sign") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        IntMat X = random_rotation(5, rng);
        IntMat Y = random_rotation(5, rng);
        CliffordElement lhs = lift(X * Y);
        CliffordElement rhs = lift(X) * lift(Y);
        CHECK((lhs == rhs || lhs == -rhs));
    }
}

TEST_CASE("coefficient shape follows the transposition count") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 200; ++i) {
        IntMat X = random_rotation(6, rng);
        auto f = factor(X);
        int t = static_cast<int>(f.transpositions.size());
        CliffordElement x = lift(X);
        for (const auto& [mask, c] : x.terms()) {
            if (t % 2 == 0) {
                CHECK(c.b == 0);
                CHECK(c.k <= t / 2);
            } else {
                CHECK(c.a == 0);
                CHECK(c.k <= (t + 1) / 2);
            }
        }
    }
}

TEST_CASE("covering map is a homomorphism on lifted elements") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 200; ++i) {
        CliffordElement x = lift(random_rotation(6, rng));
        CliffordElement y = lift(random_rotation(6, rng));
        CHECK((x * y).lambda_matrix() == x.lambda_matrix() * y.lambda_matrix());
        CHECK((-x).lambda_matrix() == x.lambda_matrix()); // double cover
    }
}
