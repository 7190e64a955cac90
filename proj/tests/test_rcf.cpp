#include <catch2/catch_amalgamated.hpp>

#include "doquot/rcf.hpp"
#include "test_util.hpp"

using namespace doquot;
using doquot::testutil::Rng;

TEST_CASE("companion matrices have a single invariant factor") {
    Rng rng(11);
    for (u64 p : {2, 3, 5}) {
        Fp field(p);
        for (std::size_t d = 1; d <= 5; ++d) {
            FpPoly f = testutil::random_monic(field, d, rng);
            RcfForm r = rcf(FpMatrix::companion(f));
            REQUIRE(r.invariant_factors.size() == 1);
            REQUIRE(r.invariant_factors[0] == f);
        }
    }
}

TEST_CASE("scalar matrices split into linear factors") {
    Fp f3(3);
    RcfForm r = rcf(FpMatrix::scalar(f3, 3, 2));
    REQUIRE(r.invariant_factors.size() == 3);
    for (const auto& f : r.invariant_factors) REQUIRE(f == FpPoly(f3, {1, 1})); // x - 2
}

TEST_CASE("hand-checked small forms") {
    Fp f3(3);
    SECTION("distinct eigenvalues merge into one factor") {
        RcfForm r = rcf(FpMatrix::diagonal(f3, {1, 2}));
        REQUIRE(r.invariant_factors.size() == 1);
        REQUIRE(r.invariant_factors[0] == FpPoly(f3, {2, 0, 1})); // (x-1)(x-2) = x^2+2
    }
    SECTION("nilpotent Jordan block") {
        FpMatrix n(f3, 3);
        n.set(0, 1, 1);
        n.set(1, 2, 1);
        RcfForm r = rcf(n);
        REQUIRE(r.invariant_factors.size() == 1);
        REQUIRE(r.invariant_factors[0] == FpPoly::monomial(f3, 3));
    }
    SECTION("block sum with a divisibility chain") {
        FpPoly f(f3, {1, 1});            // x + 1
        FpPoly g = f * FpPoly(f3, {1, 0, 1}); // (x+1)(x^2+1)
        FpMatrix blk =
            testutil::block_diagonal({FpMatrix::companion(f), FpMatrix::companion(g)});
        RcfForm r = rcf(blk);
        REQUIRE(r.invariant_factors.size() == 2);
        REQUIRE(r.invariant_factors[0] == f);
        REQUIRE(r.invariant_factors[1] == g);
    }
}

TEST_CASE("chain structure and minimal polynomial") {
    Rng rng(12);
    for (u64 p : {2, 3, 5}) {
        Fp field(p);
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + t % 5;
            FpMatrix a = testutil::random_matrix(field, n, rng);
            RcfForm r = rcf(a);
            i64 total = 0;
            for (std::size_t i = 0; i < r.invariant_factors.size(); ++i) {
                const FpPoly& f = r.invariant_factors[i];
                REQUIRE(f.is_monic());
                REQUIRE(f.degree() >= 1);
                total += f.degree();
                if (i + 1 < r.invariant_factors.size())
                    REQUIRE((r.invariant_factors[i + 1] % f).is_zero());
            }
            REQUIRE(total == static_cast<i64>(n));
            REQUIRE(r.invariant_factors.back() == minimal_polynomial(a));
        }
    }
}

TEST_CASE("similarity is conjugation-invariant") {
    Rng rng(13);
    Fp f3(3);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t % 3;
        FpMatrix a = testutil::random_matrix(f3, n, rng);
        FpMatrix s = testutil::random_invertible(f3, n, rng);
        FpMatrix conj = s.inverse() * a * s;
        REQUIRE(rcf(conj) == rcf(a));
        REQUIRE(similar(a, conj));
    }
    REQUIRE_FALSE(similar(FpMatrix::identity(f3, 2), FpMatrix::scalar(f3, 2, 2)));
    REQUIRE_THROWS_AS(similar(FpMatrix::identity(f3, 2), FpMatrix::identity(Fp(5), 2)),
                      ModulusMismatchError);
}

TEST_CASE("canonical order on forms") {
    Fp f3(3);
    RcfForm a = rcf(FpMatrix::scalar(f3, 2, 1));           // [x-1, x-1]
    RcfForm b = rcf(FpMatrix::companion(FpPoly(f3, {1, 0, 1}))); // [x^2+1]
    // degree sequence (1,1) precedes (2)
    REQUIRE(a < b);
    REQUIRE_FALSE(b < a);
    // x-2 stores as coefficients (1,1), x-1 as (2,1), so c precedes a
    RcfForm c = rcf(FpMatrix::scalar(f3, 2, 2));
    REQUIRE(c < a);
    REQUIRE_FALSE(a < c);
    REQUIRE_FALSE(a < a);
}
