#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "doquot/field_recognition.hpp"
#include "test_util.hpp"

using namespace doquot;
using doquot::testutil::Rng;

namespace {

// The algebra F_p[x]/(modulus) embedded in matrices: value -> matrix of
// multiplication by the polynomial with those base-p digits.
struct EmbeddedField {
    explicit EmbeddedField(u64 p, std::size_t n)
        : field(p), modulus(find_irreducible(field, n)), mul_x(FpMatrix::companion(modulus)) {}

    FpMatrix element(u64 value) const {
        std::vector<u64> digits;
        while (value > 0) {
            digits.push_back(value % field.modulus());
            value /= field.modulus();
        }
        return poly_eval_matrix(FpPoly(field, digits), mul_x);
    }

    // First element (in value order) whose minimal polynomial has the given
    // degree; falls back to trace images when enumeration would be too slow.
    FpMatrix element_of_degree(std::size_t d) const {
        const std::size_t n = static_cast<std::size_t>(modulus.degree());
        if (d == 1) return FpMatrix::scalar(field, n, 2);
        for (std::size_t j = 1; j < 4 * n; ++j) {
            FpMatrix t = relative_trace_matrix(mul_x.pow(j), n, d);
            if (t.is_invertible() && minimal_polynomial(t).degree() == static_cast<i64>(d))
                return t;
        }
        FAIL("no element of requested degree found");
        return mul_x;
    }

    Fp field;
    FpPoly modulus;
    FpMatrix mul_x;
};

} // namespace

TEST_CASE("two-element generator, divisibility and coprime cases") {
    EmbeddedField f9(3, 2);
    FpMatrix a = f9.mul_x; // degree 2
    FpMatrix id = FpMatrix::identity(Fp(3), 2);

    SECTION("identity against a generator picks the generator") {
        auto g = compute_generator(id, a);
        REQUIRE(g.has_value());
        REQUIRE(*g == a); // d == deg mu_identity, so the other input wins
    }
    SECTION("degree dividing degree picks the larger") {
        FpMatrix sq = a * a; // minimal polynomial x+1, degree 1
        REQUIRE(minimal_polynomial(sq).degree() == 1);
        auto g = compute_generator(a, sq);
        REQUIRE(g.has_value());
        REQUIRE(*g == a);
        auto h = compute_generator(sq, a);
        REQUIRE(h.has_value());
        REQUIRE(*h == a);
    }
    SECTION("coprime degrees multiply") {
        EmbeddedField f729(3, 6);
        FpMatrix beta = f729.element_of_degree(2);
        FpMatrix gamma = f729.element_of_degree(3);
        auto g = compute_generator(beta, gamma);
        REQUIRE(g.has_value());
        REQUIRE(*g == beta * gamma);
        REQUIRE(minimal_polynomial(*g).degree() == 6);
    }
}

TEST_CASE("two-element generator, trace-stitching case") {
    EmbeddedField big(3, 12);
    FpMatrix a = big.element_of_degree(4);
    FpMatrix b = big.element_of_degree(6);
    // gcd(4,6) = 2: neither divides the other, not coprime
    auto g = compute_generator(a, b);
    REQUIRE(g.has_value());
    FpPoly mu = minimal_polynomial(*g);
    REQUIRE(mu.degree() == 12);
    REQUIRE(is_irreducible(mu));
    // both inputs lie in the span of the generator powers
    auto basis = power_basis(*g, 12);
    REQUIRE(span_membership(a, basis).has_value());
    REQUIRE(span_membership(b, basis).has_value());
}

TEST_CASE("generator degree is the lcm for field inputs") {
    EmbeddedField big(3, 12);
    Rng rng(21);
    const std::vector<std::size_t> degrees{1, 2, 3, 4, 6, 12};
    for (int t = 0; t < 10; ++t) {
        std::size_t da = degrees[testutil::rand_below(rng, degrees.size())];
        std::size_t db = degrees[testutil::rand_below(rng, degrees.size())];
        FpMatrix a = big.element_of_degree(da);
        FpMatrix b = big.element_of_degree(db);
        auto g = compute_generator(a, b);
        REQUIRE(g.has_value());
        REQUIRE(minimal_polynomial(*g).degree() ==
                static_cast<i64>(std::lcm(da, db)));
    }
}

TEST_CASE("generator rejects singular input") {
    Fp f3(3);
    FpMatrix sing = FpMatrix::diagonal(f3, {1, 0});
    FpMatrix id = FpMatrix::identity(f3, 2);
    REQUIRE_THROWS_AS(compute_generator(sing, id), NotInvertibleError);
    REQUIRE_THROWS_AS(compute_generator(id, sing), NotInvertibleError);
}

TEST_CASE("decision: identity alone") {
    Fp f3(3);
    FieldDecision d = finite_field_decide({FpMatrix::identity(f3, 3)});
    REQUIRE(d.is_field);
    REQUIRE(d.degree == 1);
    REQUIRE(*d.generator == FpMatrix::identity(f3, 3));
    REQUIRE(*d.min_poly == FpPoly(f3, {2, 1})); // x - 1
}

TEST_CASE("decision: single companion generator") {
    FpPoly f(Fp(3), {1, 0, 1});
    FieldDecision d = finite_field_decide({FpMatrix::companion(f)});
    REQUIRE(d.is_field);
    REQUIRE(d.degree == 2);
    REQUIRE(*d.min_poly == f);
}

TEST_CASE("decision: reducible minimal polynomial refutation") {
    Fp f3(3);
    FieldDecision d = finite_field_decide({FpMatrix::diagonal(f3, {1, 2})});
    REQUIRE_FALSE(d.is_field);
    REQUIRE(d.refutation == FieldDecision::Refutation::reducible_min_poly);
    REQUIRE(*d.reducible_witness == FpMatrix::diagonal(f3, {1, 2}));
    REQUIRE(*d.witness_min_poly == FpPoly(f3, {2, 0, 1})); // (x-1)(x-2)
}

TEST_CASE("decision: outside-span refutation") {
    Fp f3(3);
    FpMatrix c = FpMatrix::companion(FpPoly(f3, {1, 0, 1}));
    FpMatrix a = testutil::block_diagonal({c, c});
    FpMatrix b = testutil::block_diagonal({c, c.negated()});
    // both blocks have the same irreducible quadratic as minimal polynomial,
    // but b is not a polynomial in a
    FieldDecision d = finite_field_decide({a, b});
    REQUIRE_FALSE(d.is_field);
    REQUIRE(d.refutation == FieldDecision::Refutation::outside_span);
    REQUIRE(d.outside_index == 1);
}

TEST_CASE("decision: input validation") {
    Fp f3(3);
    REQUIRE_THROWS_AS(finite_field_decide({}), EmptyInputError);
    REQUIRE_THROWS_AS(finite_field_decide({FpMatrix::diagonal(f3, {1, 0})}),
                      NotInvertibleError);
    REQUIRE_THROWS_AS(
        finite_field_decide({FpMatrix::identity(f3, 2), FpMatrix::identity(f3, 3)}),
        DimensionMismatchError);
    REQUIRE_THROWS_AS(
        finite_field_decide({FpMatrix::identity(f3, 2), FpMatrix::identity(Fp(5), 2)}),
        ModulusMismatchError);
}

TEST_CASE("decision: verdict ignores input order") {
    EmbeddedField big(3, 6);
    Rng rng(22);
    std::vector<FpMatrix> S{big.element_of_degree(2), big.element_of_degree(3),
                            big.element_of_degree(6)};
    FieldDecision base = finite_field_decide(S);
    REQUIRE(base.is_field);
    REQUIRE(base.degree == 6);
    std::vector<std::vector<std::size_t>> orders{{2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    for (const auto& ord : orders) {
        std::vector<FpMatrix> perm;
        for (std::size_t i : ord) perm.push_back(S[i]);
        FieldDecision d = finite_field_decide(perm);
        REQUIRE(d.is_field == base.is_field);
        REQUIRE(d.degree == base.degree);
    }
}

TEST_CASE("decision: idempotent on its own generator") {
    EmbeddedField big(3, 6);
    std::vector<FpMatrix> S{big.element_of_degree(2), big.element_of_degree(3)};
    FieldDecision d = finite_field_decide(S);
    REQUIRE(d.is_field);
    REQUIRE(d.degree == 6);
    FieldDecision again = finite_field_decide({*d.generator});
    REQUIRE(again.is_field);
    REQUIRE(again.degree == d.degree);
}

TEST_CASE("decision: non-commuting pairs are never fields") {
    Rng rng(23);
    Fp f3(3);
    int checked = 0;
    for (int t = 0; t < 40 && checked < 10; ++t) {
        FpMatrix c = FpMatrix::companion(FpPoly(f3, {1, 0, 1}));
        FpMatrix s = testutil::random_invertible(f3, 2, rng);
        FpMatrix conj = s.inverse() * c * s;
        if (c * conj == conj * c) continue;
        ++checked;
        FieldDecision d = finite_field_decide({c, conj});
        REQUIRE_FALSE(d.is_field);
    }
    REQUIRE(checked >= 10);
}

TEST_CASE("decision: random subsets of an embedded field are fields") {
    EmbeddedField f81(3, 4);
    Rng rng(24);
    for (int t = 0; t < 15; ++t) {
        std::vector<FpMatrix> S;
        std::vector<std::size_t> degs;
        const std::size_t count = 1 + testutil::rand_below(rng, 3);
        for (std::size_t i = 0; i < count; ++i) {
            FpMatrix e = f81.element(1 + testutil::rand_below(rng, 80));
            if (!e.is_invertible()) continue; // zero divisors absent; 0 only for value 0
            S.push_back(e);
            degs.push_back(static_cast<std::size_t>(minimal_polynomial(e).degree()));
        }
        if (S.empty()) continue;
        FieldDecision d = finite_field_decide(S);
        REQUIRE(d.is_field);
        std::size_t want = 1;
        for (std::size_t g : degs) want = std::lcm(want, g);
        REQUIRE(d.degree == want);
    }
}
