/*
   Copyright 2026 the doquot authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DOQUOT_FIELD_RECOGNITION_HPP
#define DOQUOT_FIELD_RECOGNITION_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "doquot/errors.hpp"
#include "doquot/fp.hpp"
#include "doquot/fp_matrix.hpp"
#include "doquot/fp_poly.hpp"

namespace doquot {

/*
 * Outcome of deciding whether a matrix algebra is a finite field.  On
 * success the generator is a single matrix whose powers span the algebra
 * and whose minimal polynomial (irreducible, of degree `degree`) describes
 * the field.  On failure the refutation says why: some element has a
 * reducible minimal polynomial, some input falls outside the span of the
 * generator powers, or the generator construction ran out of candidates.
 */
struct FieldDecision {
    enum class Refutation { none, reducible_min_poly, outside_span, no_generator };

    bool is_field = false;
    std::size_t degree = 0;
    std::optional<FpMatrix> generator;
    std::optional<FpPoly> min_poly;

    Refutation refutation = Refutation::none;
    std::optional<FpMatrix> reducible_witness;
    std::optional<FpPoly> witness_min_poly;
    std::size_t outside_index = 0;

    static FieldDecision field(std::size_t degree, FpMatrix gen, FpPoly mu) {
        FieldDecision d;
        d.is_field = true;
        d.degree = degree;
        d.generator = std::move(gen);
        d.min_poly = std::move(mu);
        return d;
    }

    static FieldDecision reducible(FpMatrix witness, FpPoly mu) {
        FieldDecision d;
        d.refutation = Refutation::reducible_min_poly;
        d.reducible_witness = std::move(witness);
        d.witness_min_poly = std::move(mu);
        return d;
    }

    static FieldDecision outside_span(std::size_t index) {
        FieldDecision d;
        d.refutation = Refutation::outside_span;
        d.outside_index = index;
        return d;
    }

    static FieldDecision no_generator() {
        FieldDecision d;
        d.refutation = Refutation::no_generator;
        return d;
    }
};

/*
 * Single generator of the algebra spanned by two invertible, commuting
 * field-like matrices.  Writing m and k for the minimal polynomial degrees
 * of a and b: if one degree divides the other the larger element wins, if
 * they are coprime the product works, and otherwise a generator is stitched
 * together prime by prime from traces of powers: for each prime q the
 * element whose q-part is largest contributes a trace image of some power
 * whose minimal polynomial has exactly that prime-power degree.  When both
 * inputs generate fields the construction provably succeeds; on junk input
 * the candidate loop can run dry, reported as nothing (the caller's span
 * checks turn that into a refutation).
 */
inline std::optional<FpMatrix> compute_generator(const FpMatrix& a, const FpMatrix& b) {
    a.require_compatible(b);
    if (!a.is_invertible() || !b.is_invertible()) throw NotInvertibleError();

    const std::size_t m = static_cast<std::size_t>(minimal_polynomial(a).degree());
    const std::size_t k = static_cast<std::size_t>(minimal_polynomial(b).degree());
    const std::size_t d = std::gcd(m, k);
    if (d == k) return a;
    if (d == m) return b;
    if (d == 1) return a * b;

    const IntFactorization fm = factor_small_integer(m);
    const IntFactorization fk = factor_small_integer(k);
    auto exponent_of = [](const IntFactorization& f, u64 q) -> unsigned {
        for (const auto& [prime, e] : f.factors)
            if (prime == q) return e;
        return 0;
    };
    std::vector<u64> primes;
    for (const auto& [q, e] : fm.factors) primes.push_back(q);
    for (const auto& [q, e] : fk.factors)
        if (exponent_of(fm, q) == 0) primes.push_back(q);

    std::optional<FpMatrix> result;
    for (const u64 q : primes) {
        const unsigned em = exponent_of(fm, q);
        const unsigned ek = exponent_of(fk, q);
        const bool from_a = em >= ek;
        const std::size_t top = from_a ? m : k;
        u64 target = 1;
        for (unsigned i = 0; i < (from_a ? em : ek); ++i) target *= q;

        const FpMatrix& base = from_a ? a : b;
        std::optional<FpMatrix> part;
        FpMatrix pw = base;
        for (std::size_t j = 1; j < top; ++j) {
            FpMatrix c = relative_trace_matrix(pw, top, static_cast<std::size_t>(target));
            if (minimal_polynomial(c).degree() == static_cast<i64>(target)) {
                part = std::move(c);
                break;
            }
            pw = pw * base;
        }
        if (!part) return std::nullopt;
        result = result ? *result * *part : *part;
    }
    return result;
}

/*
 * Decide whether the unital algebra generated by the given invertible
 * matrices is a finite field, and if so exhibit a generator.  The inputs
 * are folded pairwise through compute_generator; the fold result must have
 * an irreducible minimal polynomial and every input must lie in the span of
 * its first n powers.
 */
inline FieldDecision finite_field_decide(const std::vector<FpMatrix>& S) {
    if (S.empty()) throw EmptyInputError();
    const std::size_t n = S[0].dim();
    for (const FpMatrix& A : S) {
        S[0].require_compatible(A);
        if (!A.is_invertible()) throw NotInvertibleError();
    }

    FpMatrix a = S[0];
    for (std::size_t i = 1; i < S.size(); ++i) {
        std::optional<FpMatrix> g = compute_generator(a, S[i]);
        if (!g) return FieldDecision::no_generator();
        a = *std::move(g);
    }

    FpPoly mu = minimal_polynomial(a);
    if (!is_irreducible(mu)) return FieldDecision::reducible(std::move(a), std::move(mu));

    const std::vector<FpMatrix> basis = power_basis(a, n);
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (!span_membership(S[i], basis)) return FieldDecision::outside_span(i);
    }
    const std::size_t degree = static_cast<std::size_t>(mu.degree());
    return FieldDecision::field(degree, std::move(a), std::move(mu));
}

} // namespace doquot

#endif
