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

#ifndef DOQUOT_ORACLE_HPP
#define DOQUOT_ORACLE_HPP

/* Brute-force reference implementations used to cross-validate the fast
   decision procedures at small scale.  Everything here enumerates; nothing
   here shares logic with the procedures it checks. */

#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "doquot/do_poly.hpp"
#include "doquot/errors.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/field_recognition.hpp"
#include "doquot/fp_matrix.hpp"

namespace doquot {
namespace oracle {

/* Default cap on exhaustive element enumerations (number of elements). */
inline constexpr u64 default_enumeration_limit = 2'000'000;

namespace detail {

/* Incremental row-echelon span of vectors over F_p; insert() reduces the
   candidate against the stored rows and keeps it only if independent. */
class EchelonSpan {
public:
    EchelonSpan(Fp field, std::size_t width) : fp_(field), width_(width) {}

    bool insert(std::vector<u64> v) {
        if (v.size() != width_) throw DimensionMismatchError();
        reduce(v);
        std::size_t lead = width_;
        for (std::size_t i = 0; i < width_; ++i)
            if (v[i] != 0) {
                lead = i;
                break;
            }
        if (lead == width_) return false;
        u64 scale = fp_.inv(v[lead]);
        for (u64& x : v) x = fp_.mul(x, scale);
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
    }

    bool contains(std::vector<u64> v) const {
        if (v.size() != width_) throw DimensionMismatchError();
        reduce(v);
        for (u64 x : v)
            if (x != 0) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    void reduce(std::vector<u64>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            u64 c = v[pivots_[r]];
            if (c == 0) continue;
            for (std::size_t i = pivots_[r]; i < width_; ++i)
                v[i] = fp_.sub(v[i], fp_.mul(c, rows_[r][i]));
        }
    }

    Fp fp_;
    std::size_t width_;
    std::vector<std::vector<u64>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace detail

/* A vector-space basis of the unital algebra generated by a set of
   matrices, found by multiplicative closure. */
struct AlgebraBasis {
    std::vector<FpMatrix> basis;

    std::size_t dimension() const { return basis.size(); }
};

/*
 * Closure computation: seed the span with I and the generators, then keep
 * right-multiplying new basis members by each generator until nothing
 * independent appears.  Every product of generators is reachable this way,
 * so the result spans the full generated algebra.
 */
inline AlgebraBasis algebra_closure_basis(const std::vector<FpMatrix>& gens) {
    if (gens.empty()) throw EmptyInputError();
    for (const FpMatrix& g : gens) gens.front().require_compatible(g);

    const Fp fp = gens.front().field();
    const std::size_t n = gens.front().dim();
    detail::EchelonSpan span(fp, n * n);

    AlgebraBasis out;
    std::deque<FpMatrix> pending;
    auto try_add = [&](const FpMatrix& m) {
        if (span.insert(m.entries())) {
            out.basis.push_back(m);
            pending.push_back(m);
        }
    };

    try_add(FpMatrix::identity(fp, n));
    for (const FpMatrix& g : gens) try_add(g);
    while (!pending.empty()) {
        FpMatrix b = pending.front();
        pending.pop_front();
        for (const FpMatrix& g : gens) try_add(b * g);
    }
    return out;
}

/*
 * Decides by enumeration whether the generated algebra is a field.  The one
 * shortcut is exact, not heuristic: a field of dimension d inside the n-by-n
 * matrices turns F_p^n into a vector space over itself, so d divides n and a
 * closure dimension above n refutes immediately.  Otherwise every element of
 * the algebra is materialized and checked.
 */
inline FieldDecision brute_force_field_check(const std::vector<FpMatrix>& gens,
                                             u64 limit = default_enumeration_limit) {
    AlgebraBasis closure = algebra_closure_basis(gens);
    const Fp fp = gens.front().field();
    const std::size_t n = gens.front().dim();
    const std::size_t dim = closure.dimension();
    if (dim > n) return FieldDecision::no_generator();

    u64 count = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (count > limit / fp.modulus()) throw SizeGuardError("algebra enumeration too large");
        count *= fp.modulus();
    }

    // the span must be closed under products and commutative; both are
    // bilinear, so checking basis pairs settles the whole algebra
    detail::EchelonSpan span(fp, n * n);
    for (const FpMatrix& b : closure.basis) span.insert(b.entries());
    for (const FpMatrix& a : closure.basis)
        for (const FpMatrix& b : closure.basis) {
            FpMatrix ab = a * b;
            if (!span.contains(ab.entries()))
                throw std::logic_error("closure basis not multiplicatively closed");
            if (ab != b * a) return FieldDecision::no_generator();
        }

    auto element_at = [&](u64 v) {
        FpMatrix acc = FpMatrix::zero(fp, n);
        for (std::size_t i = 0; i < dim; ++i) {
            u64 digit = v % fp.modulus();
            v /= fp.modulus();
            if (digit != 0) acc += closure.basis[i].scaled(digit);
        }
        return acc;
    };

    // a commutative unital algebra is a field iff it has no nonzero
    // singular element; a singular witness has x dividing its minimal
    // polynomial, which is therefore reducible
    for (u64 v = 1; v < count; ++v) {
        FpMatrix e = element_at(v);
        if (!e.is_invertible()) return FieldDecision::reducible(e, minimal_polynomial(e));
    }

    // field confirmed; report a single generator found by search
    for (u64 v = 1; v < count; ++v) {
        FpMatrix e = element_at(v);
        FpPoly mu = minimal_polynomial(e);
        if (static_cast<std::size_t>(mu.degree()) == dim && is_irreducible(mu))
            return FieldDecision::field(dim, std::move(e), std::move(mu));
    }
    throw std::logic_error("field of dimension d without degree-d element");
}

/*
 * Planarity by full evaluation: for every nonzero direction the difference
 * map must be a bijection.  Cross-checked against the counting criterion
 * (the evaluation map of a planar polynomial hits g(0) once and every other
 * attained value exactly twice); the two verdicts must agree.
 */
inline bool exhaustive_planarity(const ExtFieldCtx& k, const DOPoly& g,
                                 u64 limit = default_enumeration_limit) {
    if (k.p() == 2) throw EvenCharacteristicError();
    const u64 q = k.order();
    if (q > limit) throw SizeGuardError("field enumeration too large");

    std::vector<ExtElem> elems, values;
    elems.reserve(q);
    values.reserve(q);
    for (u64 v = 0; v < q; ++v) {
        elems.push_back(k.from_value(v));
        values.push_back(do_eval(k, g, elems.back()));
    }

    bool planar = true;
    for (u64 a = 1; a < q && planar; ++a) {
        std::vector<bool> seen(q, false);
        for (u64 y = 0; y < q; ++y) {
            u64 shifted = k.to_value(k.add(elems[y], elems[a]));
            ExtElem delta = k.sub(k.sub(values[shifted], values[y]), values[a]);
            u64 img = k.to_value(delta);
            if (seen[img]) {
                planar = false;
                break;
            }
            seen[img] = true;
        }
    }

    // counting criterion: g(0) attained once, every other value 0 or 2 times
    std::vector<unsigned> hits(q, 0);
    for (u64 v = 0; v < q; ++v) ++hits[k.to_value(values[v])];
    bool two_to_one = hits[k.to_value(values[0])] == 1;
    for (u64 v = 0; v < q && two_to_one; ++v) {
        if (v == k.to_value(values[0])) continue;
        if (hits[v] != 0 && hits[v] != 2) two_to_one = false;
    }
    if (planar != two_to_one)
        throw std::logic_error("planarity criteria disagree");
    return planar;
}

/*
 * The quotient set by its definition: all products M_b * M_a^(-1) over every
 * pair of directions with M_a invertible — no projective shortcut, no scalar
 * closure, just the raw double loop.
 */
inline std::set<FpMatrix> exhaustive_quot(const ExtFieldCtx& k, const DOPoly& g,
                                          u64 limit = default_enumeration_limit) {
    const u64 q = k.order();
    if (q > limit) throw SizeGuardError("field enumeration too large");

    std::vector<FpMatrix> mats;
    mats.reserve(q);
    for (u64 v = 0; v < q; ++v) mats.push_back(derivative_matrix(k, g, k.from_value(v)));

    std::set<FpMatrix> out;
    for (u64 a = 0; a < q; ++a) {
        if (!mats[a].is_invertible()) continue;
        FpMatrix inv = mats[a].inverse();
        for (u64 b = 0; b < q; ++b) out.insert(mats[b] * inv);
    }
    return out;
}

} // namespace oracle
} // namespace doquot

#endif
