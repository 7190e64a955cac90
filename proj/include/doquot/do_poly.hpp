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

#ifndef DOQUOT_DO_POLY_HPP
#define DOQUOT_DO_POLY_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "doquot/errors.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/fp_matrix.hpp"
#include "doquot/linearized.hpp"

namespace doquot {

/*
 * Polynomial over F_(p^n) whose monomials all have exponents p^i + p^j:
 * sum over keys (i, j) with i <= j < n of u_(i,j) * x^(p^i + p^j).
 * Absent keys mean zero; stored coefficients are nonzero.
 */
struct DOPoly {
    std::map<std::pair<std::size_t, std::size_t>, ExtElem> terms;

    friend bool operator==(const DOPoly& a, const DOPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const DOPoly& a, const DOPoly& b) { return a.terms != b.terms; }
};

inline DOPoly do_zero(const ExtFieldCtx&) { return DOPoly{}; }

/* Accumulate u * x^(p^i + p^j); indices reduce mod n and swap into i <= j. */
inline void do_add_term(const ExtFieldCtx& k, DOPoly& g, std::size_t i, std::size_t j,
                        const ExtElem& u) {
    if (u.c.size() != k.degree()) throw DimensionMismatchError();
    if (k.is_zero(u)) return;
    i %= k.degree();
    j %= k.degree();
    if (i > j) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto it = g.terms.find(key);
    if (it == g.terms.end()) {
        g.terms.emplace(key, u);
    } else {
        it->second = k.add(it->second, u);
        if (k.is_zero(it->second)) g.terms.erase(it);
    }
}

inline DOPoly do_monomial(const ExtFieldCtx& k, std::size_t i, std::size_t j, const ExtElem& u) {
    DOPoly g;
    do_add_term(k, g, i, j, u);
    return g;
}

/* g(x) = x^2, the square monomial x^(p^0 + p^0). */
inline DOPoly do_x_squared(const ExtFieldCtx& k) { return do_monomial(k, 0, 0, k.one()); }

/* g(x) = x^(p^k + 1); for k = 0 mod n this is x^2. */
inline DOPoly do_power_monomial(const ExtFieldCtx& k, std::size_t e) {
    return do_monomial(k, 0, e, k.one());
}

inline ExtElem do_eval(const ExtFieldCtx& k, const DOPoly& g, const ExtElem& x) {
    const std::size_t n = k.degree();
    // precompute the Frobenius orbit of x
    std::vector<ExtElem> fr;
    fr.reserve(n);
    fr.push_back(x);
    for (std::size_t i = 1; i < n; ++i) fr.push_back(k.pow(fr.back(), k.p()));
    ExtElem acc = k.zero();
    for (const auto& [key, u] : g.terms)
        acc = k.add(acc, k.mul(u, k.mul(fr[key.first], fr[key.second])));
    return acc;
}

/*
 * The direction-alpha derivative g(x + alpha) - g(x) - g(alpha), which is a
 * linearized polynomial: the term u * x^(p^i + p^j) contributes
 * u * alpha^(p^j) at index i and u * alpha^(p^i) at index j (both land on the
 * same index when i = j, doubling the coefficient).
 */
inline LinearizedPoly linearized_derivative(const ExtFieldCtx& k, const DOPoly& g,
                                            const ExtElem& alpha) {
    LinearizedPoly d = lin_zero(k);
    for (const auto& [key, u] : g.terms) {
        auto [i, j] = key;
        d.u[i] = k.add(d.u[i], k.mul(u, k.frobenius(alpha, j)));
        d.u[j] = k.add(d.u[j], k.mul(u, k.frobenius(alpha, i)));
    }
    return d;
}

/* Matrix of the direction-alpha derivative on the power basis. */
inline FpMatrix derivative_matrix(const ExtFieldCtx& k, const DOPoly& g, const ExtElem& alpha) {
    return matrix_of_linearized(k, linearized_derivative(k, g, alpha));
}

/*
 * The derivative matrices along the power basis directions.  The map
 * alpha -> derivative matrix is F_p-linear, so these n matrices span the
 * whole spread set; combine() reconstructs the matrix for any direction.
 */
struct SpreadBasis {
    std::vector<ExtElem> directions;
    std::vector<FpMatrix> mats;

    FpMatrix combine(const ExtElem& alpha) const {
        if (mats.empty() || alpha.c.size() != mats.size()) throw DimensionMismatchError();
        FpMatrix acc = FpMatrix::zero(mats[0].field(), mats[0].dim());
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (alpha.c[i] != 0) acc += mats[i].scaled(alpha.c[i]);
        return acc;
    }
};

inline SpreadBasis spread_basis(const ExtFieldCtx& k, const DOPoly& g) {
    SpreadBasis sb;
    for (std::size_t i = 0; i < k.degree(); ++i) {
        sb.directions.push_back(k.basis_element(i));
        sb.mats.push_back(derivative_matrix(k, g, sb.directions.back()));
    }
    return sb;
}

/* One representative per punctured line F_p* . alpha: the elements whose
   lowest-index nonzero coordinate equals 1.  There are (p^n - 1)/(p - 1). */
inline std::vector<ExtElem> projective_representatives(const ExtFieldCtx& k) {
    const std::size_t n = k.degree();
    std::vector<ExtElem> reps;
    // choose the position of the leading 1, then run over the higher digits
    for (std::size_t lead = 0; lead < n; ++lead) {
        u64 span = 1;
        for (std::size_t i = lead + 1; i < n; ++i) {
            if (span > (u64{1} << 62) / k.p()) throw SizeGuardError("projective enumeration too large");
            span *= k.p();
        }
        for (u64 v = 0; v < span; ++v) {
            ExtElem e = k.zero();
            e.c[lead] = 1;
            u64 rest = v;
            for (std::size_t i = lead + 1; i < n; ++i) {
                e.c[i] = rest % k.p();
                rest /= k.p();
            }
            reps.push_back(std::move(e));
        }
    }
    return reps;
}

/*
 * Planarity: every nonzero-direction derivative must be a bijection.  The
 * derivative scales linearly along each line F_p* . alpha, and scaling by a
 * unit preserves invertibility, so one check per projective line suffices.
 */
inline bool is_planar(const ExtFieldCtx& k, const DOPoly& g) {
    if (k.p() == 2) throw EvenCharacteristicError();
    SpreadBasis sb = spread_basis(k, g);
    for (const ExtElem& alpha : projective_representatives(k))
        if (!sb.combine(alpha).is_invertible()) return false;
    return true;
}

/* The symmetric product a * b = (derivative of g at a)(b); bilinear, and
   commutative because the derivative construction is symmetric in a and b. */
inline ExtElem presemifield_mult(const ExtFieldCtx& k, const DOPoly& g, const ExtElem& a,
                                 const ExtElem& b) {
    return lin_eval(k, linearized_derivative(k, g, a), b);
}

/*
 * The transformed polynomial outer(g(inner(x))) for linearized permutations
 * inner and outer, collected back into normalized DO form.  Substituting
 * inner = sum_a v_a x^(p^a) into the term u * x^(p^i) * x^(p^j) gives the
 * double sum of u * v_a^(p^i) * v_b^(p^j) * x^(p^(a+i) + p^(b+j)); applying
 * outer = sum_c w_c x^(p^c) afterwards shifts each exponent pair by c and
 * scales the coefficient through the c-th Frobenius.
 */
inline DOPoly apply_linear_equivalence(const ExtFieldCtx& k, const DOPoly& g,
                                       const LinearizedPoly& inner,
                                       const LinearizedPoly& outer) {
    if (!lin_is_permutation(k, inner) || !lin_is_permutation(k, outer))
        throw NotAPermutationError();
    const std::size_t n = k.degree();

    DOPoly substituted;
    for (const auto& [key, u] : g.terms) {
        auto [i, j] = key;
        for (std::size_t a = 0; a < n; ++a) {
            if (k.is_zero(inner.u[a])) continue;
            ExtElem ua = k.mul(u, k.frobenius(inner.u[a], i));
            for (std::size_t b = 0; b < n; ++b) {
                if (k.is_zero(inner.u[b])) continue;
                do_add_term(k, substituted, a + i, b + j,
                            k.mul(ua, k.frobenius(inner.u[b], j)));
            }
        }
    }

    DOPoly result;
    for (std::size_t c = 0; c < n; ++c) {
        if (k.is_zero(outer.u[c])) continue;
        for (const auto& [key, m] : substituted.terms)
            do_add_term(k, result, key.first + c, key.second + c,
                        k.mul(outer.u[c], k.frobenius(m, c)));
    }
    return result;
}

} // namespace doquot

#endif
