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

#ifndef DOQUOT_RCF_HPP
#define DOQUOT_RCF_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "doquot/fp_matrix.hpp"
#include "doquot/fp_poly.hpp"

namespace doquot {

/*
 * Rational canonical form, represented by the invariant-factor chain
 * f_1 | f_2 | ... | f_r (monic, degree >= 1, degrees summing to the
 * dimension).  Two matrices are similar iff their chains coincide.
 */
struct RcfForm {
    std::vector<FpPoly> invariant_factors;

    friend bool operator==(const RcfForm& a, const RcfForm& b) {
        return a.invariant_factors == b.invariant_factors;
    }
    friend bool operator!=(const RcfForm& a, const RcfForm& b) { return !(a == b); }

    /* Canonical order: degree sequences lexicographically, then the
       coefficient tuples in chain order. */
    friend bool operator<(const RcfForm& a, const RcfForm& b) {
        const auto& fa = a.invariant_factors;
        const auto& fb = b.invariant_factors;
        const std::size_t common = fa.size() < fb.size() ? fa.size() : fb.size();
        for (std::size_t i = 0; i < common; ++i) {
            if (fa[i].degree() != fb[i].degree()) return fa[i].degree() < fb[i].degree();
        }
        if (fa.size() != fb.size()) return fa.size() < fb.size();
        for (std::size_t i = 0; i < fa.size(); ++i) {
            if (fa[i] != fb[i]) return fa[i] < fb[i];
        }
        return false;
    }
};

/*
 * Invariant factors of A via the Smith normal form of xI - A over F_p[x]:
 * repeatedly move a minimal-degree entry to the pivot, clear its row and
 * column by euclidean division, and restore divisibility of the trailing
 * block before moving on.  The pivot degree strictly decreases on every
 * repeat, so the loop terminates.
 */
inline RcfForm rcf(const FpMatrix& A) {
    const std::size_t n = A.dim();
    const Fp field = A.field();

    std::vector<std::vector<FpPoly>> P(n, std::vector<FpPoly>(n, FpPoly::zero(field)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                P[i][j] = FpPoly(field, {field.neg(A.at(i, j)), 1});
            else
                P[i][j] = FpPoly::constant(field, field.neg(A.at(i, j)));
        }
    }

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t bi = n, bj = n;
            i64 best = -1;
            for (std::size_t i = k; i < n; ++i) {
                for (std::size_t j = k; j < n; ++j) {
                    if (P[i][j].is_zero()) continue;
                    if (best < 0 || P[i][j].degree() < best) {
                        best = P[i][j].degree();
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == n)
                throw std::logic_error("rcf: characteristic matrix lost rank");
            if (bi != k) std::swap(P[bi], P[k]);
            if (bj != k)
                for (std::size_t i = 0; i < n; ++i) std::swap(P[i][bj], P[i][k]);

            bool dirty = false;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (P[i][k].is_zero()) continue;
                const FpPoly q = P[i][k] / P[k][k];
                for (std::size_t j = k; j < n; ++j) P[i][j] -= q * P[k][j];
                if (!P[i][k].is_zero()) dirty = true;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (P[k][j].is_zero()) continue;
                const FpPoly q = P[k][j] / P[k][k];
                for (std::size_t i = k; i < n; ++i) P[i][j] -= q * P[i][k];
                if (!P[k][j].is_zero()) dirty = true;
            }
            if (dirty) continue;

            bool fixed = false;
            for (std::size_t i = k + 1; i < n && !fixed; ++i) {
                for (std::size_t j = k + 1; j < n && !fixed; ++j) {
                    if (!(P[i][j] % P[k][k]).is_zero()) {
                        for (std::size_t jj = k; jj < n; ++jj) P[k][jj] += P[i][jj];
                        fixed = true;
                    }
                }
            }
            if (!fixed) break;
        }
    }

    RcfForm out;
    i64 total = 0;
    for (std::size_t k = 0; k < n; ++k) {
        FpPoly f = P[k][k].monic();
        total += f.degree();
        if (f.degree() >= 1) out.invariant_factors.push_back(std::move(f));
    }
    if (total != static_cast<i64>(n))
        throw std::logic_error("rcf: invariant factor degrees do not sum to the dimension");
    for (std::size_t i = 0; i + 1 < out.invariant_factors.size(); ++i) {
        if (!(out.invariant_factors[i + 1] % out.invariant_factors[i]).is_zero())
            throw std::logic_error("rcf: invariant factors do not form a chain");
    }
    return out;
}

/* Similarity test through the invariant-factor chain. */
inline bool similar(const FpMatrix& a, const FpMatrix& b) {
    a.require_compatible(b);
    return rcf(a) == rcf(b);
}

} // namespace doquot

#endif
