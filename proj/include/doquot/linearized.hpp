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

#ifndef DOQUOT_LINEARIZED_HPP
#define DOQUOT_LINEARIZED_HPP

#include <cstddef>
#include <vector>

#include "doquot/errors.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/fp_matrix.hpp"

namespace doquot {

/*
 * Linearized polynomial sum_i u[i] * x^(p^i) over F_(p^n), reduced modulo
 * x^(p^n) - x so there are always exactly n coefficients.  These are exactly
 * the F_p-linear maps of the field.
 */
struct LinearizedPoly {
    std::vector<ExtElem> u;

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.u == b.u;
    }
    friend bool operator!=(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.u != b.u;
    }
};

inline LinearizedPoly lin_zero(const ExtFieldCtx& k) {
    return LinearizedPoly{std::vector<ExtElem>(k.degree(), k.zero())};
}

inline LinearizedPoly lin_identity(const ExtFieldCtx& k) {
    LinearizedPoly l = lin_zero(k);
    l.u[0] = k.one();
    return l;
}

/* coeff * x^(p^e); the exponent index reduces mod n. */
inline LinearizedPoly lin_monomial(const ExtFieldCtx& k, std::size_t e, const ExtElem& coeff) {
    LinearizedPoly l = lin_zero(k);
    l.u[e % k.degree()] = coeff;
    return l;
}

inline void lin_check(const ExtFieldCtx& k, const LinearizedPoly& l) {
    if (l.u.size() != k.degree()) throw DimensionMismatchError();
}

inline LinearizedPoly lin_add(const ExtFieldCtx& k, const LinearizedPoly& a,
                              const LinearizedPoly& b) {
    lin_check(k, a);
    lin_check(k, b);
    LinearizedPoly r = a;
    for (std::size_t i = 0; i < r.u.size(); ++i) r.u[i] = k.add(r.u[i], b.u[i]);
    return r;
}

inline LinearizedPoly lin_sub(const ExtFieldCtx& k, const LinearizedPoly& a,
                              const LinearizedPoly& b) {
    lin_check(k, a);
    lin_check(k, b);
    LinearizedPoly r = a;
    for (std::size_t i = 0; i < r.u.size(); ++i) r.u[i] = k.sub(r.u[i], b.u[i]);
    return r;
}

inline bool lin_is_zero(const ExtFieldCtx& k, const LinearizedPoly& a) {
    lin_check(k, a);
    for (const ExtElem& c : a.u)
        if (!k.is_zero(c)) return false;
    return true;
}

inline ExtElem lin_eval(const ExtFieldCtx& k, const LinearizedPoly& l, const ExtElem& x) {
    lin_check(k, l);
    ExtElem acc = k.zero();
    ExtElem fr = x; // frobenius(x, i), advanced one p-th power per term
    for (std::size_t i = 0; i < l.u.size(); ++i) {
        if (!k.is_zero(l.u[i])) acc = k.add(acc, k.mul(l.u[i], fr));
        if (i + 1 < l.u.size()) fr = k.pow(fr, k.p());
    }
    return acc;
}

/*
 * Composition a(b(x)) as a linearized polynomial.  Expanding
 * sum_i u_i (sum_j v_j x^(p^j))^(p^i) and reducing exponents mod n gives
 * coefficient s = sum over i + j = s (mod n) of u_i * v_j^(p^i).
 */
inline LinearizedPoly symbolic_product(const ExtFieldCtx& k, const LinearizedPoly& a,
                                       const LinearizedPoly& b) {
    lin_check(k, a);
    lin_check(k, b);
    const std::size_t n = k.degree();
    LinearizedPoly r = lin_zero(k);
    for (std::size_t i = 0; i < n; ++i) {
        if (k.is_zero(a.u[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (k.is_zero(b.u[j])) continue;
            std::size_t s = (i + j) % n;
            r.u[s] = k.add(r.u[s], k.mul(a.u[i], k.frobenius(b.u[j], i)));
        }
    }
    return r;
}

/* Matrix of the F_p-linear map on the power basis; column j is the image of
   the basis element x^j. */
inline FpMatrix matrix_of_linearized(const ExtFieldCtx& k, const LinearizedPoly& l) {
    lin_check(k, l);
    const std::size_t n = k.degree();
    FpMatrix m(k.prime_field(), n);
    for (std::size_t j = 0; j < n; ++j) {
        ExtElem img = lin_eval(k, l, k.basis_element(j));
        for (std::size_t i = 0; i < n; ++i) m.set(i, j, img.c[i]);
    }
    return m;
}

inline bool lin_is_permutation(const ExtFieldCtx& k, const LinearizedPoly& l) {
    return matrix_of_linearized(k, l).is_invertible();
}

/* Uniform random linearized polynomial; with permutation = true, rejection
   samples until the induced linear map is invertible. */
template <typename Rng>
LinearizedPoly random_linearized(const ExtFieldCtx& k, Rng& rng, bool permutation = false) {
    const std::size_t n = k.degree();
    for (;;) {
        LinearizedPoly l = lin_zero(k);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<u64> coords(n);
            for (u64& c : coords) c = rng() % k.p();
            l.u[i] = k.element(std::move(coords));
        }
        if (!permutation || lin_is_permutation(k, l)) return l;
    }
}

template <typename Rng>
LinearizedPoly random_linearized_permutation(const ExtFieldCtx& k, Rng& rng) {
    return random_linearized(k, rng, true);
}

} // namespace doquot

#endif
