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

#ifndef DOQUOT_X2_HPP
#define DOQUOT_X2_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "doquot/do_poly.hpp"
#include "doquot/errors.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/field_recognition.hpp"
#include "doquot/fp_matrix.hpp"

namespace doquot {

/*
 * Outcome of the x^2-equivalence decision.  A true verdict carries the
 * field generator found inside the normalized spread slice; a false verdict
 * names the first stage that refuted and a witness when one exists.
 */
struct X2Certificate {
    enum class Stage {
        ok,               // slice algebra is a field of full degree
        m1_singular,      // the unit-direction derivative is not invertible
        algebra_not_field, // the slice generates zero divisors or worse
        wrong_degree      // a field, but smaller than the whole field
    };

    bool verdict = false;
    Stage stage = Stage::algebra_not_field;
    std::size_t degree = 0;
    std::optional<FpMatrix> generator;
    std::optional<FpPoly> min_poly;
    std::optional<FpMatrix> witness;
};

/*
 * Decides whether g is linear-equivalent to x^2.  The criterion: the
 * unit-direction spread matrix Y must be invertible and the algebra
 * generated by the slice D_g * Y^(-1) must be a field with p^n elements.
 * Cost is polynomial — n slice generators, each pushed through the
 * field-recognition fold.
 */
inline X2Certificate decide_x2(const ExtFieldCtx& k, const DOPoly& g) {
    if (k.p() == 2) throw EvenCharacteristicError();
    const std::size_t n = k.degree();

    X2Certificate cert;
    SpreadBasis sb = spread_basis(k, g);
    FpMatrix y = sb.combine(k.one());
    auto yinv = y.try_inverse();
    if (!yinv) {
        cert.stage = X2Certificate::Stage::m1_singular;
        cert.witness = std::move(y);
        return cert;
    }

    // the slice is spanned by the n normalized basis matrices; the identity
    // is among them (unit direction), so dropping zero matrices is safe
    std::vector<FpMatrix> gens;
    gens.reserve(n);
    for (const FpMatrix& m : sb.mats) {
        FpMatrix slice = m * *yinv;
        if (slice == FpMatrix::zero(k.prime_field(), n)) continue;
        if (!slice.is_invertible()) {
            // a nonzero singular member is already a zero divisor
            cert.stage = X2Certificate::Stage::algebra_not_field;
            cert.witness = std::move(slice);
            return cert;
        }
        gens.push_back(std::move(slice));
    }

    FieldDecision d = finite_field_decide(gens);
    if (!d.is_field) {
        cert.stage = X2Certificate::Stage::algebra_not_field;
        if (d.reducible_witness) cert.witness = d.reducible_witness;
        return cert;
    }
    cert.degree = d.degree;
    cert.generator = d.generator;
    cert.min_poly = d.min_poly;
    if (d.degree != n) {
        cert.stage = X2Certificate::Stage::wrong_degree;
        return cert;
    }
    cert.verdict = true;
    cert.stage = X2Certificate::Stage::ok;
    return cert;
}

} // namespace doquot

#endif
