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

#ifndef DOQUOT_EXT_FIELD_HPP
#define DOQUOT_EXT_FIELD_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "doquot/errors.hpp"
#include "doquot/fp.hpp"
#include "doquot/fp_matrix.hpp"
#include "doquot/fp_poly.hpp"

namespace doquot {

/* Element of an extension field: coordinates over the power basis
   1, x, ..., x^(n-1), always reduced and of full length n. */
struct ExtElem {
    std::vector<u64> c;

    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c == b.c; }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return a.c != b.c; }
    friend bool operator<(const ExtElem& a, const ExtElem& b) { return a.c < b.c; }
};

/*
 * The field F_(p^n) realized as F_p[x]/(modulus) with the power basis.  All
 * operations go through the context; elements are bare coordinate vectors.
 * The default modulus is the deterministic smallest irreducible, so two
 * contexts built from (p, n) alone are interchangeable.
 */
class ExtFieldCtx {
public:
    ExtFieldCtx(Fp field, std::size_t n)
        : fp_(field), n_(n), modulus_(find_irreducible(field, n)) {}

    ExtFieldCtx(Fp field, FpPoly modulus) : fp_(field), n_(0), modulus_(std::move(modulus)) {
        modulus_.field().require_same(fp_);
        if (modulus_.degree() < 1 || !modulus_.is_monic() || !is_irreducible(modulus_))
            throw std::invalid_argument("ExtFieldCtx: modulus must be monic irreducible");
        n_ = static_cast<std::size_t>(modulus_.degree());
    }

    const Fp& prime_field() const { return fp_; }
    u64 p() const { return fp_.modulus(); }
    std::size_t degree() const { return n_; }
    const FpPoly& modulus() const { return modulus_; }

    bool same_field(const ExtFieldCtx& o) const { return modulus_ == o.modulus_; }

    void require_same(const ExtFieldCtx& o) const {
        if (!same_field(o)) throw ModulusMismatchError();
    }

    /* Number of field elements; guards against overflow past 2^63. */
    u64 order() const {
        u64 v = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (v > (u64{1} << 62) / p())
                throw SizeGuardError("field order exceeds 2^63");
            v *= p();
        }
        return v;
    }

    ExtElem zero() const { return ExtElem{std::vector<u64>(n_, 0)}; }

    ExtElem one() const {
        ExtElem e = zero();
        e.c[0] = 1;
        return e;
    }

    ExtElem basis_element(std::size_t i) const {
        if (i >= n_) throw DimensionMismatchError();
        ExtElem e = zero();
        e.c[i] = 1;
        return e;
    }

    ExtElem element(std::vector<u64> coords) const {
        if (coords.size() != n_) throw DimensionMismatchError();
        for (u64& v : coords) v = fp_.reduce(v);
        return ExtElem{std::move(coords)};
    }

    ExtElem scalar(u64 v) const {
        ExtElem e = zero();
        e.c[0] = fp_.reduce(v);
        return e;
    }

    /* Element whose coordinates are the base-p digits of the value; gives a
       deterministic enumeration of the whole field as value runs over
       [0, p^n). */
    ExtElem from_value(u64 value) const {
        ExtElem e = zero();
        for (std::size_t i = 0; i < n_; ++i) {
            e.c[i] = value % p();
            value /= p();
        }
        if (value != 0) throw DimensionMismatchError();
        return e;
    }

    u64 to_value(const ExtElem& a) const {
        u64 v = 0;
        for (std::size_t i = n_; i-- > 0;) v = v * p() + a.c[i];
        return v;
    }

    ExtElem from_poly(const FpPoly& f) const {
        f.field().require_same(fp_);
        FpPoly r = f % modulus_;
        ExtElem e = zero();
        for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.c[i] = r.coeff(i);
        return e;
    }

    FpPoly to_poly(const ExtElem& a) const { return FpPoly(fp_, a.c); }

    bool is_zero(const ExtElem& a) const {
        for (u64 v : a.c)
            if (v != 0) return false;
        return true;
    }

    ExtElem add(const ExtElem& a, const ExtElem& b) const {
        check(a);
        check(b);
        ExtElem r = a;
        for (std::size_t i = 0; i < n_; ++i) r.c[i] = fp_.add(r.c[i], b.c[i]);
        return r;
    }

    ExtElem sub(const ExtElem& a, const ExtElem& b) const {
        check(a);
        check(b);
        ExtElem r = a;
        for (std::size_t i = 0; i < n_; ++i) r.c[i] = fp_.sub(r.c[i], b.c[i]);
        return r;
    }

    ExtElem neg(const ExtElem& a) const {
        check(a);
        ExtElem r = a;
        for (u64& v : r.c) v = fp_.neg(v);
        return r;
    }

    ExtElem scalar_mul(u64 s, const ExtElem& a) const {
        check(a);
        s = fp_.reduce(s);
        ExtElem r = a;
        for (u64& v : r.c) v = fp_.mul(v, s);
        return r;
    }

    ExtElem mul(const ExtElem& a, const ExtElem& b) const {
        check(a);
        check(b);
        return from_poly(to_poly(a) * to_poly(b));
    }

    ExtElem inv(const ExtElem& a) const {
        check(a);
        if (is_zero(a)) throw ZeroInversionError();
        PolyEgcd e = egcd(to_poly(a), modulus_);
        // gcd with an irreducible modulus is 1, so s is the inverse
        return from_poly(e.s);
    }

    ExtElem div(const ExtElem& a, const ExtElem& b) const { return mul(a, inv(b)); }

    ExtElem pow(const ExtElem& a, u64 e) const {
        check(a);
        ExtElem base = a, r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /* a^(p^k), taken one p-th power at a time; k reduces mod n. */
    ExtElem frobenius(const ExtElem& a, std::size_t k) const {
        check(a);
        ExtElem r = a;
        for (std::size_t i = 0; i < k % n_; ++i) r = pow(r, p());
        return r;
    }

    /* Degree of the smallest subfield containing a: least d | n with
       a^(p^d) = a. */
    std::size_t subfield_degree(const ExtElem& a) const {
        for (std::size_t d = 1; d <= n_; ++d) {
            if (n_ % d != 0) continue;
            if (frobenius(a, d) == a) return d;
        }
        return n_; // unreachable: d = n always fixes a
    }

    /* Matrix of multiplication by a on the power basis (columns are the
       images of the basis elements). */
    FpMatrix mult_matrix(const ExtElem& a) const {
        check(a);
        FpMatrix m(fp_, n_);
        ExtElem cur = a;
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i = 0; i < n_; ++i) m.set(i, j, cur.c[i]);
            if (j + 1 < n_) cur = mul(cur, basis_element(1));
        }
        return m;
    }

private:
    void check(const ExtElem& a) const {
        if (a.c.size() != n_) throw DimensionMismatchError();
    }

    Fp fp_;
    std::size_t n_;
    FpPoly modulus_;
};

} // namespace doquot

#endif
