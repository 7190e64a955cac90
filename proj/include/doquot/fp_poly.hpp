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

#ifndef DOQUOT_FP_POLY_HPP
#define DOQUOT_FP_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "doquot/errors.hpp"
#include "doquot/fp.hpp"

namespace doquot {

/*
 * Dense univariate polynomial over F_p, coefficients stored constant term
 * first and kept normalized (no trailing zeros).  The zero polynomial has an
 * empty coefficient vector and degree -1.
 */
class FpPoly {
public:
    explicit FpPoly(Fp field) : field_(field) {}

    FpPoly(Fp field, std::vector<u64> coeffs) : field_(field), c_(std::move(coeffs)) {
        for (u64& v : c_) v = field_.reduce(v);
        trim();
    }

    static FpPoly zero(Fp field) { return FpPoly(field); }
    static FpPoly one(Fp field) { return FpPoly(field, {1}); }
    static FpPoly x(Fp field) { return FpPoly(field, {0, 1}); }

    static FpPoly monomial(Fp field, std::size_t deg, u64 coeff = 1) {
        std::vector<u64> c(deg + 1, 0);
        c[deg] = coeff;
        return FpPoly(field, std::move(c));
    }

    static FpPoly constant(Fp field, u64 v) { return FpPoly(field, {v}); }

    const Fp& field() const { return field_; }
    const std::vector<u64>& coeffs() const { return c_; }

    i64 degree() const { return static_cast<i64>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    u64 leading() const {
        if (c_.empty()) throw ZeroPolynomialError();
        return c_.back();
    }

    FpPoly& operator+=(const FpPoly& o) {
        field_.require_same(o.field_);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }

    FpPoly& operator-=(const FpPoly& o) {
        field_.require_same(o.field_);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }

    friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
    friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }

    friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
        a.field_.require_same(b.field_);
        if (a.is_zero() || b.is_zero()) return FpPoly(a.field_);
        const Fp& f = a.field_;
        std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
        }
        return FpPoly(f, std::move(r));
    }

    FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }

    FpPoly scaled(u64 s) const {
        FpPoly r(*this);
        s = field_.reduce(s);
        for (u64& v : r.c_) v = field_.mul(v, s);
        r.trim();
        return r;
    }

    FpPoly negated() const {
        FpPoly r(*this);
        for (u64& v : r.c_) v = field_.neg(v);
        return r;
    }

    /* Scale so the leading coefficient becomes 1. */
    FpPoly monic() const {
        if (is_zero()) throw ZeroPolynomialError();
        return scaled(field_.inv(c_.back()));
    }

    /* Euclidean division: returns (quotient, remainder) with deg r < deg b. */
    friend std::pair<FpPoly, FpPoly> divrem(const FpPoly& a, const FpPoly& b) {
        a.field_.require_same(b.field_);
        if (b.is_zero()) throw DivisionByZeroError();
        const Fp& f = a.field_;
        FpPoly q(f), r(a);
        const u64 lead_inv = f.inv(b.c_.back());
        const i64 db = b.degree();
        if (r.degree() >= db) q.c_.assign(static_cast<std::size_t>(r.degree() - db) + 1, 0);
        while (r.degree() >= db) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
            const u64 s = f.mul(r.c_.back(), lead_inv);
            q.c_[shift] = s;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                r.c_[shift + i] = f.sub(r.c_[shift + i], f.mul(s, b.c_[i]));
            r.trim();
        }
        q.trim();
        return {std::move(q), std::move(r)};
    }

    friend FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divrem(a, b).first; }
    friend FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divrem(a, b).second; }

    u64 eval(u64 x0) const {
        x0 = field_.reduce(x0);
        u64 acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x0), c_[i]);
        return acc;
    }

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

    /* Canonical order: modulus, then degree, then coefficients (constant first). */
    friend bool operator<(const FpPoly& a, const FpPoly& b) {
        if (a.field_.modulus() != b.field_.modulus())
            return a.field_.modulus() < b.field_.modulus();
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Fp field_;
    std::vector<u64> c_;
};

inline FpPoly gcd(FpPoly a, FpPoly b) {
    a.field().require_same(b.field());
    while (!b.is_zero()) {
        FpPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

inline FpPoly lcm(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

struct PolyEgcd {
    FpPoly g, s, t; // g = gcd(a, b) monic, g == s*a + t*b
};

inline PolyEgcd egcd(const FpPoly& a, const FpPoly& b) {
    a.field().require_same(b.field());
    const Fp f = a.field();
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = FpPoly::one(f), s1 = FpPoly::zero(f);
    FpPoly t0 = FpPoly::zero(f), t1 = FpPoly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FpPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const u64 scale = f.inv(r0.leading());
    return {r0.scaled(scale), s0.scaled(scale), t0.scaled(scale)};
}

inline FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f) { return (a * b) % f; }

inline FpPoly pow_mod(FpPoly base, u64 e, const FpPoly& f) {
    FpPoly r = FpPoly::one(base.field()) % f;
    base = base % f;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, f);
        base = mulmod(base, base, f);
        e >>= 1;
    }
    return r;
}

/*
 * Deterministic irreducibility test for f over F_p, degree d: f is
 * irreducible iff x^(p^d) = x (mod f) and gcd(x^(p^(d/q)) - x, f) = 1 for
 * every prime q dividing d.  The Frobenius chain x^(p^i) mod f is built by
 * repeated exponentiation by p, so no exponent ever exceeds one word.
 */
inline bool is_irreducible(const FpPoly& f) {
    if (f.is_zero()) throw ZeroPolynomialError();
    const i64 d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const Fp field = f.field();
    const FpPoly fm = f.monic();
    const FpPoly x = FpPoly::x(field);

    std::vector<FpPoly> chain; // chain[i] = x^(p^i) mod fm
    chain.reserve(static_cast<std::size_t>(d) + 1);
    chain.push_back(x % fm);
    for (i64 i = 1; i <= d; ++i) chain.push_back(pow_mod(chain.back(), field.modulus(), fm));

    if (chain[static_cast<std::size_t>(d)] != chain[0]) return false;
    for (const auto& [q, e] : factor_small_integer(static_cast<u64>(d)).factors) {
        (void)e;
        const FpPoly diff = chain[static_cast<std::size_t>(d) / q] - chain[0];
        if (gcd(diff, fm).degree() != 0) return false;
    }
    return true;
}

/*
 * Smallest monic irreducible polynomial of degree n over F_p.  Candidates
 * x^n + c_(n-1) x^(n-1) + ... + c_0 are ordered by the integer value
 * c_0 + c_1 p + ... + c_(n-1) p^(n-1), i.e. the constant coefficient is the
 * least significant digit.  First hits: x for (p,1), x^2+1 for (3,2),
 * x^2+2 for (5,2).
 */
inline FpPoly find_irreducible(Fp field, std::size_t n) {
    if (n == 0) throw std::invalid_argument("find_irreducible: degree must be positive");
    const u64 p = field.modulus();
    std::vector<u64> c(n + 1, 0);
    c[n] = 1;
    for (u64 v = 0;; ++v) {
        u64 rest = v;
        for (std::size_t i = 0; i < n; ++i) {
            c[i] = rest % p;
            rest /= p;
        }
        if (rest != 0)
            throw std::invalid_argument("find_irreducible: exhausted candidate space");
        FpPoly f(field, c);
        if (is_irreducible(f)) return f;
    }
}

} // namespace doquot

#endif
