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

#ifndef DOQUOT_QUOT_HPP
#define DOQUOT_QUOT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include <openssl/evp.h>

#include "doquot/do_poly.hpp"
#include "doquot/errors.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/fp_matrix.hpp"
#include "doquot/rcf.hpp"

namespace doquot {

/*
 * The set of quotients Z * Y^(-1) over spread-set pairs with Y invertible.
 * The set is closed under scaling by F_p* (scale Z), so it is stored as the
 * zero element plus one packed representative per scalar orbit; every
 * membership query canonicalizes before the lookup.  Matrices pack into a
 * u64 by base-p digits of the entry list, which confines this representation
 * to p^(n^2) <= 2^63 — comfortably covering every enumerable case.
 */
class QuotSet {
public:
    QuotSet(Fp field, std::size_t n, std::vector<u64> orbit_keys, bool nonempty)
        : fp_(field), n_(n), orbit_keys_(std::move(orbit_keys)), nonempty_(nonempty) {
        max_packed_key(field, n); // validate packability
        std::sort(orbit_keys_.begin(), orbit_keys_.end());
        orbit_keys_.erase(std::unique(orbit_keys_.begin(), orbit_keys_.end()),
                          orbit_keys_.end());
    }

    const Fp& field() const { return fp_; }
    std::size_t dim() const { return n_; }
    bool empty() const { return !nonempty_; }
    std::size_t orbit_count() const { return orbit_keys_.size(); }

    /* Zero plus (p - 1) distinct scalar multiples per orbit. */
    u64 size() const {
        if (!nonempty_) return 0;
        return 1 + (fp_.modulus() - 1) * static_cast<u64>(orbit_keys_.size());
    }

    bool contains(const FpMatrix& m) const {
        if (m.dim() != n_ || m.field() != fp_) return false;
        if (!nonempty_) return false;
        u64 scale = 0;
        for (u64 e : m.entries())
            if (e != 0) {
                scale = e;
                break;
            }
        if (scale == 0) return true; // the zero matrix
        u64 key = pack(m.scaled(fp_.inv(scale)));
        return std::binary_search(orbit_keys_.begin(), orbit_keys_.end(), key);
    }

    /* Materialize the full set (zero and all scalar multiples). */
    std::set<FpMatrix> to_matrices() const {
        std::set<FpMatrix> out;
        if (!nonempty_) return out;
        out.insert(FpMatrix::zero(fp_, n_));
        for (u64 key : orbit_keys_) {
            FpMatrix rep = unpack(key);
            for (u64 c = 1; c < fp_.modulus(); ++c) out.insert(rep.scaled(c));
        }
        return out;
    }

    const std::vector<u64>& orbit_keys() const { return orbit_keys_; }

    u64 pack(const FpMatrix& m) const {
        u64 key = 0, weight = 1;
        for (u64 e : m.entries()) {
            key += e * weight;
            weight *= fp_.modulus();
        }
        return key;
    }

    FpMatrix unpack(u64 key) const {
        FpMatrix m(fp_, n_);
        std::vector<u64> ent(n_ * n_);
        for (std::size_t i = 0; i < ent.size(); ++i) {
            ent[i] = key % fp_.modulus();
            key /= fp_.modulus();
        }
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) m.set(r, c, ent[r * n_ + c]);
        return m;
    }

    /* p^(n^2) - 1, throwing when the packing would not fit 63 bits. */
    static u64 max_packed_key(Fp field, std::size_t n) {
        u64 v = 1;
        for (std::size_t i = 0; i < n * n; ++i) {
            if (v > (u64{1} << 63) / field.modulus())
                throw SizeGuardError("matrix packing exceeds 64 bits");
            v *= field.modulus();
        }
        return v - 1;
    }

private:
    Fp fp_;
    std::size_t n_;
    std::vector<u64> orbit_keys_;
    bool nonempty_;
};

namespace detail {

/* Scale a nonzero matrix so its first nonzero entry becomes 1; returns false
   for the zero matrix. */
inline bool canonical_orbit_rep(const Fp& fp, FpMatrix& m) {
    for (u64 e : m.entries())
        if (e != 0) {
            if (e != 1) m = m.scaled(fp.inv(e));
            return true;
        }
    return false;
}

} // namespace detail

/*
 * Enumerates the quotient set of the spread of g.  Both sides of the product
 * run over projective direction representatives only: scaling the numerator
 * direction scales the quotient, and scaling the denominator direction
 * scales it inversely, so every quotient is a scalar multiple of a
 * representative product (and the scalar closure is implicit in QuotSet).
 */
inline QuotSet quot_set(const ExtFieldCtx& k, const DOPoly& g, unsigned jobs = 1) {
    const Fp fp = k.prime_field();
    const std::size_t n = k.degree();
    QuotSet::max_packed_key(fp, n); // fail fast before any real work

    SpreadBasis sb = spread_basis(k, g);
    std::vector<ExtElem> reps = projective_representatives(k);

    std::vector<FpMatrix> numerators;
    std::vector<FpMatrix> inverses;
    numerators.reserve(reps.size());
    for (const ExtElem& alpha : reps) {
        FpMatrix m = sb.combine(alpha);
        if (auto inv = m.try_inverse()) inverses.push_back(std::move(*inv));
        numerators.push_back(std::move(m));
    }
    if (inverses.empty()) return QuotSet(fp, n, {}, false);

    auto scan = [&](std::size_t lo, std::size_t hi, std::unordered_set<u64>& out) {
        QuotSet packer(fp, n, {}, false);
        for (std::size_t a = lo; a < hi; ++a)
            for (const FpMatrix& num : numerators) {
                FpMatrix q = num * inverses[a];
                if (detail::canonical_orbit_rep(fp, q)) out.insert(packer.pack(q));
            }
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(inverses.size()));

    std::unordered_set<u64> keys;
    if (jobs <= 1) {
        scan(0, inverses.size(), keys);
    } else {
        std::vector<std::unordered_set<u64>> partial(jobs);
        std::vector<std::thread> threads;
        std::size_t chunk = (inverses.size() + jobs - 1) / jobs;
        for (unsigned t = 0; t < jobs; ++t) {
            std::size_t lo = std::min<std::size_t>(t * chunk, inverses.size());
            std::size_t hi = std::min<std::size_t>(lo + chunk, inverses.size());
            threads.emplace_back(scan, lo, hi, std::ref(partial[t]));
        }
        for (std::thread& th : threads) th.join();
        for (const auto& part : partial) keys.insert(part.begin(), part.end());
    }

    return QuotSet(fp, n, std::vector<u64>(keys.begin(), keys.end()), true);
}

/* Largest possible quotient-set size in dimension n: every line of the
   punctured matrix space paired against every denominator line, plus the
   subfield F_p. */
inline u64 quot_upper_bound(u64 p, std::size_t n) {
    Fp fp(p); // validates primality
    u64 pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (pn > (u64{1} << 31) / p) throw SizeGuardError("order exceeds 2^31");
        pn *= p;
    }
    return (pn - p) * ((pn - 1) / (p - 1)) + p;
}

/*
 * Exact quotient-set size for the planar power monomial x^(p^k + 1):
 * (p^n - p^d)(p^n - 1)/(p^d - 1) + p^d with d = gcd(k, n).  k = 0 gives
 * d = n and the value collapses to p^n, the x^2 case.
 */
inline u64 twisted_quot_cardinality(u64 p, std::size_t n, std::size_t k) {
    Fp fp(p);
    const std::size_t d = k % n == 0 ? n : std::gcd(k % n, n);
    if ((n / d) % 2 == 0) throw NotPlanarParametersError();
    u64 pn = 1, pd = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (pn > (u64{1} << 31) / p) throw SizeGuardError("order exceeds 2^31");
        pn *= p;
        if (i < d) pd *= p;
    }
    // (p^n - p^d) is divisible by (p^d - 1) since d | n
    return (pn - pd) / (pd - 1) * (pn - 1) + pd;
}

/*
 * Similarity-class census of a quotient set: the multiset of rational
 * canonical forms with the number of distinct matrices falling in each
 * class.  Equal multisets are a necessary condition for two polynomials to
 * be linear-equivalent, which makes the canonical text (and its hash) a
 * cheap cross-run fingerprint.
 */
struct RcfMultiset {
    u64 p = 0;
    std::size_t n = 0;
    std::vector<std::pair<RcfForm, u64>> classes; // sorted by RcfForm order

    u64 total() const {
        u64 t = 0;
        for (const auto& [form, mult] : classes) t += mult;
        return t;
    }

    friend bool operator==(const RcfMultiset& a, const RcfMultiset& b) {
        return a.p == b.p && a.n == b.n && a.classes == b.classes;
    }
    friend bool operator!=(const RcfMultiset& a, const RcfMultiset& b) { return !(a == b); }

    /* Deterministic serialization: "p=3;n=2;" then one "factors*mult" item
       per class, factors separated by '|', each factor its coefficient list
       in ascending-degree order. */
    std::string canonical_text() const {
        std::ostringstream os;
        os << "p=" << p << ";n=" << n;
        for (const auto& [form, mult] : classes) {
            os << ';';
            for (std::size_t f = 0; f < form.invariant_factors.size(); ++f) {
                if (f > 0) os << '|';
                const std::vector<u64>& c = form.invariant_factors[f].coeffs();
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (i > 0) os << ',';
                    os << c[i];
                }
            }
            os << '*' << mult;
        }
        return os.str();
    }

    /* SHA-256 of the canonical text, hex-encoded. */
    std::string digest() const {
        const std::string text = canonical_text();
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
            throw Error("digest computation failed");
        static const char* hex = "0123456789abcdef";
        std::string out;
        out.reserve(2 * len);
        for (unsigned int i = 0; i < len; ++i) {
            out.push_back(hex[md[i] >> 4]);
            out.push_back(hex[md[i] & 0xf]);
        }
        return out;
    }
};

inline RcfMultiset rcf_multiset(const QuotSet& q) {
    RcfMultiset out;
    out.p = q.field().modulus();
    out.n = q.dim();
    if (q.empty()) return out;

    std::map<RcfForm, u64> census;
    ++census[rcf(FpMatrix::zero(q.field(), q.dim()))];
    for (u64 key : q.orbit_keys()) {
        FpMatrix rep = q.unpack(key);
        for (u64 c = 1; c < out.p; ++c) ++census[rcf(rep.scaled(c))];
    }
    out.classes.assign(census.begin(), census.end());
    return out;
}

/*
 * One slice of the quotient set: every spread matrix multiplied by the
 * inverse of the spread matrix of a fixed direction.  Materialized over the
 * whole field (not just projective lines), so the slice is a full
 * F_p-subspace of matrices.
 */
inline std::set<FpMatrix> spread_slice(const ExtFieldCtx& k, const DOPoly& g,
                                       const ExtElem& beta,
                                       u64 limit = 2'000'000) {
    if (k.order() > limit) throw SizeGuardError("field enumeration too large");
    SpreadBasis sb = spread_basis(k, g);
    FpMatrix denom = sb.combine(beta);
    if (!denom.is_invertible()) throw NotInvertibleError();
    FpMatrix inv = denom.inverse();
    std::set<FpMatrix> out;
    for (u64 v = 0; v < k.order(); ++v) out.insert(sb.combine(k.from_value(v)) * inv);
    return out;
}

} // namespace doquot

#endif
