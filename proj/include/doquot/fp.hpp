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

#ifndef DOQUOT_FP_HPP
#define DOQUOT_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doquot/errors.hpp"

namespace doquot {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/*
 * Prime field F_p with a runtime modulus.  Residues are plain u64 values in
 * [0, p); the context object owns the modulus and performs all arithmetic.
 * The modulus is capped at 2^31 - 1 so that a product of two residues always
 * fits in one 64-bit word.
 */
class Fp {
public:
    static constexpr u64 max_modulus = (u64{1} << 31) - 1;

    explicit Fp(u64 p) : p_(p) {
        if (p < 2 || p > max_modulus)
            throw std::invalid_argument("Fp: modulus must lie in [2, 2^31)");
        if (!is_prime(p))
            throw std::invalid_argument("Fp: modulus must be prime");
    }

    u64 modulus() const { return p_; }

    u64 reduce(u64 v) const { return v % p_; }

    u64 reduce_signed(i64 v) const {
        i64 r = v % static_cast<i64>(p_);
        if (r < 0) r += static_cast<i64>(p_);
        return static_cast<u64>(r);
    }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }

    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }

    u64 mul(u64 a, u64 b) const { return (a * b) % p_; }

    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        u64 base = a % p_;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    u64 inv(u64 a) const {
        a %= p_;
        if (a == 0) throw ZeroInversionError();
        return pow(a, p_ - 2);
    }

    u64 div(u64 a, u64 b) const { return mul(a % p_, inv(b)); }

    /* Throws when two operands come from different prime fields. */
    void require_same(const Fp& other) const {
        if (p_ != other.p_) throw ModulusMismatchError();
    }

    friend bool operator==(const Fp& a, const Fp& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.p_ != b.p_; }

    static bool is_prime(u64 n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        if (n % 3 == 0) return n == 3;
        for (u64 d = 5; d * d <= n; d += 6) {
            if (n % d == 0 || n % (d + 2) == 0) return false;
        }
        return true;
    }

private:
    u64 p_;
};

/* Prime factorization (prime, exponent), primes ascending. */
struct IntFactorization {
    std::vector<std::pair<u64, unsigned>> factors;
};

/* Factor a positive integer by trial division. */
inline IntFactorization factor_small_integer(u64 m) {
    if (m == 0) throw std::invalid_argument("factor_small_integer: zero input");
    IntFactorization out;
    for (u64 d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        if (m % d != 0) continue;
        unsigned e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        out.factors.emplace_back(d, e);
    }
    if (m > 1) out.factors.emplace_back(m, 1);
    return out;
}

} // namespace doquot

#endif
