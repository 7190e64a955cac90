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

#ifndef DOQUOT_FP_MATRIX_HPP
#define DOQUOT_FP_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "doquot/errors.hpp"
#include "doquot/fp.hpp"
#include "doquot/fp_poly.hpp"

namespace doquot {

/*
 * Dense square matrix over F_p, entries stored row-major and always reduced.
 * Matrices act on column vectors from the left, so the j-th column holds the
 * image of the j-th basis vector.
 */
class FpMatrix {
public:
    FpMatrix(Fp field, std::size_t n) : field_(field), n_(n), e_(n * n, 0) {
        if (n == 0) throw DimensionMismatchError();
    }

    static FpMatrix zero(Fp field, std::size_t n) { return FpMatrix(field, n); }

    static FpMatrix identity(Fp field, std::size_t n) {
        FpMatrix m(field, n);
        for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
        return m;
    }

    static FpMatrix scalar(Fp field, std::size_t n, u64 c) {
        FpMatrix m(field, n);
        c = field.reduce(c);
        for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = c;
        return m;
    }

    static FpMatrix diagonal(Fp field, const std::vector<u64>& d) {
        FpMatrix m(field, d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.e_[i * d.size() + i] = field.reduce(d[i]);
        return m;
    }

    static FpMatrix from_rows(Fp field, const std::vector<std::vector<u64>>& rows) {
        FpMatrix m(field, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw DimensionMismatchError();
            for (std::size_t j = 0; j < rows.size(); ++j)
                m.e_[i * rows.size() + j] = field.reduce(rows[i][j]);
        }
        return m;
    }

    /* Companion matrix of a monic polynomial: multiplication by x on the
       power basis of F_p[x]/(f). */
    static FpMatrix companion(const FpPoly& f) {
        if (f.is_zero()) throw ZeroPolynomialError();
        if (!f.is_monic() || f.degree() < 1)
            throw std::invalid_argument("companion: polynomial must be monic of degree >= 1");
        const std::size_t n = static_cast<std::size_t>(f.degree());
        FpMatrix m(f.field(), n);
        for (std::size_t i = 0; i + 1 < n; ++i) m.e_[(i + 1) * n + i] = 1;
        for (std::size_t i = 0; i < n; ++i) m.e_[i * n + (n - 1)] = f.field().neg(f.coeff(i));
        return m;
    }

    const Fp& field() const { return field_; }
    std::size_t dim() const { return n_; }
    const std::vector<u64>& entries() const { return e_; }

    u64 at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, u64 v) { e_[i * n_ + j] = field_.reduce(v); }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](u64 v) { return v == 0; });
    }

    bool is_identity() const { return *this == identity(field_, n_); }

    FpMatrix& operator+=(const FpMatrix& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = field_.add(e_[i], o.e_[i]);
        return *this;
    }

    FpMatrix& operator-=(const FpMatrix& o) {
        require_compatible(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = field_.sub(e_[i], o.e_[i]);
        return *this;
    }

    friend FpMatrix operator+(FpMatrix a, const FpMatrix& b) { return a += b; }
    friend FpMatrix operator-(FpMatrix a, const FpMatrix& b) { return a -= b; }

    FpMatrix negated() const {
        FpMatrix r(*this);
        for (u64& v : r.e_) v = field_.neg(v);
        return r;
    }

    FpMatrix scaled(u64 s) const {
        FpMatrix r(*this);
        s = field_.reduce(s);
        for (u64& v : r.e_) v = field_.mul(v, s);
        return r;
    }

    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
        a.require_compatible(b);
        const std::size_t n = a.n_;
        const u64 p = a.field_.modulus();
        FpMatrix r(a.field_, n);
        // Row sums of reduced products stay far below 2^64 (p < 2^31).
        const bool lazy = (p - 1) * (p - 1) <= (~u64{0}) / n;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const u64 aik = a.e_[i * n + k];
                if (aik == 0) continue;
                u64*__restrict dst = &r.e_[i * n];
                const u64* __restrict src = &b.e_[k * n];
                if (lazy) {
                    for (std::size_t j = 0; j < n; ++j) dst[j] += aik * src[j];
                } else {
                    for (std::size_t j = 0; j < n; ++j) dst[j] = (dst[j] + aik * src[j] % p) % p;
                }
            }
            if (lazy)
                for (std::size_t j = 0; j < n; ++j) r.e_[i * n + j] %= p;
        }
        return r;
    }

    FpMatrix& operator*=(const FpMatrix& o) { return *this = *this * o; }

    /* Matrix-vector product (column vector convention). */
    std::vector<u64> apply(const std::vector<u64>& v) const {
        if (v.size() != n_) throw DimensionMismatchError();
        std::vector<u64> r(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            u64 acc = 0;
            for (std::size_t j = 0; j < n_; ++j)
                acc = field_.add(acc, field_.mul(e_[i * n_ + j], v[j]));
            r[i] = acc;
        }
        return r;
    }

    FpMatrix pow(u64 e) const {
        FpMatrix base(*this), r = identity(field_, n_);
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::size_t rank() const {
        std::vector<u64> work(e_);
        return echelon_rank(field_, work, n_, n_);
    }

    /*
     * Gauss-Jordan inversion.  Returns nothing when the matrix is singular;
     * rank_out (if given) always receives the rank.
     */
    std::optional<FpMatrix> try_inverse(std::size_t* rank_out = nullptr) const {
        const std::size_t n = n_;
        std::vector<u64> a(e_);
        FpMatrix inv = identity(field_, n);
        std::vector<u64>& b = inv.e_;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = n;
            for (std::size_t i = rank; i < n; ++i) {
                if (a[i * n + col] != 0) {
                    piv = i;
                    break;
                }
            }
            if (piv == n) continue;
            if (piv != rank) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a[piv * n + j], a[rank * n + j]);
                    std::swap(b[piv * n + j], b[rank * n + j]);
                }
            }
            const u64 s = field_.inv(a[rank * n + col]);
            for (std::size_t j = 0; j < n; ++j) {
                a[rank * n + j] = field_.mul(a[rank * n + j], s);
                b[rank * n + j] = field_.mul(b[rank * n + j], s);
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == rank) continue;
                const u64 f = a[i * n + col];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    a[i * n + j] = field_.sub(a[i * n + j], field_.mul(f, a[rank * n + j]));
                    b[i * n + j] = field_.sub(b[i * n + j], field_.mul(f, b[rank * n + j]));
                }
            }
            ++rank;
        }
        if (rank_out) *rank_out = rank;
        if (rank < n) return std::nullopt;
        return inv;
    }

    FpMatrix inverse() const {
        std::size_t rank = 0;
        auto inv = try_inverse(&rank);
        if (!inv) throw SingularError(rank);
        return *std::move(inv);
    }

    bool is_invertible() const { return try_inverse().has_value(); }

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const FpMatrix& a, const FpMatrix& b) { return !(a == b); }

    /* Canonical order: modulus, dimension, then entries row-major. */
    friend bool operator<(const FpMatrix& a, const FpMatrix& b) {
        if (a.field_.modulus() != b.field_.modulus())
            return a.field_.modulus() < b.field_.modulus();
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.e_ < b.e_;
    }

    void require_compatible(const FpMatrix& o) const {
        field_.require_same(o.field_);
        if (n_ != o.n_) throw DimensionMismatchError();
    }

    /* Row echelon rank of a rows x cols array (destroys the input). */
    static std::size_t echelon_rank(const Fp& field, std::vector<u64>& a, std::size_t rows,
                                    std::size_t cols) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows; ++col) {
            std::size_t piv = rows;
            for (std::size_t i = rank; i < rows; ++i) {
                if (a[i * cols + col] != 0) {
                    piv = i;
                    break;
                }
            }
            if (piv == rows) continue;
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
            const u64 s = field.inv(a[rank * cols + col]);
            for (std::size_t j = col; j < cols; ++j)
                a[rank * cols + j] = field.mul(a[rank * cols + j], s);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == rank) continue;
                const u64 f = a[i * cols + col];
                if (f == 0) continue;
                for (std::size_t j = col; j < cols; ++j)
                    a[i * cols + j] = field.sub(a[i * cols + j], field.mul(f, a[rank * cols + j]));
            }
            ++rank;
        }
        return rank;
    }

private:
    Fp field_;
    std::size_t n_;
    std::vector<u64> e_;
};

/* FNV-1a over modulus, dimension and reduced entries. */
struct FpMatrixHash {
    std::size_t operator()(const FpMatrix& m) const {
        u64 h = 1469598103934665603ull;
        auto mix = [&h](u64 v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(m.field().modulus());
        mix(m.dim());
        for (u64 v : m.entries()) mix(v);
        return static_cast<std::size_t>(h);
    }
};

/* Evaluate f at a square matrix by Horner's rule. */
inline FpMatrix poly_eval_matrix(const FpPoly& f, const FpMatrix& A) {
    f.field().require_same(A.field());
    FpMatrix acc = FpMatrix::zero(A.field(), A.dim());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * A;
        acc += FpMatrix::scalar(A.field(), A.dim(), f.coeff(i));
    }
    return acc;
}

/*
 * Minimal polynomial via Krylov sequences: for each standard basis vector,
 * the first linear dependency among e, Ae, A^2 e, ... gives the local
 * minimal polynomial; the global one is the lcm.  Stops as soon as the lcm
 * reaches the dimension.
 */
inline FpPoly minimal_polynomial(const FpMatrix& A) {
    const std::size_t n = A.dim();
    const Fp field = A.field();
    FpPoly mu = FpPoly::one(field);

    for (std::size_t b = 0; b < n && mu.degree() < static_cast<i64>(n); ++b) {
        // Echelon rows for this Krylov cycle plus the combination that
        // produced each row in terms of the Krylov vectors.
        std::vector<std::vector<u64>> rows, combos;
        std::vector<std::size_t> pivots;

        std::vector<u64> w(n, 0);
        w[b] = 1;
        for (std::size_t j = 0;; ++j) {
            std::vector<u64> cur = w;
            std::vector<u64> comb(j + 1, 0);
            comb[j] = 1;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const u64 f = cur[pivots[r]];
                if (f == 0) continue;
                for (std::size_t t = 0; t < n; ++t)
                    cur[t] = field.sub(cur[t], field.mul(f, rows[r][t]));
                for (std::size_t t = 0; t < combos[r].size(); ++t)
                    comb[t] = field.sub(comb[t], field.mul(f, combos[r][t]));
            }
            std::size_t piv = n;
            for (std::size_t t = 0; t < n; ++t) {
                if (cur[t] != 0) {
                    piv = t;
                    break;
                }
            }
            if (piv == n) {
                // Dependency found: comb is monic of degree j by construction.
                mu = lcm(mu, FpPoly(field, comb));
                break;
            }
            const u64 s = field.inv(cur[piv]);
            for (u64& v : cur) v = field.mul(v, s);
            for (u64& v : comb) v = field.mul(v, s);
            rows.push_back(std::move(cur));
            combos.push_back(std::move(comb));
            pivots.push_back(piv);
            w = A.apply(w);
        }
    }
    return mu;
}

/*
 * Sum of the iterated p^k-power conjugates A + A^(q) + ... + A^(q^(l/k - 1))
 * with q = p^k; the trace map from degree l down to degree k applied to a
 * matrix.  Powers are taken p at a time so exponents never overflow.
 */
inline FpMatrix relative_trace_matrix(const FpMatrix& A, std::size_t l, std::size_t k) {
    if (k == 0 || l == 0 || l % k != 0) throw NonDivisorError();
    const u64 p = A.field().modulus();
    FpMatrix term = A;
    FpMatrix sum = A;
    for (std::size_t t = 1; t < l / k; ++t) {
        for (std::size_t i = 0; i < k; ++i) term = term.pow(p);
        sum += term;
    }
    return sum;
}

/*
 * Exact coordinates of A in the F_p-span of the given matrices, or nothing.
 * When the spanning set is linearly dependent an arbitrary exact solution is
 * returned (free coordinates zero).
 */
inline std::optional<std::vector<u64>> span_membership(const FpMatrix& A,
                                                       const std::vector<FpMatrix>& basis) {
    const std::size_t n = A.dim();
    const Fp field = A.field();
    const std::size_t t = basis.size();
    for (const FpMatrix& B : basis) A.require_compatible(B);

    const std::size_t rows = n * n, cols = t + 1;
    std::vector<u64> m(rows * cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < t; ++j) m[r * cols + j] = basis[j].entries()[r];
        m[r * cols + t] = A.entries()[r];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < t && rank < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m[i * cols + col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
        const u64 s = field.inv(m[rank * cols + col]);
        for (std::size_t j = col; j < cols; ++j)
            m[rank * cols + j] = field.mul(m[rank * cols + j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const u64 f = m[i * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[i * cols + j] = field.sub(m[i * cols + j], field.mul(f, m[rank * cols + j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i) {
        if (m[i * cols + t] != 0) return std::nullopt; // inconsistent
    }
    std::vector<u64> coords(t, 0);
    for (std::size_t r = 0; r < rank; ++r) coords[pivot_col[r]] = m[r * cols + t];
    return coords;
}

/* I, A, A^2, ..., A^(count-1). */
inline std::vector<FpMatrix> power_basis(const FpMatrix& A, std::size_t count) {
    std::vector<FpMatrix> out;
    out.reserve(count);
    FpMatrix cur = FpMatrix::identity(A.field(), A.dim());
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(cur);
        if (i + 1 < count) cur = cur * A;
    }
    return out;
}

} // namespace doquot

#endif
