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

#ifndef DOQUOT_JSON_IO_HPP
#define DOQUOT_JSON_IO_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "doquot/do_poly.hpp"
#include "doquot/errors.hpp"
#include "doquot/ext_field.hpp"
#include "doquot/fp.hpp"
#include "doquot/fp_matrix.hpp"
#include "doquot/fp_poly.hpp"

namespace doquot {

namespace detail {

inline u64 parse_u64(const std::string& s, const char* what) {
    if (s.empty() || s.size() > 19) throw ParseError(std::string(what) + ": bad integer '" + s + "'");
    u64 v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            throw ParseError(std::string(what) + ": bad integer '" + s + "'");
        v = v * 10 + static_cast<u64>(ch - '0');
    }
    return v;
}

inline const nlohmann::json& need(const nlohmann::json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field \"") + key + '"');
    return *it;
}

inline u64 need_unsigned(const nlohmann::json& j, const char* key) {
    const nlohmann::json& v = need(j, key);
    if (!v.is_number_unsigned())
        throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
    return v.get<u64>();
}

inline Fp field_of(const nlohmann::json& j) {
    u64 p = need_unsigned(j, "p");
    try {
        return Fp(p);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline u64 residue(const nlohmann::json& v, Fp field, const char* what) {
    if (!v.is_number_unsigned() || v.get<u64>() >= field.modulus())
        throw ParseError(std::string(what) + " entries must be integers in [0, p)");
    return v.get<u64>();
}

inline std::vector<u64> residue_vector(const nlohmann::json& v, Fp field, std::size_t len,
                                       const char* what) {
    if (!v.is_array() || v.size() != len)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(len) +
                         " entries");
    std::vector<u64> out;
    out.reserve(len);
    for (const nlohmann::json& e : v) out.push_back(residue(e, field, what));
    return out;
}

inline FpMatrix rows_to_matrix(const nlohmann::json& rows, Fp field, std::size_t n) {
    if (!rows.is_array() || rows.size() != n)
        throw ParseError("rows must be an array of n row arrays");
    FpMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<u64> row = residue_vector(rows[i], field, n, "row");
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, row[j]);
    }
    return m;
}

inline nlohmann::json matrix_rows(const FpMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

/* Text form of a prime-field polynomial, constant term first:
   "p:3 coeffs:1,0,1" is 1 + x^2 over F_3. */
inline std::string poly_to_text(const FpPoly& f) {
    std::ostringstream os;
    os << "p:" << f.field().modulus() << " coeffs:";
    if (f.is_zero()) {
        os << '0';
    } else {
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            if (i) os << ',';
            os << f.coeffs()[i];
        }
    }
    return os.str();
}

inline FpPoly poly_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string ptok, ctok;
    if (!(is >> ptok >> ctok) || ptok.rfind("p:", 0) != 0 || ctok.rfind("coeffs:", 0) != 0)
        throw ParseError("polynomial text must look like \"p:3 coeffs:1,0,1\"");
    std::string rest;
    if (is >> rest) throw ParseError("unexpected trailing text in polynomial");
    Fp field = [&] {
        try {
            return Fp(detail::parse_u64(ptok.substr(2), "p"));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    std::vector<u64> coeffs;
    std::string item;
    std::istringstream cs(ctok.substr(7));
    while (std::getline(cs, item, ',')) {
        u64 v = detail::parse_u64(item, "coefficient");
        if (v >= field.modulus()) throw ParseError("coefficient out of range");
        coeffs.push_back(v);
    }
    if (coeffs.empty()) throw ParseError("empty coefficient list");
    return FpPoly(field, std::move(coeffs));
}

/* Coordinate list "1,0,2" in the power basis, constant coordinate first. */
inline ExtElem element_from_text(const ExtFieldCtx& k, const std::string& text) {
    std::vector<u64> coords;
    std::string item;
    std::istringstream cs(text);
    while (std::getline(cs, item, ','))
        coords.push_back(detail::parse_u64(item, "coordinate"));
    if (coords.size() != k.degree())
        throw ParseError("element needs exactly " + std::to_string(k.degree()) + " coordinates");
    for (u64 v : coords)
        if (v >= k.p()) throw ParseError("coordinate entries must be integers in [0, p)");
    return k.element(std::move(coords));
}

/* Single matrix: {"p": 3, "n": 2, "rows": [[1,0],[0,2]]}. */
inline nlohmann::json matrix_to_json(const FpMatrix& m) {
    return {{"p", m.field().modulus()}, {"n", m.dim()}, {"rows", detail::matrix_rows(m)}};
}

inline FpMatrix matrix_from_json(const nlohmann::json& j) {
    Fp field = detail::field_of(j);
    u64 n = detail::need_unsigned(j, "n");
    if (n == 0) throw ParseError("n must be positive");
    return detail::rows_to_matrix(detail::need(j, "rows"), field, static_cast<std::size_t>(n));
}

/* Matrix list sharing one shape: {"p": 3, "n": 1, "matrices": [[[1]]]}. */
struct MatrixList {
    Fp field;
    std::size_t n;
    std::vector<FpMatrix> matrices;
};

inline nlohmann::json matrix_list_to_json(const MatrixList& l) {
    nlohmann::json ms = nlohmann::json::array();
    for (const FpMatrix& m : l.matrices) ms.push_back(detail::matrix_rows(m));
    return {{"p", l.field.modulus()}, {"n", l.n}, {"matrices", std::move(ms)}};
}

inline MatrixList matrix_list_from_json(const nlohmann::json& j) {
    Fp field = detail::field_of(j);
    u64 n = detail::need_unsigned(j, "n");
    if (n == 0) throw ParseError("n must be positive");
    const nlohmann::json& ms = detail::need(j, "matrices");
    if (!ms.is_array()) throw ParseError("matrices must be an array");
    MatrixList out{field, static_cast<std::size_t>(n), {}};
    out.matrices.reserve(ms.size());
    for (const nlohmann::json& rows : ms)
        out.matrices.push_back(detail::rows_to_matrix(rows, field, out.n));
    return out;
}

/*
 * DO polynomial with its field context:
 *   {"p":3, "n":3, "modulus":[1,2,0,1], "terms":[{"i":0,"j":1,"u":[1,0,0]}]}
 * means u_{0,1} = 1 (the monomial x^(p^0 + p^1)) over F_3[x]/(1 + 2x + x^3).
 * "modulus" lists constant-first coefficients and may be omitted, in which
 * case the library's default irreducible polynomial for (p, n) is used.
 */
struct ParsedDOPoly {
    ExtFieldCtx ctx;
    DOPoly poly;
};

inline nlohmann::json do_poly_to_json(const ExtFieldCtx& k, const DOPoly& g) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [ij, u] : g.terms)
        terms.push_back({{"i", ij.first}, {"j", ij.second}, {"u", u.c}});
    return {{"p", k.p()},
            {"n", k.degree()},
            {"modulus", k.modulus().coeffs()},
            {"terms", std::move(terms)}};
}

inline ParsedDOPoly do_poly_from_json(const nlohmann::json& j) {
    Fp field = detail::field_of(j);
    u64 n = detail::need_unsigned(j, "n");
    if (n == 0) throw ParseError("n must be positive");
    const std::size_t deg = static_cast<std::size_t>(n);

    ExtFieldCtx ctx = [&] {
        try {
            if (j.is_object() && j.contains("modulus")) {
                std::vector<u64> mc =
                    detail::residue_vector(j.at("modulus"), field, deg + 1, "modulus");
                return ExtFieldCtx(field, FpPoly(field, std::move(mc)));
            }
            return ExtFieldCtx(field, deg);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();

    const nlohmann::json& terms = detail::need(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    DOPoly g = do_zero(ctx);
    for (const nlohmann::json& t : terms) {
        u64 i = detail::need_unsigned(t, "i");
        u64 jj = detail::need_unsigned(t, "j");
        ExtElem u = ctx.element(detail::residue_vector(detail::need(t, "u"), field, deg, "u"));
        do_add_term(ctx, g, static_cast<std::size_t>(i), static_cast<std::size_t>(jj), u);
    }
    return ParsedDOPoly{std::move(ctx), std::move(g)};
}

} // namespace doquot

#endif
