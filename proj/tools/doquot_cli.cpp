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

/*
 * Command-line front-end.  Every subcommand reads one JSON document (file
 * path or `-` for standard input), prints a machine-readable JSON report on
 * standard output, and reserves standard error for diagnostics.
 *
 * Exit codes:  0 the decided property holds (or the computation succeeded),
 *              1 the decided property fails,
 *              2 malformed input or violated precondition,
 *              3 refusal by a size guard.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "doquot.hpp"
#include "doquot/oracle.hpp"

namespace {

using nlohmann::json;
using namespace doquot;

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_input = 2;
constexpr int exit_guard = 3;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json load_json(const std::string& path) {
    try {
        return json::parse(read_all(path));
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json element_coords(const ExtElem& e) { return json(e.c); }

/* Shared options. */
struct Opts {
    std::string input = "-";
    std::string alpha, beta;
    long long k = -1;
    bool oracle = false;
    bool elements = false;
    bool full = false;
    unsigned jobs = 1;
    u64 limit = 2'000'000;
};

int run_ff_decide(const Opts& o) {
    MatrixList l = matrix_list_from_json(load_json(o.input));
    if (l.matrices.empty()) throw ParseError("matrices must be nonempty");
    FieldDecision d = finite_field_decide(l.matrices);

    json out;
    out["field"] = d.is_field;
    if (d.is_field) {
        out["degree"] = d.degree;
        out["generator"] = matrix_to_json(*d.generator);
        out["min_poly"] = poly_to_text(*d.min_poly);
    } else {
        switch (d.refutation) {
        case FieldDecision::Refutation::reducible_min_poly:
            out["reason"] = "reducible-minimal-polynomial";
            out["witness"] = matrix_to_json(*d.reducible_witness);
            out["witness_min_poly"] = poly_to_text(*d.witness_min_poly);
            break;
        case FieldDecision::Refutation::outside_span:
            out["reason"] = "outside-generator-span";
            out["witness_index"] = d.outside_index;
            break;
        default:
            out["reason"] = "no-generator";
            break;
        }
    }
    if (o.oracle) {
        FieldDecision ref = oracle::brute_force_field_check(l.matrices, o.limit);
        bool agree = ref.is_field == d.is_field && (!d.is_field || ref.degree == d.degree);
        out["oracle_agrees"] = agree;
        if (!agree) {
            emit(out);
            std::cerr << "oracle disagrees with the fast decision\n";
            return exit_input;
        }
    }
    emit(out);
    return d.is_field ? exit_holds : exit_fails;
}

int run_gen(const Opts& o) {
    MatrixList l = matrix_list_from_json(load_json(o.input));
    if (l.matrices.size() != 2) throw ParseError("gen expects exactly two matrices");
    std::optional<FpMatrix> g = compute_generator(l.matrices[0], l.matrices[1]);
    if (!g) {
        emit(json("no_generator"));
        return exit_fails;
    }
    json out;
    out["generator"] = matrix_to_json(*g);
    out["min_poly"] = poly_to_text(minimal_polynomial(*g));
    emit(out);
    return exit_holds;
}

int run_planar(const Opts& o) {
    ParsedDOPoly in = do_poly_from_json(load_json(o.input));
    bool planar = is_planar(in.ctx, in.poly);
    json out;
    out["planar"] = planar;
    if (o.oracle) {
        bool ref = oracle::exhaustive_planarity(in.ctx, in.poly, o.limit);
        out["oracle_agrees"] = ref == planar;
        if (ref != planar) {
            emit(out);
            std::cerr << "oracle disagrees with the fast decision\n";
            return exit_input;
        }
    }
    emit(out);
    return planar ? exit_holds : exit_fails;
}

int run_spread(const Opts& o) {
    ParsedDOPoly in = do_poly_from_json(load_json(o.input));
    SpreadBasis sb = spread_basis(in.ctx, in.poly);
    emit(matrix_list_to_json(
        MatrixList{in.ctx.prime_field(), in.ctx.degree(), std::move(sb.mats)}));
    return exit_holds;
}

int run_quot(const Opts& o) {
    ParsedDOPoly in = do_poly_from_json(load_json(o.input));
    QuotSet q = quot_set(in.ctx, in.poly, o.jobs);
    json out;
    out["size"] = q.size();
    out["lower"] = in.ctx.order();
    out["upper"] = quot_upper_bound(in.ctx.p(), in.ctx.degree());
    if (o.elements) {
        if (q.size() > o.limit) throw SizeGuardError("quotient set larger than --limit");
        MatrixList l{in.ctx.prime_field(), in.ctx.degree(), {}};
        auto ms = q.to_matrices();
        l.matrices.assign(ms.begin(), ms.end());
        out["elements"] = matrix_list_to_json(l);
    }
    if (o.oracle) {
        bool agree = oracle::exhaustive_quot(in.ctx, in.poly, o.limit) == q.to_matrices();
        out["oracle_agrees"] = agree;
        if (!agree) {
            emit(out);
            std::cerr << "oracle disagrees with the fast enumeration\n";
            return exit_input;
        }
    }
    emit(out);
    return exit_holds;
}

int run_invariant(const Opts& o) {
    ParsedDOPoly in = do_poly_from_json(load_json(o.input));
    RcfMultiset m = rcf_multiset(quot_set(in.ctx, in.poly, o.jobs));
    json out;
    out["digest"] = m.digest();
    out["size"] = m.total();
    if (o.full) {
        json classes = json::array();
        for (const auto& [form, mult] : m.classes) {
            json factors = json::array();
            for (const FpPoly& f : form.invariant_factors) factors.push_back(poly_to_text(f));
            classes.push_back({{"invariant_factors", std::move(factors)},
                               {"multiplicity", mult}});
        }
        out["classes"] = std::move(classes);
        out["text"] = m.canonical_text();
    }
    emit(out);
    return exit_holds;
}

int run_x2(const Opts& o) {
    ParsedDOPoly in = do_poly_from_json(load_json(o.input));
    X2Certificate cert = decide_x2(in.ctx, in.poly);
    json out;
    out["equivalent"] = cert.verdict;
    switch (cert.stage) {
    case X2Certificate::Stage::ok: out["stage"] = "ok"; break;
    case X2Certificate::Stage::m1_singular: out["stage"] = "m1-singular"; break;
    case X2Certificate::Stage::algebra_not_field: out["stage"] = "algebra-not-field"; break;
    case X2Certificate::Stage::wrong_degree: out["stage"] = "wrong-degree"; break;
    }
    if (cert.verdict) {
        out["degree"] = cert.degree;
        out["generator"] = matrix_to_json(*cert.generator);
        out["min_poly"] = poly_to_text(*cert.min_poly);
    } else if (cert.witness) {
        out["witness"] = matrix_to_json(*cert.witness);
    }
    emit(out);
    return cert.verdict ? exit_holds : exit_fails;
}

int run_twisted(const Opts& o) {
    ParsedDOPoly in = do_poly_from_json(load_json(o.input));
    const ExtFieldCtx& k = in.ctx;
    ExtElem alpha = element_from_text(k, o.alpha);
    ExtElem beta = element_from_text(k, o.beta);

    std::size_t kexp;
    if (o.k >= 0) {
        kexp = static_cast<std::size_t>(o.k);
    } else if (in.poly.terms.size() == 1 && in.poly.terms.begin()->first.first == 0) {
        kexp = in.poly.terms.begin()->first.second;
    } else {
        throw ParseError("cannot infer the twist exponent from this polynomial; pass --k");
    }

    if (k.order() > o.limit) throw SizeGuardError("field enumeration larger than --limit");
    QuotSet q = quot_set(k, in.poly, o.jobs);
    TwistedStructureReport sr = verify_twisted_structure(k, in.poly, alpha, beta, &q, o.limit);
    ConjugationReport cr = verify_conjugation_identities(k, kexp, alpha, beta);

    json structure;
    structure["passed"] = sr.passed();
    structure["degree_ok"] = sr.degree_ok;
    structure["membership_ok"] = sr.membership_ok;
    structure["expected_degree"] = sr.expected_degree;
    structure["actual_degree"] = sr.actual_degree;
    structure["x"] = matrix_to_json(sr.x);
    structure["min_poly"] = poly_to_text(sr.min_poly);
    if (sr.failing_member) structure["failing_member"] = matrix_to_json(*sr.failing_member);

    json identities;
    identities["passed"] = cr.passed();
    identities["composition_ok"] = cr.composition_ok;
    identities["self_equivalence_ok"] = cr.self_equivalence_ok;
    identities["conjugation_ok"] = cr.conjugation_ok;
    identities["subfield_degenerate"] = cr.subfield_degenerate;
    identities["gamma"] = element_coords(cr.gamma_used);

    json out;
    out["k"] = kexp;
    out["structure"] = std::move(structure);
    out["identities"] = std::move(identities);
    emit(out);
    return sr.passed() && cr.passed() ? exit_holds : exit_fails;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-field recognition in matrix algebras and quotient-set analysis\n"
                 "of Dembowski-Ostrom polynomials over F_p^n."};
    app.require_subcommand(1);

    Opts o;
    int rc = exit_holds;
    auto add_input = [&](CLI::App* s) {
        s->add_option("input", o.input, "input file, or - for standard input")
            ->capture_default_str();
    };
    auto add_limit = [&](CLI::App* s) {
        s->add_option("--limit", o.limit, "enumeration size guard")->capture_default_str();
    };
    auto add_jobs = [&](CLI::App* s) {
        s->add_option("--jobs", o.jobs, "worker threads (0 = hardware)")->capture_default_str();
    };

    CLI::App* ff = app.add_subcommand(
        "ff-decide", "decide whether matrices generate a finite field (matrix-list JSON)");
    add_input(ff);
    add_limit(ff);
    ff->add_flag("--oracle", o.oracle, "cross-check against brute-force enumeration");
    ff->callback([&] { rc = run_ff_decide(o); });

    CLI::App* gn = app.add_subcommand(
        "gen", "single generator for the algebra of two commuting matrices (matrix-list JSON)");
    add_input(gn);
    gn->callback([&] { rc = run_gen(o); });

    CLI::App* pl =
        app.add_subcommand("planar", "decide planarity of a DO polynomial (DO-polynomial JSON)");
    add_input(pl);
    add_limit(pl);
    pl->add_flag("--oracle", o.oracle, "cross-check against exhaustive evaluation");
    pl->callback([&] { rc = run_planar(o); });

    CLI::App* sp = app.add_subcommand(
        "spread", "print the spread-set basis matrices of a DO polynomial");
    add_input(sp);
    sp->callback([&] { rc = run_spread(o); });

    CLI::App* qt = app.add_subcommand(
        "quot", "enumerate the quotient set of a DO polynomial's spread set");
    add_input(qt);
    add_limit(qt);
    add_jobs(qt);
    qt->add_flag("--elements", o.elements, "include the full element list");
    qt->add_flag("--oracle", o.oracle, "cross-check against naive pair enumeration");
    qt->callback([&] { rc = run_quot(o); });

    CLI::App* iv = app.add_subcommand(
        "invariant", "canonical-form census digest of the quotient set");
    add_input(iv);
    add_jobs(iv);
    iv->add_flag("--full", o.full, "include the sorted class list and pre-hash text");
    iv->callback([&] { rc = run_invariant(o); });

    CLI::App* x2 = app.add_subcommand(
        "x2-equiv", "decide linear equivalence to the squaring polynomial");
    add_input(x2);
    x2->callback([&] { rc = run_x2(o); });

    CLI::App* tw = app.add_subcommand(
        "twisted-check", "verify quotient field structure and composition identities");
    add_input(tw);
    add_limit(tw);
    add_jobs(tw);
    tw->add_option("--alpha", o.alpha, "denominator direction, coordinates like 1,0,2")
        ->required();
    tw->add_option("--beta", o.beta, "numerator direction, coordinates like 0,1,0")->required();
    tw->add_option("--k", o.k, "twist exponent (default: inferred from a single-term input)");
    tw->callback([&] { rc = run_twisted(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    } catch (const ParseError& e) {
        std::cerr << e.what() << '\n';
        return exit_input;
    } catch (const SizeGuardError& e) {
        std::cerr << e.what() << '\n';
        return exit_guard;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return rc;
}
