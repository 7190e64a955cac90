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

/* End-to-end tests of the command-line binary.  The test runner passes the
   binary location in the DOQUOT_CLI environment variable. */

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "doquot.hpp"

using namespace doquot;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& input) {
    const char* bin = std::getenv("DOQUOT_CLI");
    REQUIRE(bin != nullptr);

    static int counter = 0;
    const std::filesystem::path dir = std::filesystem::temp_directory_path();
    const std::string tag = std::to_string(counter++);
    const std::filesystem::path inpath = dir / ("doquot_cli_in_" + tag);
    const std::filesystem::path outpath = dir / ("doquot_cli_out_" + tag);
    {
        std::ofstream f(inpath);
        f << input;
    }

    const std::string cmd = '"' + std::string(bin) + "\" " + args + " < " + inpath.string() +
                            " > " + outpath.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());

    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ostringstream os;
    os << std::ifstream(outpath).rdbuf();
    r.out = os.str();
    std::filesystem::remove(inpath);
    std::filesystem::remove(outpath);
    return r;
}

const std::string square33 = R"({"p":3,"n":3,"terms":[{"i":0,"j":0,"u":[1,0,0]}]})";
const std::string twist33 = R"({"p":3,"n":3,"terms":[{"i":0,"j":1,"u":[1,0,0]}]})";

} // namespace

TEST_CASE("ff-decide reports fields and refutations with exit codes") {
    RunResult r = run_cli("ff-decide -", R"({"p":3,"n":1,"matrices":[[[1]]]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["field"] == true);
    REQUIRE(j["degree"] == 1);
    REQUIRE(matrix_from_json(j["generator"]).dim() == 1);
    REQUIRE(poly_from_text(j["min_poly"].get<std::string>()).degree() == 1);

    r = run_cli("ff-decide - --oracle", R"({"p":3,"n":2,"matrices":[[[1,0],[0,2]]]})");
    REQUIRE(r.code == 1);
    j = json::parse(r.out);
    REQUIRE(j["field"] == false);
    REQUIRE(j["reason"] == "reducible-minimal-polynomial");
    REQUIRE(j["oracle_agrees"] == true);
    FpMatrix witness = matrix_from_json(j["witness"]);
    REQUIRE_FALSE(is_irreducible(minimal_polynomial(witness)));

    r = run_cli("ff-decide -", R"({"p":3,"n":1,"matrices":[]})");
    REQUIRE(r.code == 2);
}

TEST_CASE("gen emits a single generator or no_generator") {
    RunResult r = run_cli(
        "gen -", R"({"p":3,"n":2,"matrices":[[[0,2],[1,0]],[[1,0],[0,1]]]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    FpMatrix g = matrix_from_json(j["generator"]);
    REQUIRE(minimal_polynomial(g) == poly_from_text(j["min_poly"].get<std::string>()));

    r = run_cli("gen -", R"({"p":3,"n":1,"matrices":[[[1]]]})");
    REQUIRE(r.code == 2); // needs exactly two matrices
}

TEST_CASE("planar decides with optional oracle cross-check") {
    RunResult r = run_cli("planar - --oracle",
                          R"({"p":3,"n":2,"terms":[{"i":0,"j":0,"u":[1,0]}]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["planar"] == true);
    REQUIRE(j["oracle_agrees"] == true);

    r = run_cli("planar - --oracle",
                R"({"p":3,"n":4,"terms":[{"i":0,"j":1,"u":[1,0,0,0]}]})");
    REQUIRE(r.code == 1);
    REQUIRE(json::parse(r.out)["planar"] == false);

    r = run_cli("planar -", R"({"p":2,"n":2,"terms":[{"i":0,"j":0,"u":[1,0]}]})");
    REQUIRE(r.code == 2); // even characteristic precondition
}

TEST_CASE("spread output re-parses to the in-process basis") {
    RunResult r = run_cli("spread -", square33);
    REQUIRE(r.code == 0);
    MatrixList l = matrix_list_from_json(json::parse(r.out));

    ExtFieldCtx k(Fp(3), 3);
    SpreadBasis sb = spread_basis(k, do_x_squared(k));
    REQUIRE(l.matrices == sb.mats);
}

TEST_CASE("quot reports cardinality, bounds, elements, and oracle agreement") {
    RunResult r = run_cli("quot - --oracle", twist33);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["size"] == 315);
    REQUIRE(j["lower"] == 27);
    REQUIRE(j["upper"] == 315);
    REQUIRE(j["oracle_agrees"] == true);

    SECTION("elements round-trip against the library enumeration") {
        r = run_cli("quot - --elements --jobs 2", twist33);
        REQUIRE(r.code == 0);
        MatrixList l = matrix_list_from_json(json::parse(r.out)["elements"]);
        ExtFieldCtx k(Fp(3), 3);
        auto expect = quot_set(k, do_power_monomial(k, 1)).to_matrices();
        REQUIRE(l.matrices == std::vector<FpMatrix>(expect.begin(), expect.end()));
    }

    SECTION("size guard trips exit 3") {
        r = run_cli("quot - --elements --limit 100", twist33);
        REQUIRE(r.code == 3);
    }

    SECTION("output is byte-for-byte deterministic") {
        RunResult a = run_cli("quot - --elements", twist33);
        RunResult b = run_cli("quot - --elements", twist33);
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE_FALSE(a.out.empty());
    }
}

TEST_CASE("invariant digest matches the library and --full re-parses") {
    RunResult r = run_cli("invariant - --full",
                          R"({"p":3,"n":2,"terms":[{"i":0,"j":0,"u":[1,0]}]})");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);

    ExtFieldCtx k(Fp(3), 2);
    RcfMultiset m = rcf_multiset(quot_set(k, do_x_squared(k)));
    REQUIRE(j["digest"] == m.digest());
    REQUIRE(j["size"] == m.total());
    REQUIRE(j["text"] == m.canonical_text());
    REQUIRE(j["classes"].size() == m.classes.size());
    for (std::size_t i = 0; i < m.classes.size(); ++i) {
        const json& cls = j["classes"][i];
        REQUIRE(cls["multiplicity"] == m.classes[i].second);
        const auto& factors = m.classes[i].first.invariant_factors;
        REQUIRE(cls["invariant_factors"].size() == factors.size());
        for (std::size_t f = 0; f < factors.size(); ++f)
            REQUIRE(poly_from_text(cls["invariant_factors"][f].get<std::string>()) ==
                    factors[f]);
    }
}

TEST_CASE("x2-equiv prints the certificate with verdict exit codes") {
    RunResult r = run_cli("x2-equiv -", square33);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["equivalent"] == true);
    REQUIRE(j["stage"] == "ok");
    REQUIRE(j["degree"] == 3);
    REQUIRE(is_irreducible(poly_from_text(j["min_poly"].get<std::string>())));

    r = run_cli("x2-equiv -", twist33);
    REQUIRE(r.code == 1);
    j = json::parse(r.out);
    REQUIRE(j["equivalent"] == false);
    REQUIRE(j["stage"] == "algebra-not-field");
}

TEST_CASE("twisted-check verifies structure and identities") {
    RunResult r = run_cli("twisted-check - --alpha 1,0,0 --beta 0,1,0", twist33);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["k"] == 1);
    REQUIRE(j["structure"]["passed"] == true);
    REQUIRE(j["structure"]["expected_degree"] == 3);
    REQUIRE(j["identities"]["passed"] == true);
    REQUIRE(j["identities"]["subfield_degenerate"] == false);

    SECTION("explicit exponent flag") {
        r = run_cli("twisted-check - --alpha 1,0,0 --beta 2,0,0 --k 1", twist33);
        REQUIRE(r.code == 0);
        j = json::parse(r.out);
        REQUIRE(j["structure"]["actual_degree"] == 1);
        REQUIRE(j["identities"]["subfield_degenerate"] == true);
    }

    SECTION("flag and precondition errors") {
        REQUIRE(run_cli("twisted-check -", twist33).code == 2); // missing --alpha/--beta
        REQUIRE(run_cli("twisted-check - --alpha 0,0,0 --beta 0,1,0", twist33).code == 2);
        REQUIRE(run_cli("twisted-check - --alpha 1,0", twist33).code == 2);
    }
}

TEST_CASE("input handling covers files, stdin, and malformed data") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "doquot_cli_file_input.json";
    {
        std::ofstream f(path);
        f << square33;
    }
    RunResult r = run_cli("x2-equiv " + path.string(), "");
    REQUIRE(r.code == 0);
    std::filesystem::remove(path);

    REQUIRE(run_cli("x2-equiv /nonexistent/path.json", "").code == 2);
    REQUIRE(run_cli("planar -", "not json").code == 2);
    REQUIRE(run_cli("planar -", R"({"p":9,"n":2,"terms":[]})").code == 2);
    REQUIRE(run_cli("bogus-subcommand -", "").code == 2);
}
