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
 * Recognizing a finite field presented as matrices.
 *
 * We hide F_81 inside Mat_4(F_3) by conjugating two multiplication matrices
 * with a random change of basis, then ask the library to recognize the
 * field and exhibit a single generator.  A second run on a non-commuting
 * pair shows a refutation certificate.
 */

#include <iostream>
#include <random>

#include "doquot.hpp"

using namespace doquot;

namespace {

void print_matrix(const FpMatrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::cout << "    ";
        for (std::size_t j = 0; j < m.dim(); ++j) std::cout << m.at(i, j) << ' ';
        std::cout << '\n';
    }
}

void describe(const FieldDecision& d) {
    if (d.is_field) {
        std::cout << "  field of degree " << d.degree << ", minimal polynomial "
                  << poly_to_text(*d.min_poly) << "\n  generator:\n";
        print_matrix(*d.generator);
    } else {
        std::cout << "  not a field\n";
        if (d.refutation == FieldDecision::Refutation::reducible_min_poly) {
            std::cout << "  witness with reducible minimal polynomial "
                      << poly_to_text(*d.witness_min_poly) << ":\n";
            print_matrix(*d.reducible_witness);
        }
    }
}

} // namespace

int main() {
    std::mt19937_64 rng(42);
    ExtFieldCtx f81(Fp(3), 4);

    // two multiplication matrices, conjugated by a random basis change
    FpMatrix p(Fp(3), 4);
    do {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                p.set(i, j, std::uniform_int_distribution<u64>(0, 2)(rng));
    } while (!p.is_invertible());
    FpMatrix pinv = p.inverse();

    FpMatrix a = pinv * f81.mult_matrix(f81.from_value(7)) * p;
    FpMatrix b = pinv * f81.mult_matrix(f81.from_value(30)) * p;

    std::cout << "conjugated multiplication matrices of F_81 in Mat_4(F_3):\n";
    describe(finite_field_decide({a, b}));

    std::cout << "\nsame matrices plus a random conjugate that breaks commutativity:\n";
    FpMatrix c = p * f81.mult_matrix(f81.from_value(7)) * pinv;
    describe(finite_field_decide({a, b, c}));
    return 0;
}
