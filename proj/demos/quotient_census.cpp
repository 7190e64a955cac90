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
 * The quotient-set invariant at work.
 *
 * Over F_27 the squaring polynomial x^2 and the twisted monomial x^(p+1)
 * are both planar, but their spread-set quotients look completely
 * different: x^2 gives exactly p^n = 27 quotients (a field), while the
 * twisted monomial gives 315.  The canonical-form census digest separates
 * the two, stays fixed under random linear equivalence transforms, and the
 * squaring-equivalence decision certifies each verdict.
 */

#include <iostream>
#include <random>

#include "doquot.hpp"

using namespace doquot;

namespace {

void inspect(const ExtFieldCtx& k, const char* name, const DOPoly& g, std::mt19937_64& rng) {
    QuotSet q = quot_set(k, g);
    RcfMultiset census = rcf_multiset(q);
    X2Certificate cert = decide_x2(k, g);

    std::cout << name << ":\n";
    std::cout << "  planar: " << (is_planar(k, g) ? "yes" : "no") << '\n';
    std::cout << "  |Quot| = " << q.size() << "  (bounds " << k.order() << " .. "
              << quot_upper_bound(k.p(), k.degree()) << ")\n";
    std::cout << "  census classes: " << census.classes.size() << ", digest "
              << census.digest().substr(0, 16) << "...\n";
    std::cout << "  equivalent to x^2: " << (cert.verdict ? "yes" : "no") << '\n';

    LinearizedPoly inner = random_linearized_permutation(k, rng);
    LinearizedPoly outer = random_linearized_permutation(k, rng);
    DOPoly g2 = apply_linear_equivalence(k, g, inner, outer);
    RcfMultiset census2 = rcf_multiset(quot_set(k, g2));
    std::cout << "  digest after a random equivalence transform: "
              << (census2.digest() == census.digest() ? "unchanged" : "CHANGED!") << "\n\n";
}

} // namespace

int main() {
    std::mt19937_64 rng(7);
    ExtFieldCtx k(Fp(3), 3);

    inspect(k, "x^2 over F_27", do_x_squared(k), rng);
    inspect(k, "x^(p+1) over F_27", do_power_monomial(k, 1), rng);
    inspect(k, "x^(p^2+1) over F_27", do_power_monomial(k, 2), rng);
    return 0;
}
