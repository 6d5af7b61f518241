/*
   Copyright 2026 The kstab Authors

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

// Step-by-step Tate's algorithm over Q[t] localized at t = 0.
//
// Test-only reference: it walks the coordinate changes explicitly and never
// consults a valuation lookup table.

#ifndef KSTAB_TESTS_TATE_ORACLE_HPP
#define KSTAB_TESTS_TATE_ORACLE_HPP

#include <string>

#include "kstab/unipoly.hpp"

namespace kstab::oracle {

struct TateResult {
    std::string type;       ///< "I0", "I3", "II", ..., "I2*", "II*", or "non-minimal"
    unsigned disc_valuation;
    unsigned steps;         ///< number of the step that terminated
};

/// Local Kodaira type at t = 0 of y^2 = x^3 + A(t) x + B(t).
TateResult tate_at_origin(const UniPoly& A, const UniPoly& B);

}  // namespace kstab::oracle

#endif  // KSTAB_TESTS_TATE_ORACLE_HPP
