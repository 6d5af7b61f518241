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

#ifndef KSTAB_CANBUNDLE_HPP
#define KSTAB_CANBUNDLE_HPP

#include <span>
#include <string>
#include <vector>

#include "kstab/place.hpp"
#include "kstab/rational.hpp"
#include "kstab/weierstrass.hpp"

namespace kstab {

struct LctEntry {
    KodairaType type;
    Rational lct;
    unsigned euler;
};

/// Log canonical threshold and topological Euler number of a reduced fiber.
LctEntry lct_entry(const KodairaType& type);
unsigned euler_number(const KodairaType& type);

/// lct of a fiber of the given type with multiplicity m. Multiple fibers
/// (m > 1) must be of type I_n and have lct 1/m.
Rational lct_of_fiber(const KodairaType& type, unsigned m);

/// Human readable violations; empty when the configuration is consistent.
std::vector<std::string> validate_config(const FiberConfig& config);

struct BaseData {
    DivisorP1 discriminant;  ///< B, coefficients 1 - lct
    Rational moduli_degree;  ///< deg M
    unsigned chi = 1;
    std::vector<Rational> moduli_contributions;  ///< per entry, in input order
};

/// Canonical bundle formula data of the base. Entries without a place are
/// given fresh rational-point clusters. Throws InputError if the
/// configuration does not validate.
BaseData base_data(const FiberConfig& config);

/// (2g - 2) + deg B + deg M, plus 1 - 1/m for every extra multiple fiber.
Rational twisted_canonical_degree(unsigned genus, const BaseData& base, std::span<const unsigned> extra_multiple = {});

}  // namespace kstab

#endif  // KSTAB_CANBUNDLE_HPP
