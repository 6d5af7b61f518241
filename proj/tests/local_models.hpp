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

// Explicit local models at t = 0, one per row of the Kodaira table.

#ifndef KSTAB_TESTS_LOCAL_MODELS_HPP
#define KSTAB_TESTS_LOCAL_MODELS_HPP

#include <string>
#include <vector>

#include "kstab/literal.hpp"
#include "kstab/unipoly.hpp"

namespace kstab::models {

struct LocalModel {
    std::string row;  ///< expected type name
    std::string A, B;  ///< literals in t
    unsigned chi;  ///< smallest chi whose degree bounds fit the literals
};

inline std::vector<LocalModel> table_rows()
{
    return {
        {"I0", "-1", "1", 1},
        {"I1", "-3", "2 + t", 1},
        {"I4", "-3", "2 + t^4", 1},
        {"II", "0", "t", 1},
        {"III", "t", "0", 1},
        {"IV", "0", "t^2", 1},
        {"I0*", "0", "t^3", 1},
        {"I0*", "t^2", "0", 1},
        {"I0*", "-t^2", "t^3", 1},
        {"I1*", "-3*t^2", "2*t^3 + t^4", 1},
        {"I3*", "-3*t^2", "2*t^3 + t^6", 1},
        {"I5*", "-3*t^2", "2*t^3 + t^8", 2},
        {"IV*", "0", "t^4", 1},
        {"IV*", "t^3", "t^4", 1},
        {"III*", "t^3", "0", 1},
        {"III*", "t^3", "t^5", 1},
        {"II*", "0", "t^5", 1},
        {"II*", "t^4", "t^5", 1},
        {"non-minimal", "0", "t^6", 2},
        {"non-minimal", "t^4", "t^6", 2},
    };
}

}  // namespace kstab::models

#endif  // KSTAB_TESTS_LOCAL_MODELS_HPP
