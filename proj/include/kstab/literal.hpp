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

#ifndef KSTAB_LITERAL_HPP
#define KSTAB_LITERAL_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/errors.hpp"
#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab {

/// Sparse polynomial keyed by exponent vectors.
using SparsePoly = std::map<std::vector<unsigned>, Rational>;

/// Parses a polynomial literal such as "4*t^3 - 2/3*t + 1".
///
/// Grammar: sums and differences of products; '^' takes a nonnegative
/// integer exponent; '/' only by a nonzero constant; parentheses nest.
/// Identifiers must be listed in \p vars or bound in \p constants.
/// Throws ParseError with the line and column of the offending token.
SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const std::map<std::string, Rational>& constants = {});

/// Univariate convenience wrapper over the variable \p var.
UniPoly parse_univariate(std::string_view text, const std::string& var = "t",
                         const std::map<std::string, Rational>& constants = {});

}  // namespace kstab

#endif  // KSTAB_LITERAL_HPP
