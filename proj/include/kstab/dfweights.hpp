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

#ifndef KSTAB_DFWEIGHTS_HPP
#define KSTAB_DFWEIGHTS_HPP

#include <optional>
#include <vector>

#include "kstab/binary_form.hpp"
#include "kstab/literal.hpp"
#include "kstab/rational.hpp"
#include "kstab/stability.hpp"

namespace kstab {

/// Leading coefficients of the Hilbert polynomial a0 k^n + a1 k^(n-1) and
/// of the total weight b0 k^(n+1) + b1 k^n, with the optional boundary part
/// (aHat0 k^(n-1), bHat0 k^n).
struct WeightData {
    unsigned n = 1;
    Rational a0, a1, b0, b1;
    std::optional<Rational> aHat0, bHat0;

    /// a0 > 0 and the boundary part given in full or not at all.
    void validate() const;
};

/// 2 ((n+1)!/a0)(b1 a0 - a1 b0) + ((n+1)!/a0)(bHat0 a0 - aHat0 b0).
Rational cm_weight(const WeightData& data);

/// Total weight of the degree kd monomials in two variables acting with
/// weights (w0, w1).
Integer weight_sum_p1(long d, long k, long w0, long w1);

/// Diagonal one-parameter subgroup; the weights must sum to zero.
struct OnePS {
    std::vector<long> weights;
    void validate(std::size_t dim) const;
};

/// -min <lam, alpha> over the support of a homogeneous ternary form.
long hm_weight_form(const SparsePoly& form, const OnePS& lam);

/// Weight of the pencil <F, G> in the Pluecker embedding: -min over the
/// nonzero coordinates F_a G_b - F_b G_a of <lam, a + b>.
long hm_weight_pencil(const SparsePoly& F, const SparsePoly& G, const OnePS& lam);

/// Weight of (A, B) in V4 x V6 under diag(q^a, q^-a) on (s, t); the A and B
/// summands are scaled 3 : 2. A zero form contributes nothing.
long miranda_weight(const BinaryForm& A, const BinaryForm& B, long a);

/// Both routes to the Donaldson-Futaki invariant of the degeneration of a
/// log-twisted Fano curve to a rational point p.
struct PointDegeneration {
    WeightData data;   ///< weight data of the test configuration
    Rational cm;       ///< cm_weight(data)
    Rational via_weights;  ///< cm / ((n+1)! a0)
    Rational via_beta;     ///< beta(p) / d
};

PointDegeneration point_degeneration(const LogTwistedCurve& pair, const Place& p);

/// beta(p) / d, after checking it against the weight route (InvariantError
/// carrying both values if they differ).
Rational point_degeneration_df(const LogTwistedCurve& pair, const Place& p);

}  // namespace kstab

#endif  // KSTAB_DFWEIGHTS_HPP
