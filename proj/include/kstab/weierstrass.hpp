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

#ifndef KSTAB_WEIERSTRASS_HPP
#define KSTAB_WEIERSTRASS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kstab/binary_form.hpp"
#include "kstab/errors.hpp"
#include "kstab/place.hpp"

namespace kstab {

/// Kodaira fiber type. The index n is only meaningful for I_n and I_n*.
class KodairaType {
public:
    enum class Kind { I, II, III, IV, IStar, IVStar, IIIStar, IIStar };

    static KodairaType I(unsigned n) { return {Kind::I, n}; }
    static KodairaType IStar(unsigned n) { return {Kind::IStar, n}; }
    static KodairaType of(Kind k) { return {k, 0}; }

    /// Accepts "I0", "I12", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*".
    static KodairaType parse(std::string_view name);

    Kind kind() const { return kind_; }
    unsigned n() const { return n_; }
    /// Not of type I_n.
    bool additive() const { return kind_ != Kind::I; }
    std::string name() const;

    friend bool operator==(const KodairaType&, const KodairaType&) = default;
    friend auto operator<=>(const KodairaType&, const KodairaType&) = default;

private:
    KodairaType(Kind k, unsigned n) : kind_(k), n_(n) {}
    Kind kind_;
    unsigned n_;
};

/// Marker for a place where the model can be reduced (vA >= 4, vB >= 6).
struct NonMinimal {
    friend bool operator==(const NonMinimal&, const NonMinimal&) = default;
};

using FiberClass = std::variant<KodairaType, NonMinimal>;

/// Kodaira type from the valuations of A, B and the discriminant at a place
/// (residue characteristic zero). Throws InputError("inconsistent valuation
/// triple") when no row of the table matches.
FiberClass classify_fiber(Valuation vA, Valuation vB, Valuation vD);

/// Rejects a place where the model is not minimal.
class NonMinimalError : public InputError {
public:
    explicit NonMinimalError(const Place& p)
        : InputError("model is not minimal at " + p.str() + "; rerun with --minimalize"), place_(p)
    {
    }
    const Place& place() const { return place_; }

private:
    Place place_;
};

/// y^2 = x^3 + A x + B over P^1 with deg A = 4 chi and deg B = 6 chi.
class WeierstrassModel {
public:
    /// Validates degrees, chi >= 1 and a nonzero discriminant.
    WeierstrassModel(BinaryForm A, BinaryForm B, unsigned chi);

    /// Homogenizes affine literals in t to degrees 4 chi and 6 chi.
    static WeierstrassModel from_literals(std::string_view A, std::string_view B, unsigned chi,
                                          const std::map<std::string, Rational>& constants = {});

    const BinaryForm& A() const { return A_; }
    const BinaryForm& B() const { return B_; }
    unsigned chi() const { return chi_; }
    const BinaryForm& discriminant() const { return D_; }

private:
    BinaryForm A_, B_, D_;
    unsigned chi_;
};

/// 4 A^3 + 27 B^2; throws InputError("generically singular model") if it vanishes.
BinaryForm discriminant(const BinaryForm& A, const BinaryForm& B);

/// One classified fiber. Weierstrass input always has m = 1.
struct FiberEntry {
    KodairaType type;
    unsigned m = 1;
    std::size_t deg = 1;  ///< degree of the place (number of geometric fibers)
    std::optional<Place> place;
    std::optional<std::vector<Valuation>> triple;  ///< (vA, vB, vD) when known
};

struct FiberConfig {
    std::vector<FiberEntry> entries;
    unsigned chi = 1;
};

/// Classifies every singular fiber. Throws NonMinimalError at the first
/// non-minimal place.
FiberConfig analyze(const WeierstrassModel& model);

struct MinimalizeResult {
    WeierstrassModel model;
    std::vector<Place> removed;  ///< one entry per reduction step
};

/// Divides out q^4, q^6 at every non-minimal place until none is left.
MinimalizeResult minimalize(const WeierstrassModel& model);

}  // namespace kstab

#endif  // KSTAB_WEIERSTRASS_HPP
