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

#ifndef KSTAB_PLACE_HPP
#define KSTAB_PLACE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kstab/binary_form.hpp"
#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab {

/// Order of vanishing, with +infinity for the zero form.
class Valuation {
public:
    constexpr Valuation(unsigned v = 0) : v_(v), inf_(false) {}
    static constexpr Valuation infinity()
    {
        Valuation r;
        r.inf_ = true;
        return r;
    }

    constexpr bool is_infinite() const { return inf_; }
    /// Throws std::domain_error for the infinite valuation.
    unsigned value() const;
    /// v >= k; always true for +infinity.
    constexpr bool at_least(unsigned k) const { return inf_ || v_ >= k; }
    constexpr bool equals(unsigned k) const { return !inf_ && v_ == k; }

    friend constexpr bool operator==(const Valuation& a, const Valuation& b)
    {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend Valuation operator+(const Valuation& a, const Valuation& b);

    /// Decimal value or "inf".
    std::string str() const;

private:
    unsigned v_;
    bool inf_;
};

/// A closed point of P^1 over Q, or a cluster of Galois orbits.
///
/// Finite places are the zero locus of a monic squarefree q(t) of positive
/// degree in the chart s = 1; the point at infinity is s = 0. A cluster may
/// contain several Galois orbits; known_irreducible() is only set when that
/// is certain (degree one).
class Place {
public:
    static Place infinity() { return Place(); }
    /// Normalizes q to monic; throws std::invalid_argument unless q is
    /// squarefree of positive degree.
    static Place finite(const UniPoly& q);
    /// The rational point t = a.
    static Place point(const Rational& a) { return finite(UniPoly::linear(a)); }

    bool is_infinity() const { return inf_; }
    /// Defining polynomial; empty for infinity.
    const UniPoly& poly() const { return q_; }
    std::size_t degree() const { return inf_ ? 1 : *q_.degree(); }
    bool known_irreducible() const { return degree() == 1; }

    /// "infinity" or the defining polynomial, e.g. "t - 1".
    std::string str() const;

    friend bool operator==(const Place& a, const Place& b) { return a.inf_ == b.inf_ && a.q_ == b.q_; }
    /// Infinity first, then by degree; rational points ascend by coordinate.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place() = default;
    bool inf_ = true;
    UniPoly q_;
};

/// Largest k such that the place polynomial (s at infinity) to the k divides F.
Valuation valuation(const BinaryForm& f, const Place& p);

struct PlaceProfile {
    Place place;
    std::vector<Valuation> valuations;  ///< one per input form
};

/// Splits the zero locus of the product of the nonzero forms into places on
/// which every form has constant valuation. Places are returned sorted.
/// Throws std::invalid_argument("indeterminate profile") when all forms are zero.
std::vector<PlaceProfile> place_profile(std::span<const BinaryForm> forms);

/// Formal Q-divisor on P^1. Zero coefficients are never stored.
class DivisorP1 {
public:
    DivisorP1() = default;

    /// Adds c * p (accumulating onto an existing coefficient).
    void add(const Place& p, const Rational& c);
    Rational coefficient(const Place& p) const;

    /// sum of coefficient * degree(place).
    Rational degree() const;
    bool empty() const { return terms_.empty(); }
    const std::map<Place, Rational>& terms() const { return terms_; }

    friend bool operator==(const DivisorP1& a, const DivisorP1& b) = default;

private:
    std::map<Place, Rational> terms_;
};

}  // namespace kstab

#endif  // KSTAB_PLACE_HPP
