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

#ifndef KSTAB_BINARY_FORM_HPP
#define KSTAB_BINARY_FORM_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "kstab/rational.hpp"
#include "kstab/unipoly.hpp"

namespace kstab {

/// Homogeneous binary form of fixed degree d in (s, t).
///
/// Slot i holds the coefficient of s^(d-i) t^i, so the affine chart s = 1
/// reads the form as the polynomial sum_i c_i t^i. Slot 0 is the value at
/// [1:0] (the point t = 0) and slot d the value at [0:1] (the point at
/// infinity, s = 0).
class BinaryForm {
public:
    BinaryForm() = default;
    /// The zero form of degree d.
    explicit BinaryForm(std::size_t degree) : d_(degree), c_(degree + 1) {}
    BinaryForm(std::size_t degree, std::vector<Rational> coeffs);

    /// Homogenizes p(t) to degree d; throws std::invalid_argument if deg p > d.
    static BinaryForm homogenize(const UniPoly& p, std::size_t degree);
    /// s^(d-i) t^i with coefficient c.
    static BinaryForm monomial(std::size_t degree, std::size_t i, const Rational& c = Rational(1));

    std::size_t degree() const { return d_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(std::size_t i) const { return c_.at(i); }
    bool is_zero() const;

    /// The affine polynomial F(1, t).
    UniPoly dehomogenize() const { return UniPoly(c_); }

    /// F(s, t) at a point given in homogeneous coordinates.
    Rational evaluate(const Rational& s, const Rational& t) const;

    BinaryForm pow(unsigned e) const;

    /// Requires equal degrees.
    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator*=(const Rational& c);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator*(BinaryForm a, const Rational& c) { return a *= c; }
    friend BinaryForm operator*(const Rational& c, BinaryForm a) { return a *= c; }
    /// Degrees add.
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;

    /// e.g. "s^5*t", "0".
    std::string str() const;

private:
    std::size_t d_ = 0;
    std::vector<Rational> c_{Rational(0)};
};

/// 2x2 rational matrix, row major.
using Mat2 = std::array<std::array<Rational, 2>, 2>;

Rational det(const Mat2& g);

/// F composed with the substitution (s, t) -> g (s, t), i.e.
/// s -> g00 s + g01 t and t -> g10 s + g11 t. Throws on singular g.
BinaryForm mobius(const BinaryForm& f, const Mat2& g);

}  // namespace kstab

#endif  // KSTAB_BINARY_FORM_HPP
