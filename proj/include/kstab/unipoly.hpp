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

#ifndef KSTAB_UNIPOLY_HPP
#define KSTAB_UNIPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kstab/rational.hpp"

namespace kstab {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of t^i.
/// The coefficient vector is trimmed, so the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }
    /// c * t^k
    static UniPoly monomial(const Rational& c, std::size_t k);
    /// t - root
    static UniPoly linear(const Rational& root) { return UniPoly({-root, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Empty for the zero polynomial.
    std::optional<std::size_t> degree() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    /// Coefficient of t^i (zero beyond the degree).
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;

    UniPoly monic() const;
    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;
    /// p(t + c)
    UniPoly shift(const Rational& c) const;

    /// Order of vanishing at t = 0; the zero polynomial is rejected.
    std::size_t low_order() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Human readable form in the variable `var`, e.g. "t^2 - 2/3*t + 1".
    std::string str(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// a / b, throwing std::domain_error unless b divides a exactly.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

bool divides(const UniPoly& b, const UniPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Monic squarefree part (product of the distinct irreducible factors).
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition p = lc * prod_k g_k^k with monic, squarefree, pairwise
/// coprime g_k. Only factors of positive degree are returned, as (k, g_k).
std::vector<std::pair<unsigned, UniPoly>> squarefree_decomposition(const UniPoly& p);

/// Largest k with q^k | p, for nonconstant q and nonzero p.
unsigned multiplicity(const UniPoly& p, const UniPoly& q);

}  // namespace kstab

#endif  // KSTAB_UNIPOLY_HPP
