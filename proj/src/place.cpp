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

#include "kstab/place.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab {

unsigned Valuation::value() const
{
    if (inf_) throw std::domain_error("infinite valuation has no integer value");
    return v_;
}

Valuation operator+(const Valuation& a, const Valuation& b)
{
    if (a.inf_ || b.inf_) return Valuation::infinity();
    return Valuation(a.v_ + b.v_);
}

std::string Valuation::str() const { return inf_ ? "inf" : std::to_string(v_); }

Place Place::finite(const UniPoly& q)
{
    if (q.is_zero() || *q.degree() == 0)
        throw std::invalid_argument("place polynomial must have positive degree");
    if (*gcd(q, q.derivative()).degree() != 0)
        throw std::invalid_argument("place polynomial " + q.str() + " is not squarefree");
    Place p;
    p.inf_ = false;
    p.q_ = q.monic();
    return p;
}

std::string Place::str() const { return inf_ ? "infinity" : q_.str(); }

std::strong_ordering operator<=>(const Place& a, const Place& b)
{
    if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.inf_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const auto& x = a.q_.coeffs();
    const auto& y = b.q_.coeffs();
    // Descending coefficients from t^0 up, so linear places sort by root.
    for (std::size_t i = 0; i < x.size(); ++i)
        if (auto c = y[i] <=> x[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Valuation valuation(const BinaryForm& f, const Place& p)
{
    if (f.is_zero()) return Valuation::infinity();
    const UniPoly g = f.dehomogenize();
    if (p.is_infinity()) return Valuation(static_cast<unsigned>(f.degree() - *g.degree()));
    return Valuation(multiplicity(g, p.poly()));
}

namespace {

// Refines a partition of squarefree factors so that each part divides
// exactly one of the given coprime pieces or none of them.
std::vector<UniPoly> refine(const std::vector<UniPoly>& parts, const UniPoly& piece)
{
    std::vector<UniPoly> out;
    for (const auto& q : parts) {
        const UniPoly g = gcd(q, piece);
        if (*g.degree() == 0 || *g.degree() == *q.degree()) {
            out.push_back(q);
            continue;
        }
        out.push_back(g);
        out.push_back(exact_div(q, g).monic());
    }
    return out;
}

}  // namespace

std::vector<PlaceProfile> place_profile(std::span<const BinaryForm> forms)
{
    bool any = false;
    bool at_infinity = false;
    UniPoly product = UniPoly::constant(1);
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        any = true;
        const UniPoly g = f.dehomogenize();
        if (*g.degree() < f.degree()) at_infinity = true;
        product *= g;
    }
    if (!any) throw std::invalid_argument("indeterminate profile");

    std::vector<Place> places;
    if (at_infinity) places.push_back(Place::infinity());
    if (*product.degree() > 0) {
        std::vector<UniPoly> parts{squarefree_part(product)};
        for (const auto& f : forms) {
            if (f.is_zero()) continue;
            const UniPoly g = f.dehomogenize();
            if (*g.degree() == 0) continue;
            for (const auto& [k, gk] : squarefree_decomposition(g)) parts = refine(parts, gk);
        }
        for (const auto& q : parts) places.push_back(Place::finite(q));
    }
    std::sort(places.begin(), places.end());

    std::vector<PlaceProfile> out;
    out.reserve(places.size());
    for (const auto& p : places) {
        PlaceProfile pp{p, {}};
        pp.valuations.reserve(forms.size());
        for (const auto& f : forms) pp.valuations.push_back(valuation(f, p));
        out.push_back(std::move(pp));
    }
    return out;
}

void DivisorP1::add(const Place& p, const Rational& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational DivisorP1::coefficient(const Place& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational DivisorP1::degree() const
{
    Rational acc;
    for (const auto& [p, c] : terms_) acc += c * Rational(static_cast<unsigned long>(p.degree()));
    return acc;
}

}  // namespace kstab
