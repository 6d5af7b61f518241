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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

#include "gen.hpp"
#include "kstab/binary_form.hpp"
#include "kstab/errors.hpp"
#include "kstab/literal.hpp"
#include "kstab/place.hpp"

using namespace kstab;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Valuation by peeling off one factor at a time with plain long division.
unsigned peel(UniPoly f, const UniPoly& p)
{
    unsigned k = 0;
    for (;;) {
        auto [quo, rem] = divmod(f, p);
        if (!rem.is_zero()) return k;
        f = quo;
        ++k;
    }
}

BinaryForm padded(const std::string& lit, std::size_t degree) { return BinaryForm::homogenize(parse_univariate(lit), degree); }

using ProfileKey = std::pair<std::size_t, std::vector<std::string>>;

std::vector<ProfileKey> profile_keys(std::span<const BinaryForm> forms)
{
    std::vector<ProfileKey> keys;
    for (const auto& pp : place_profile(forms)) {
        std::vector<std::string> v;
        for (const auto& x : pp.valuations) v.push_back(x.str());
        keys.emplace_back(pp.place.degree(), v);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

// Expands each cluster into (degree-1 weight units) so that multisets can be
// compared even when gcd splitting groups Galois orbits differently.
std::vector<std::vector<std::string>> profile_units(std::span<const BinaryForm> forms)
{
    std::vector<std::vector<std::string>> units;
    for (const auto& [deg, v] : profile_keys(forms))
        for (std::size_t i = 0; i < deg; ++i) units.push_back(v);
    std::sort(units.begin(), units.end());
    return units;
}

}  // namespace

TEST_CASE("rationals are canonical")
{
    CHECK(q(6, -4).str() == "-3/2");
    CHECK(q(6, -4).denominator() == 2);
    CHECK(Rational::parse("10/4") == q(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
    CHECK(q(2, 3).pow(3) == q(8, 27));
    CHECK(q(-1, 3) < q(1, 4));
}

TEST_CASE("zero polynomial has no degree")
{
    UniPoly z;
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    CHECK((UniPoly{q(1), q(2)} - UniPoly{q(1), q(2)}).is_zero());
    CHECK(UniPoly{q(0), q(0)}.is_zero());
}

TEST_CASE("gcd divides both inputs and leaves coprime cofactors")
{
    gen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        UniPoly common = rng.poly(4, 5);
        UniPoly p = rng.poly(8, 9, 3) * common;
        UniPoly r = rng.poly(8, 9, 3) * common;
        if (p.is_zero() || r.is_zero()) continue;
        const UniPoly g = gcd(p, r);
        REQUIRE(divides(g, p));
        REQUIRE(divides(g, r));
        const UniPoly h = gcd(exact_div(p, g), exact_div(r, g));
        CHECK(*h.degree() == 0);
    }
}

TEST_CASE("squarefree decomposition reconstructs the monic input")
{
    gen::Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        UniPoly p = UniPoly::constant(1);
        for (int k = 0; k < 3; ++k) p *= rng.poly(2, 4).pow(static_cast<unsigned>(rng.integer(1, 3)));
        if (p.is_zero() || *p.degree() == 0) continue;
        UniPoly back = UniPoly::constant(1);
        for (const auto& [k, g] : squarefree_decomposition(p)) {
            CHECK(*gcd(g, g.derivative()).degree() == 0);
            back *= g.pow(k);
        }
        CHECK(back == p.monic());
        CHECK(squarefree_part(p) == squarefree_part(back));
    }
}

TEST_CASE("polynomial shift matches substitution")
{
    gen::Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const UniPoly p = rng.poly(7, 6, 2);
        const Rational c = rng.rational(5, 3), x = rng.rational(5, 4);
        CHECK(p.shift(c)(x) == p(x + c));
    }
}

TEST_CASE("valuation reads vanishing order at finite places and infinity")
{
    const BinaryForm f = BinaryForm::monomial(6, 1);  // s^5 t
    CHECK(f.str() == "s^5*t");
    CHECK(valuation(f, Place::infinity()) == Valuation(5));
    CHECK(valuation(f, Place::point(0)) == Valuation(1));
    CHECK(valuation(f, Place::point(1)) == Valuation(0));
    CHECK(valuation(BinaryForm(4), Place::point(0)).is_infinite());

    const UniPoly t2p1{q(1), q(0), q(1)};
    const BinaryForm g = BinaryForm::homogenize(t2p1.pow(3), 12);
    CHECK(valuation(g, Place::finite(t2p1)) == Valuation(peel(g.dehomogenize(), t2p1)));
    CHECK(peel(g.dehomogenize(), t2p1) == 3);
    CHECK(valuation(g, Place::infinity()) == Valuation(6));
}

TEST_CASE("extreme coefficients are the values at the coordinate points")
{
    gen::Rng rng(14);
    for (int trial = 0; trial < 50; ++trial) {
        const BinaryForm f = rng.form(static_cast<std::size_t>(rng.integer(0, 8)), 9);
        CHECK(f.evaluate(1, 0) == f.coeff(0));
        CHECK(f.evaluate(0, 1) == f.coeff(f.degree()));
    }
}

TEST_CASE("valuation is additive")
{
    gen::Rng rng(15);
    const std::array<Place, 4> places{Place::infinity(), Place::point(0), Place::point(q(-1, 2)),
                                      Place::finite(UniPoly{q(-2), q(0), q(1)})};
    for (int trial = 0; trial < 200; ++trial) {
        BinaryForm f = rng.form(static_cast<std::size_t>(rng.integer(0, 6)), 3, 0.5);
        BinaryForm g = rng.form(static_cast<std::size_t>(rng.integer(0, 6)), 3, 0.5);
        if (f.is_zero() || g.is_zero()) continue;
        for (const auto& p : places) CHECK(valuation(f * g, p) == valuation(f, p) + valuation(g, p));
    }
}

TEST_CASE("place ordering and validation")
{
    CHECK(Place::infinity() < Place::point(0));
    CHECK(Place::point(0) < Place::finite(UniPoly{q(1), q(0), q(1)}));
    CHECK(Place::finite(UniPoly{q(-2), q(2)}) == Place::point(1));
    CHECK(Place::point(1).str() == "t - 1");
    CHECK(Place::infinity().str() == "infinity");
    CHECK_THROWS_AS(Place::finite(UniPoly{q(1), q(2), q(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Place::finite(UniPoly{q(3)}), std::invalid_argument);
    CHECK(Place::point(3).known_irreducible());
    CHECK_FALSE(Place::finite(UniPoly{q(-1), q(0), q(1)}).known_irreducible());
}

TEST_CASE("place_profile on small examples")
{
    {
        const std::vector<BinaryForm> forms{BinaryForm::monomial(6, 1)};
        const auto pr = place_profile(forms);
        REQUIRE(pr.size() == 2);
        CHECK(pr[0].place.is_infinity());
        CHECK(pr[0].valuations == std::vector<Valuation>{5});
        CHECK(pr[1].place == Place::point(0));
        CHECK(pr[1].valuations == std::vector<Valuation>{1});
    }
    {
        const std::vector<BinaryForm> forms{padded("t*(t-1)", 2), padded("t", 1)};
        const auto pr = place_profile(forms);
        REQUIRE(pr.size() == 2);
        CHECK(pr[0].place == Place::point(0));
        CHECK(pr[0].valuations == std::vector<Valuation>{1, 1});
        CHECK(pr[1].place == Place::point(1));
        CHECK(pr[1].valuations == std::vector<Valuation>{1, 0});
    }
    {
        const std::vector<BinaryForm> forms{BinaryForm(4), BinaryForm::monomial(6, 3), BinaryForm::monomial(12, 6, 31)};
        const auto pr = place_profile(forms);
        REQUIRE(pr.size() == 2);
        const std::vector<Valuation> expect{Valuation::infinity(), 3, 6};
        CHECK(pr[0].place.is_infinity());
        CHECK(pr[0].valuations == expect);
        CHECK(pr[1].place == Place::point(0));
        CHECK(pr[1].valuations == expect);
    }
    {
        const std::vector<BinaryForm> forms{BinaryForm(4), BinaryForm(6)};
        CHECK_THROWS_WITH_AS(place_profile(forms), "indeterminate profile", std::invalid_argument);
    }
}

TEST_CASE("profile degrees account for the full degree of each form")
{
    gen::Rng rng(16);
    for (int trial = 0; trial < 150; ++trial) {
        // Build forms from a few shared factors so that splitting matters.
        std::vector<UniPoly> factors{UniPoly{q(0), q(1)}, UniPoly{q(-1), q(1)}, UniPoly{q(1), q(0), q(1)},
                                     UniPoly{q(-2), q(0), q(1)}, UniPoly{q(3), q(1)}};
        std::vector<BinaryForm> forms;
        for (int f = 0; f < 3; ++f) {
            UniPoly p = UniPoly::constant(rng.nonzero_rational(5));
            for (const auto& fac : factors) p *= fac.pow(static_cast<unsigned>(rng.integer(0, 2)));
            const std::size_t d = *p.degree() + static_cast<std::size_t>(rng.integer(0, 3));
            forms.push_back(BinaryForm::homogenize(p, d));
        }
        const auto pr = place_profile(forms);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            std::size_t total = 0;
            for (const auto& pp : pr) total += pp.place.degree() * pp.valuations[i].value();
            CHECK(total == forms[i].degree());
        }
        for (const auto& pp : pr) {
            bool vanishes = false;
            for (const auto& v : pp.valuations) vanishes = vanishes || !v.equals(0);
            CHECK(vanishes);
        }
    }
}

TEST_CASE("mobius examples")
{
    const BinaryForm f = BinaryForm::monomial(6, 1);
    const Mat2 id{{{q(1), q(0)}, {q(0), q(1)}}};
    const Mat2 swap{{{q(0), q(1)}, {q(1), q(0)}}};
    CHECK(mobius(f, id) == f);
    CHECK(mobius(f, swap) == BinaryForm::monomial(6, 5));
    const Mat2 shear{{{q(1), q(0)}, {q(1), q(1)}}};
    CHECK(mobius(BinaryForm::monomial(2, 2), shear) == BinaryForm(2, {q(1), q(2), q(1)}));
    const Mat2 singular{{{q(1), q(2)}, {q(2), q(4)}}};
    CHECK_THROWS_AS(mobius(f, singular), std::invalid_argument);
}

TEST_CASE("mobius permutes valuation profiles")
{
    gen::Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<BinaryForm> forms{rng.form(4, 4, 0.6), rng.form(6, 4, 0.6)};
        if (forms[0].is_zero() && forms[1].is_zero()) continue;
        const Mat2 g = rng.invertible(3);
        std::vector<BinaryForm> moved{mobius(forms[0], g), mobius(forms[1], g)};
        CHECK(moved[0].degree() == 4);
        // Cluster shapes may differ, but the per-point data must agree.
        CHECK(profile_units(forms) == profile_units(moved));
    }
}

TEST_CASE("divisors drop zero coefficients and sum degrees")
{
    DivisorP1 D;
    D.add(Place::point(0), q(1, 2));
    D.add(Place::finite(UniPoly{q(1), q(0), q(1)}), q(1, 3));
    D.add(Place::infinity(), q(1, 6));
    CHECK(D.degree() == q(1, 2) + q(2, 3) + q(1, 6));
    D.add(Place::point(0), q(-1, 2));
    CHECK(D.terms().size() == 2);
    CHECK(D.coefficient(Place::point(0)).is_zero());
}

TEST_CASE("polynomial literals")
{
    CHECK(parse_univariate("4*t^3 - 2/3*t + 1") == UniPoly{q(1), q(-2, 3), q(0), q(4)});
    CHECK(parse_univariate("(t+1)^2") == UniPoly{q(1), q(2), q(1)});
    CHECK(parse_univariate("-t^2") == UniPoly{q(0), q(0), q(-1)});
    CHECK(parse_univariate("0").is_zero());
    CHECK(parse_univariate("t + c*t^6", "t", {{"c", q(2)}}) == UniPoly{q(0), q(1), q(0), q(0), q(0), q(0), q(2)});
    const SparsePoly cubic = parse_polynomial("x^2*z + y^3", {"x", "y", "z"});
    CHECK(cubic.size() == 2);
    CHECK(cubic.at({2, 0, 1}) == q(1));

    try {
        parse_univariate("t +\n  3*u");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_univariate("t^"), ParseError);
    CHECK_THROWS_AS(parse_univariate("1/t"), ParseError);
    CHECK_THROWS_AS(parse_univariate("1/0"), ParseError);
    CHECK_THROWS_AS(parse_univariate("(t+1"), ParseError);
    CHECK_THROWS_AS(parse_univariate(""), ParseError);
    CHECK_THROWS_AS(parse_univariate("t t"), ParseError);
}
