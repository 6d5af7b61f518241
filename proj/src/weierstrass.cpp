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

#include "kstab/weierstrass.hpp"

#include <array>
#include <cctype>

#include "kstab/literal.hpp"

namespace kstab {

KodairaType KodairaType::parse(std::string_view name)
{
    static const std::array<std::pair<std::string_view, Kind>, 6> fixed{{{"II", Kind::II},
                                                                         {"III", Kind::III},
                                                                         {"IV", Kind::IV},
                                                                         {"IV*", Kind::IVStar},
                                                                         {"III*", Kind::IIIStar},
                                                                         {"II*", Kind::IIStar}}};
    for (const auto& [s, k] : fixed)
        if (name == s) return of(k);
    std::string_view rest = name;
    if (rest.empty() || rest.front() != 'I') throw InputError("unknown fiber type '" + std::string(name) + "'");
    rest.remove_prefix(1);
    const bool star = !rest.empty() && rest.back() == '*';
    if (star) rest.remove_suffix(1);
    if (rest.empty() || rest.size() > 6) throw InputError("unknown fiber type '" + std::string(name) + "'");
    unsigned n = 0;
    for (char c : rest) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("unknown fiber type '" + std::string(name) + "'");
        n = n * 10 + static_cast<unsigned>(c - '0');
    }
    return star ? IStar(n) : I(n);
}

std::string KodairaType::name() const
{
    switch (kind_) {
    case Kind::I: return "I" + std::to_string(n_);
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::IStar: return "I" + std::to_string(n_) + "*";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
    }
    return "?";
}

FiberClass classify_fiber(Valuation vA, Valuation vB, Valuation vD)
{
    using K = KodairaType::Kind;
    if (vD.is_infinite()) throw InputError("inconsistent valuation triple: discriminant vanishes identically");
    const unsigned d = vD.value();
    if (vA.at_least(4) && vB.at_least(6)) return NonMinimal{};
    if (d == 0) return KodairaType::I(0);
    if (vA.equals(0)) return KodairaType::I(d);
    if (vA.at_least(1) && vB.equals(1) && d == 2) return KodairaType::of(K::II);
    if (vA.equals(1) && vB.at_least(2) && d == 3) return KodairaType::of(K::III);
    if (vA.at_least(2) && vB.equals(2) && d == 4) return KodairaType::of(K::IV);
    if (vA.at_least(2) && vB.at_least(3) && d == 6) return KodairaType::IStar(0);
    if (vA.equals(2) && vB.equals(3) && d > 6) return KodairaType::IStar(d - 6);
    if (vA.at_least(3) && vB.equals(4) && d == 8) return KodairaType::of(K::IVStar);
    if (vA.equals(3) && vB.at_least(5) && d == 9) return KodairaType::of(K::IIIStar);
    if (vA.at_least(4) && vB.equals(5) && d == 10) return KodairaType::of(K::IIStar);
    throw InputError("inconsistent valuation triple (" + vA.str() + ", " + vB.str() + ", " + vD.str() + ")");
}

BinaryForm discriminant(const BinaryForm& A, const BinaryForm& B)
{
    BinaryForm D = Rational(4) * A.pow(3) + Rational(27) * B.pow(2);
    if (D.is_zero()) throw InputError("generically singular model");
    return D;
}

WeierstrassModel::WeierstrassModel(BinaryForm A, BinaryForm B, unsigned chi) : A_(std::move(A)), B_(std::move(B)), chi_(chi)
{
    if (chi_ == 0) throw InputError("chi must be positive");
    if (A_.degree() != 4 * chi_ || B_.degree() != 6 * chi_)
        throw InputError("A and B must have degrees 4*chi and 6*chi");
    if (A_.is_zero() && B_.is_zero()) throw InputError("A and B are both zero");
    D_ = kstab::discriminant(A_, B_);
}

WeierstrassModel WeierstrassModel::from_literals(std::string_view A, std::string_view B, unsigned chi,
                                                 const std::map<std::string, Rational>& constants)
{
    if (chi == 0) throw InputError("chi must be positive");
    const UniPoly a = parse_univariate(A, "t", constants);
    const UniPoly b = parse_univariate(B, "t", constants);
    if (a.degree() && *a.degree() > 4 * chi) throw InputError("A has degree above 4*chi");
    if (b.degree() && *b.degree() > 6 * chi) throw InputError("B has degree above 6*chi");
    return WeierstrassModel(BinaryForm::homogenize(a, 4 * chi), BinaryForm::homogenize(b, 6 * chi), chi);
}

FiberConfig analyze(const WeierstrassModel& model)
{
    const std::vector<BinaryForm> forms{model.A(), model.B(), model.discriminant()};
    FiberConfig cfg;
    cfg.chi = model.chi();
    for (const auto& pp : place_profile(forms)) {
        if (pp.valuations[2].equals(0)) continue;
        const FiberClass fc = classify_fiber(pp.valuations[0], pp.valuations[1], pp.valuations[2]);
        if (std::holds_alternative<NonMinimal>(fc)) throw NonMinimalError(pp.place);
        cfg.entries.push_back({std::get<KodairaType>(fc), 1, pp.place.degree(), pp.place, pp.valuations});
    }
    return cfg;
}

MinimalizeResult minimalize(const WeierstrassModel& model)
{
    MinimalizeResult out{model, {}};
    for (;;) {
        const WeierstrassModel& cur = out.model;
        const std::vector<BinaryForm> forms{cur.A(), cur.B()};
        std::optional<Place> bad;
        for (const auto& pp : place_profile(forms)) {
            if (pp.valuations[0].at_least(4) && pp.valuations[1].at_least(6)) {
                bad = pp.place;
                break;
            }
        }
        if (!bad) return out;
        const auto step = static_cast<unsigned>(bad->degree());
        if (cur.chi() <= step)
            throw InputError("model is a twist of a constant family below the elliptic-surface threshold");
        const unsigned chi = cur.chi() - step;
        UniPoly a = cur.A().dehomogenize(), b = cur.B().dehomogenize();
        if (!bad->is_infinity()) {
            if (!a.is_zero()) a = exact_div(a, bad->poly().pow(4));
            if (!b.is_zero()) b = exact_div(b, bad->poly().pow(6));
        }
        out.model = WeierstrassModel(BinaryForm::homogenize(a, 4 * chi), BinaryForm::homogenize(b, 6 * chi), chi);
        out.removed.push_back(*bad);
    }
}

}  // namespace kstab
