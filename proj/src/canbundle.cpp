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

#include "kstab/canbundle.hpp"

#include <set>

namespace kstab {

LctEntry lct_entry(const KodairaType& type)
{
    using K = KodairaType::Kind;
    switch (type.kind()) {
    case K::I: return {type, Rational(1), type.n()};
    case K::II: return {type, Rational(5, 6), 2};
    case K::III: return {type, Rational(3, 4), 3};
    case K::IV: return {type, Rational(2, 3), 4};
    case K::IStar: return {type, Rational(1, 2), 6 + type.n()};
    case K::IVStar: return {type, Rational(1, 3), 8};
    case K::IIIStar: return {type, Rational(1, 4), 9};
    case K::IIStar: return {type, Rational(1, 6), 10};
    }
    throw InvariantError("unhandled fiber kind");
}

unsigned euler_number(const KodairaType& type) { return lct_entry(type).euler; }

Rational lct_of_fiber(const KodairaType& type, unsigned m)
{
    if (m == 0) throw InputError("fiber multiplicity must be positive");
    if (m == 1) return lct_entry(type).lct;
    if (type.additive()) throw InputError("additive fibers cannot be multiple");
    return Rational(1, static_cast<long>(m));
}

std::vector<std::string> validate_config(const FiberConfig& config)
{
    std::vector<std::string> out;
    if (config.chi == 0) out.emplace_back("chi must be positive");
    unsigned long euler = 0;
    std::size_t multiple = 0;
    for (std::size_t i = 0; i < config.entries.size(); ++i) {
        const auto& e = config.entries[i];
        const std::string where = "entry " + std::to_string(i) + " (" + e.type.name() + ")";
        if (e.m == 0) out.push_back(where + ": multiplicity must be positive");
        if (e.deg == 0) out.push_back(where + ": place degree must be positive");
        if (e.place && e.place->degree() != e.deg) out.push_back(where + ": place degree does not match its place");
        if (e.m > 1 && e.type.additive()) out.push_back(where + ": additive fibers cannot be multiple");
        if (e.m > 1) multiple += e.deg;
        euler += e.deg * euler_number(e.type);
    }
    if (config.chi == 1 && multiple > 1) out.emplace_back("at most one multiple fiber is allowed when chi = 1");
    const unsigned long want = 12UL * config.chi;
    if (euler != want) {
        const long deficit = static_cast<long>(want) - static_cast<long>(euler);
        out.push_back("Euler numbers sum to " + std::to_string(euler) + ", expected 12*chi = " + std::to_string(want) +
                      " (deficit " + std::to_string(deficit) + ")");
    }
    return out;
}

namespace {

// True if t = k lies on one of the given places.
bool occupied(const std::set<Place>& taken, long k)
{
    for (const auto& p : taken)
        if (!p.is_infinity() && p.poly()(Rational(k)).is_zero()) return true;
    return false;
}

}  // namespace

BaseData base_data(const FiberConfig& config)
{
    if (auto v = validate_config(config); !v.empty()) {
        std::string msg = "invalid fiber configuration:";
        for (const auto& s : v) msg += "\n  " + s;
        throw InputError(msg);
    }

    std::set<Place> taken;
    for (const auto& e : config.entries)
        if (e.place) taken.insert(*e.place);

    BaseData out;
    out.chi = config.chi;
    long next = 1;
    Rational reduced_boundary;
    for (const auto& e : config.entries) {
        Place p = Place::infinity();
        if (e.place) {
            p = *e.place;
        } else {
            UniPoly q = UniPoly::constant(1);
            for (std::size_t i = 0; i < e.deg; ++i) {
                while (occupied(taken, next)) ++next;
                q *= UniPoly::linear(Rational(next++));
            }
            p = Place::finite(q);
            taken.insert(p);
        }
        const Rational deg(static_cast<unsigned long>(e.deg));
        const Rational coeff = Rational(1) - lct_of_fiber(e.type, e.m);
        out.discriminant.add(p, coeff);
        if (e.m == 1) reduced_boundary += coeff * deg;

        const LctEntry le = lct_entry(e.type);
        const Rational contrib =
            deg * (Rational(le.euler) - Rational(12) * (Rational(1) - le.lct)) / Rational(12);
        if (contrib.sign() < 0) throw InvariantError("negative moduli contribution for " + e.type.name());
        out.moduli_contributions.push_back(contrib);
        out.moduli_degree += contrib;
    }
    if (out.moduli_degree + reduced_boundary != Rational(config.chi))
        throw InvariantError("canonical bundle formula does not balance: deg M + deg B_reduced = " +
                             (out.moduli_degree + reduced_boundary).str() + " != chi");
    return out;
}

Rational twisted_canonical_degree(unsigned genus, const BaseData& base, std::span<const unsigned> extra_multiple)
{
    Rational k = Rational(2L * static_cast<long>(genus) - 2) + base.discriminant.degree() + base.moduli_degree;
    for (unsigned m : extra_multiple) {
        if (m == 0) throw InputError("fiber multiplicity must be positive");
        k += Rational(1) - Rational(1, static_cast<long>(m));
    }
    return k;
}

}  // namespace kstab
