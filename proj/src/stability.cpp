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

#include "kstab/stability.hpp"

#include <array>

namespace kstab {

namespace {

const std::array<std::pair<VerdictTag, const char*>, 6> kTags{{
    {VerdictTag::UniformlyKStable, "UniformlyKStable"},
    {VerdictTag::KSemistableNotUniform, "KSemistableNotUniform"},
    {VerdictTag::KUnstable, "KUnstable"},
    {VerdictTag::KStableByCY, "KStableByCY"},
    {VerdictTag::KStableByGeneralType, "KStableByGeneralType"},
    {VerdictTag::Undetermined, "Undetermined"},
}};

int sign_of(const Rational& r) { return r.sign(); }

// The boundary point of largest coefficient, ties broken by place order.
std::optional<std::pair<Place, Rational>> max_boundary(const DivisorP1& B)
{
    std::optional<std::pair<Place, Rational>> best;
    for (const auto& [p, c] : B.terms())
        if (!best || c > best->second) best = std::make_pair(p, c);
    return best;
}

}  // namespace

void LogTwistedCurve::validate() const
{
    if (degree.sign() <= 0) throw InputError("polarization degree must be positive");
    if (twist.sign() < 0) throw InputError("twist degree must be nonnegative");
    for (const auto& [p, c] : boundary.terms())
        if (c.sign() < 0 || c >= Rational(1))
            throw InputError("boundary coefficient " + c.str() + " at " + p.str() + " is outside [0, 1)");
}

Rational LogTwistedCurve::anticanonical_degree() const { return Rational(2) - boundary.degree() - twist; }

bool LogTwistedCurve::is_log_fano() const
{
    return genus == 0 && anticanonical_degree().sign() > 0 && degree == anticanonical_degree();
}

std::string tag_name(VerdictTag tag)
{
    for (const auto& [t, s] : kTags)
        if (t == tag) return s;
    throw InvariantError("unknown verdict tag");
}

VerdictTag parse_tag(const std::string& name)
{
    for (const auto& [t, s] : kTags)
        if (name == s) return t;
    throw InputError("unknown verdict tag '" + name + "'");
}

bool is_uniform(VerdictTag tag)
{
    return tag == VerdictTag::UniformlyKStable || tag == VerdictTag::KStableByCY || tag == VerdictTag::KStableByGeneralType;
}

std::string cscK_name(CscKNote note)
{
    switch (note) {
    case CscKNote::ExistsBySmoothCase: return "ExistsBySmoothCase";
    case CscKNote::NotApplicable: return "NotApplicable";
    case CscKNote::Unknown: return "Unknown";
    }
    return "Unknown";
}

Rational beta(const LogTwistedCurve& pair, const Place& p)
{
    if (pair.degree.sign() <= 0) throw InputError("polarization degree must be positive");
    const Rational& d = pair.degree;
    return (Rational(1) - pair.boundary.coefficient(p)) * d - d * d / Rational(2);
}

Rational delta(const LogTwistedCurve& pair)
{
    if (pair.degree.sign() <= 0) throw InputError("polarization degree must be positive");
    // A generic point has b = 0 and is never beaten by other unmarked points.
    Rational best = Rational(2) / pair.degree;
    for (const auto& [p, c] : pair.boundary.terms()) best = min(best, Rational(2) * (Rational(1) - c) / pair.degree);
    return best;
}

Verdict fano_verdict(const LogTwistedCurve& pair)
{
    pair.validate();
    if (!pair.is_log_fano())
        throw InputError("not a log-twisted Fano curve (need genus 0 and d = 2 - deg B - T > 0); use curve_verdict");

    const auto top = max_boundary(pair.boundary);
    const Rational bmax = top ? top->second : Rational(0);
    const int by_threshold = sign_of((pair.boundary.degree() + pair.twist) / Rational(2) - bmax);
    const int by_delta = sign_of(delta(pair) - Rational(1));
    Rational bmin = beta(pair, top ? top->first : Place::point(0));
    for (const auto& [p, c] : pair.boundary.terms()) bmin = min(bmin, beta(pair, p));
    const int by_beta = sign_of(bmin);
    if (by_threshold != by_delta || by_threshold != by_beta)
        throw InvariantError("threshold, delta and beta criteria disagree (" + std::to_string(by_threshold) + ", " +
                             std::to_string(by_delta) + ", " + std::to_string(by_beta) + ")");

    Verdict v{VerdictTag::UniformlyKStable, std::nullopt, "fano-threshold", ""};
    if (by_threshold == 0) v.tag = VerdictTag::KSemistableNotUniform;
    if (by_threshold < 0) {
        v.tag = VerdictTag::KUnstable;
        v.witness = top->first;
    }
    return v;
}

Verdict curve_verdict(const LogTwistedCurve& pair)
{
    pair.validate();
    const Rational k = Rational(2L * static_cast<long>(pair.genus) - 2) + pair.boundary.degree() + pair.twist;
    if (k.sign() > 0) return {VerdictTag::KStableByGeneralType, std::nullopt, "general-type-base", ""};
    if (k.sign() == 0) return {VerdictTag::KStableByCY, std::nullopt, "calabi-yau-base", ""};
    if (pair.genus > 0) throw InputError("log-twisted Fano curve must be rational");
    // Stability on P^1 does not depend on the scale of L; use the anticanonical degree.
    LogTwistedCurve fano = pair;
    fano.degree = pair.anticanonical_degree();
    return fano_verdict(fano);
}

std::pair<Rational, Rational> alpha_delta_limits(const FiberConfig& config)
{
    Rational a(1);
    for (const auto& e : config.entries) a = min(a, lct_of_fiber(e.type, e.m));
    return {a, Rational(2) * a};
}

AdiabaticReport adiabatic_verdict(const FiberConfig& config)
{
    const BaseData base = base_data(config);
    LogTwistedCurve curve;
    curve.boundary = base.discriminant;
    curve.twist = base.moduli_degree;
    const Rational gap = Rational(2) - base.discriminant.degree() - base.moduli_degree;
    curve.degree = gap.is_zero() ? Rational(1) : gap.abs();

    AdiabaticReport r;
    r.base = curve_verdict(curve);
    r.total = {r.base.tag, r.base.witness, "adiabatic-base-criterion", ""};
    r.cscK = is_uniform(r.base.tag) ? CscKNote::ExistsBySmoothCase : CscKNote::NotApplicable;
    std::tie(r.alpha_limit, r.delta_limit) = alpha_delta_limits(config);

    // Two points of coefficient 1/2 and no twist: the two I0* configuration.
    bool halves = !base.discriminant.empty();
    for (const auto& [p, c] : base.discriminant.terms()) halves = halves && c == Rational(1, 2);
    if (r.base.tag == VerdictTag::KSemistableNotUniform && base.moduli_degree.is_zero() && halves &&
        base.discriminant.degree() == Rational(1)) {
        r.base.note = "polystable: boundary is two points of coefficient 1/2 (two I0* fibers)";
        r.total.note = r.base.note;
    }
    return r;
}

Rational perturbed_beta(const LogTwistedCurve& pair, const Place& p, const Rational& ordD, const Rational& eps)
{
    if (pair.degree.sign() <= 0) throw InputError("polarization degree must be positive");
    if (eps.sign() < 0 || eps >= Rational(1)) throw InputError("eps must lie in [0, 1)");
    if (ordD.sign() < 0 || ordD > pair.degree) throw InputError("ord_p D must lie in [0, d]");
    const Rational& d = pair.degree;
    const Rational s = Rational(1) - eps;
    return ((Rational(1) - pair.boundary.coefficient(p)) - eps * ordD) * s * d - s * s * d * d / Rational(2);
}

Verdict canonical_fibration_verdict(unsigned genus, const BaseData& base, bool klt)
{
    const Rational k = twisted_canonical_degree(genus, base);
    if (k.sign() > 0) return {VerdictTag::UniformlyKStable, std::nullopt, "canonical-positive-base", "dim X = 2, canonically polarized"};
    if (k.sign() == 0) {
        if (klt) return {VerdictTag::UniformlyKStable, std::nullopt, "canonical-trivial-klt-base", "dim X = 2, canonically polarized"};
        return {VerdictTag::KSemistableNotUniform, std::nullopt, "canonical-trivial-lc-base", "dim X = 2, canonically polarized"};
    }
    LogTwistedCurve curve;
    curve.genus = genus;
    curve.boundary = base.discriminant;
    curve.twist = base.moduli_degree;
    curve.degree = -k;
    const Verdict f = fano_verdict(curve);
    if (f.tag == VerdictTag::UniformlyKStable)
        return {VerdictTag::UniformlyKStable, std::nullopt, "canonical-fano-base", "dim X = 2; base is uniformly Ding-stable"};
    return {VerdictTag::Undetermined, f.witness, "coverage-gap",
            "base is not uniformly K-stable (" + tag_name(f.tag) + "); no criterion covers this case"};
}

}  // namespace kstab
