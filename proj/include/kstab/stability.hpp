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

#ifndef KSTAB_STABILITY_HPP
#define KSTAB_STABILITY_HPP

#include <optional>
#include <string>
#include <utility>

#include "kstab/canbundle.hpp"
#include "kstab/place.hpp"
#include "kstab/rational.hpp"
#include "kstab/weierstrass.hpp"

namespace kstab {

/// (C, B, T, L) with C of the given genus, boundary B, twist degree T and
/// polarization degree d = deg L.
struct LogTwistedCurve {
    unsigned genus = 0;
    DivisorP1 boundary;
    Rational twist;
    Rational degree{1};

    /// Throws InputError unless d > 0, T >= 0 and every b_p lies in [0, 1).
    void validate() const;
    /// genus 0 and d = 2 - deg B - T > 0.
    bool is_log_fano() const;
    /// 2 - deg B - T (meaningful in genus 0).
    Rational anticanonical_degree() const;
};

enum class VerdictTag {
    UniformlyKStable,
    KSemistableNotUniform,
    KUnstable,
    KStableByCY,
    KStableByGeneralType,
    Undetermined,  ///< no covering criterion; reported as a coverage gap
};

std::string tag_name(VerdictTag tag);
VerdictTag parse_tag(const std::string& name);
/// Uniformly K-stable, including the Calabi-Yau and general type bases.
bool is_uniform(VerdictTag tag);

struct Verdict {
    VerdictTag tag;
    std::optional<Place> witness;
    std::string by;  ///< short label of the criterion used
    std::string note;
};

enum class CscKNote { ExistsBySmoothCase, NotApplicable, Unknown };
std::string cscK_name(CscKNote note);

struct AdiabaticReport {
    Verdict base;
    Verdict total;
    CscKNote cscK = CscKNote::Unknown;
    Rational alpha_limit;
    Rational delta_limit;
};

/// (1 - b_p) d - d^2 / 2.
Rational beta(const LogTwistedCurve& pair, const Place& p);

/// min of 2 (1 - b_p) / d over the boundary support and a generic point.
Rational delta(const LogTwistedCurve& pair);

/// Verdict for a log-twisted Fano curve. The threshold test, the sign of
/// delta - 1 and the sign of the minimal beta are computed separately and
/// must agree (InvariantError otherwise).
Verdict fano_verdict(const LogTwistedCurve& pair);

/// Dispatches on the sign of (2g - 2) + deg B + T.
Verdict curve_verdict(const LogTwistedCurve& pair);

/// (inf lct, 2 inf lct) over all fibers, multiple ones included.
std::pair<Rational, Rational> alpha_delta_limits(const FiberConfig& config);

AdiabaticReport adiabatic_verdict(const FiberConfig& config);

/// beta of (C, B + eps D, T, (1 - eps) L) at p, with ordD = ord_p D.
Rational perturbed_beta(const LogTwistedCurve& pair, const Place& p, const Rational& ordD, const Rational& eps);

/// Verdict for a canonically polarized fibration over a curve, from the
/// degree of the twisted canonical class of the base.
Verdict canonical_fibration_verdict(unsigned genus, const BaseData& base, bool klt);

}  // namespace kstab

#endif  // KSTAB_STABILITY_HPP
