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

#include "kstab/dfweights.hpp"

#include <algorithm>
#include <limits>

namespace kstab {

namespace {

Rational factorial(unsigned n)
{
    Rational f(1);
    for (unsigned i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

long pairing(const OnePS& lam, const std::vector<unsigned>& alpha)
{
    long s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) s += lam.weights[i] * static_cast<long>(alpha[i]);
    return s;
}

void check_ternary(const SparsePoly& f)
{
    if (f.empty()) throw InputError("zero form");
    std::optional<unsigned> deg;
    for (const auto& [e, c] : f) {
        if (e.size() != 3) throw InputError("expected a form in x, y, z");
        const unsigned d = e[0] + e[1] + e[2];
        if (deg && *deg != d) throw InputError("form is not homogeneous");
        deg = d;
    }
}

// Minimal weight over the nonzero slots of a binary form, slot i having
// weight a (d - 2i).
std::optional<long> min_slot_weight(const BinaryForm& f, long a)
{
    std::optional<long> best;
    const long d = static_cast<long>(f.degree());
    for (std::size_t i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        const long w = a * (d - 2 * static_cast<long>(i));
        if (!best || w < *best) best = w;
    }
    return best;
}

// Coefficients (c2, c1) of the quadratic through (1, y1), (2, y2), (3, y3).
std::pair<Rational, Rational> fit_quadratic(const Rational& y1, const Rational& y2, const Rational& y3)
{
    const Rational c2 = (y3 - Rational(2) * y2 + y1) / Rational(2);
    const Rational c1 = (y2 - y1) - Rational(3) * c2;
    return {c2, c1};
}

}  // namespace

void WeightData::validate() const
{
    if (a0.sign() <= 0) throw InputError("a0 must be positive");
    if (aHat0.has_value() != bHat0.has_value()) throw InputError("boundary weight data must give both aHat0 and bHat0");
}

Rational cm_weight(const WeightData& w)
{
    w.validate();
    const Rational f = factorial(w.n + 1) / w.a0;
    Rational r = Rational(2) * f * (w.b1 * w.a0 - w.a1 * w.b0);
    if (w.aHat0) r += f * (*w.bHat0 * w.a0 - *w.aHat0 * w.b0);
    return r;
}

Integer weight_sum_p1(long d, long k, long w0, long w1)
{
    if (d <= 0 || k <= 0) throw InputError("degree and k must be positive");
    const long top = k * d;
    Integer sum = 0;
    for (long i = 0; i <= top; ++i) sum += Integer(i) * w1 + Integer(top - i) * w0;
    return sum;
}

void OnePS::validate(std::size_t dim) const
{
    if (weights.size() != dim) throw InputError("one-parameter subgroup needs " + std::to_string(dim) + " weights");
    long s = 0;
    for (long w : weights) s += w;
    if (s != 0) throw InputError("one-parameter subgroup weights must sum to zero");
}

long hm_weight_form(const SparsePoly& form, const OnePS& lam)
{
    check_ternary(form);
    lam.validate(3);
    long best = std::numeric_limits<long>::max();
    for (const auto& [e, c] : form) best = std::min(best, pairing(lam, e));
    return -best;
}

long hm_weight_pencil(const SparsePoly& F, const SparsePoly& G, const OnePS& lam)
{
    check_ternary(F);
    check_ternary(G);
    if (F.begin()->first[0] + F.begin()->first[1] + F.begin()->first[2] !=
        G.begin()->first[0] + G.begin()->first[1] + G.begin()->first[2])
        throw InputError("pencil members have different degrees");
    lam.validate(3);
    std::vector<std::vector<unsigned>> support;
    for (const auto& [e, c] : F) support.push_back(e);
    for (const auto& [e, c] : G)
        if (!F.count(e)) support.push_back(e);
    std::sort(support.begin(), support.end());
    auto coef = [](const SparsePoly& f, const std::vector<unsigned>& e) {
        auto it = f.find(e);
        return it == f.end() ? Rational(0) : it->second;
    };
    std::optional<long> best;
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = i + 1; j < support.size(); ++j) {
            const auto& a = support[i];
            const auto& b = support[j];
            if ((coef(F, a) * coef(G, b) - coef(F, b) * coef(G, a)).is_zero()) continue;
            const long w = pairing(lam, a) + pairing(lam, b);
            if (!best || w < *best) best = w;
        }
    if (!best) throw InputError("pencil members are proportional");
    return -*best;
}

long miranda_weight(const BinaryForm& A, const BinaryForm& B, long a)
{
    if (a <= 0) throw InputError("1-PS exponent must be positive");
    if (A.degree() != 4 || B.degree() != 6) throw InputError("expected forms of degrees 4 and 6");
    const auto mA = min_slot_weight(A, a);
    const auto mB = min_slot_weight(B, a);
    if (!mA && !mB) throw InputError("A and B are both zero");
    long mu = 0;
    if (mA) mu -= 3 * *mA;
    if (mB) mu -= 2 * *mB;
    return mu;
}

PointDegeneration point_degeneration(const LogTwistedCurve& pair, const Place& p)
{
    pair.validate();
    if (!pair.is_log_fano()) throw InputError("point degenerations need a log-twisted Fano curve");
    if (p.degree() != 1) throw InputError("point degenerations need a rational point");

    // The 1-PS fixes p = {x1 = 0} and a second point q = {x0 = 0}; x1 gets
    // weight 1, so sections are weighted by their order of vanishing at p.
    // In the central fibre every other boundary point, and the twist, sit at q.
    const long w0 = 0, w1 = 1;
    const Rational d = pair.degree;
    const Rational bp = pair.boundary.coefficient(p);
    const Rational e = pair.boundary.degree() + pair.twist - bp;

    // Work with the integral multiple L' = r L, then rescale k' = k / r.
    const Integer r = d.denominator();
    const long D = (d * Rational(r)).to_long();
    const Rational rr(r);
    const auto [c2, c1] = fit_quadratic(Rational(weight_sum_p1(D, 1, w0, w1)), Rational(weight_sum_p1(D, 2, w0, w1)),
                                        Rational(weight_sum_p1(D, 3, w0, w1)));

    PointDegeneration out;
    out.data.n = 1;
    out.data.a0 = d;
    out.data.a1 = Rational(1);
    out.data.b0 = c2 / (rr * rr);
    out.data.b1 = c1 / rr;
    // Fibre weights of L'^k at p and q are k D w0 and k D w1.
    out.data.aHat0 = bp + e;
    out.data.bHat0 = (bp * Rational(D * w0) + e * Rational(D * w1)) / rr;
    out.cm = cm_weight(out.data);
    out.via_weights = out.cm / (factorial(out.data.n + 1) * out.data.a0);
    out.via_beta = beta(pair, p) / d;
    return out;
}

Rational point_degeneration_df(const LogTwistedCurve& pair, const Place& p)
{
    const PointDegeneration pd = point_degeneration(pair, p);
    if (pd.via_beta != pd.via_weights)
        throw InvariantError("Donaldson-Futaki routes disagree: beta route " + pd.via_beta.str() + ", weight route " +
                             pd.via_weights.str());
    return pd.via_beta;
}

}  // namespace kstab
