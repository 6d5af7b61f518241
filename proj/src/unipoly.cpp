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

#include "kstab/unipoly.hpp"

#include <stdexcept>

namespace kstab {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::optional<std::size_t> UniPoly::degree() const
{
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

Rational UniPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

const Rational& UniPoly::leading() const
{
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::monic() const
{
    if (is_zero()) return {};
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::pow(unsigned e) const
{
    UniPoly r = constant(1);
    UniPoly b = *this;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

UniPoly UniPoly::shift(const Rational& c) const
{
    // Horner in the ring: p(t + c) = (...(a_n (t+c) + a_{n-1})(t+c) + ...)
    const UniPoly lin({c, Rational(1)});
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
}

std::size_t UniPoly::low_order() const
{
    if (is_zero()) throw std::domain_error("order of vanishing of the zero polynomial");
    std::size_t k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

UniPoly& UniPoly::operator+=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o)
{
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c)
{
    for (auto& x : c_) x *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const
{
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::string UniPoly::str(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0) {
            out += a.str();
            continue;
        }
        if (a != Rational(1)) out += a.str() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::size_t db = *b.degree();
    std::vector<Rational> r = a.coeffs();
    if (r.size() <= db) return {UniPoly(), a};
    std::vector<Rational> q(r.size() - db);
    const Rational inv = b.leading().inverse();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero()) continue;
        const Rational f = r[k] * inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeffs()[j];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

bool divides(const UniPoly& b, const UniPoly& a) { return divmod(a, b).second.is_zero(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly& p)
{
    if (p.is_zero()) throw std::domain_error("squarefree part of the zero polynomial");
    if (*p.degree() == 0) return UniPoly::constant(1);
    return exact_div(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<unsigned, UniPoly>> squarefree_decomposition(const UniPoly& p)
{
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<unsigned, UniPoly>> out;
    if (*p.degree() == 0) return out;
    // Yun's algorithm over a field of characteristic zero.
    const UniPoly f = p.monic();
    const UniPoly fp = f.derivative();
    UniPoly a = gcd(f, fp);
    UniPoly b = exact_div(f, a);
    UniPoly c = exact_div(fp, a);
    UniPoly d = c - b.derivative();
    unsigned k = 1;
    while (*b.degree() > 0) {
        const UniPoly g = gcd(b, d);
        if (*g.degree() > 0) out.emplace_back(k, g);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++k;
    }
    return out;
}

unsigned multiplicity(const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    if (q.is_zero() || *q.degree() == 0) throw std::domain_error("multiplicity of a constant");
    unsigned k = 0;
    UniPoly rest = p;
    for (;;) {
        auto [quo, rem] = divmod(rest, q);
        if (!rem.is_zero()) return k;
        rest = std::move(quo);
        ++k;
    }
}

}  // namespace kstab
