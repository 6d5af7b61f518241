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

#include "kstab/binary_form.hpp"

#include <stdexcept>

namespace kstab {

BinaryForm::BinaryForm(std::size_t degree, std::vector<Rational> coeffs) : d_(degree), c_(std::move(coeffs))
{
    if (c_.size() != d_ + 1)
        throw std::invalid_argument("binary form of degree " + std::to_string(d_) + " needs " +
                                    std::to_string(d_ + 1) + " coefficients");
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, std::size_t degree)
{
    if (p.degree() && *p.degree() > degree)
        throw std::invalid_argument("polynomial " + p.str() + " has degree above " + std::to_string(degree));
    std::vector<Rational> c(degree + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
    return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::monomial(std::size_t degree, std::size_t i, const Rational& c)
{
    BinaryForm f(degree);
    f.c_.at(i) = c;
    return f;
}

bool BinaryForm::is_zero() const
{
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Rational BinaryForm::evaluate(const Rational& s, const Rational& t) const
{
    Rational acc;
    for (std::size_t i = 0; i <= d_; ++i) acc += c_[i] * s.pow(static_cast<unsigned>(d_ - i)) * t.pow(static_cast<unsigned>(i));
    return acc;
}

BinaryForm BinaryForm::pow(unsigned e) const
{
    BinaryForm r(0, {Rational(1)});
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o)
{
    if (o.d_ != d_) throw std::invalid_argument("adding binary forms of different degrees");
    for (std::size_t i = 0; i <= d_; ++i) c_[i] += o.c_[i];
    return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& c)
{
    for (auto& x : c_) x *= c;
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b)
{
    BinaryForm r(a.d_ + b.d_);
    for (std::size_t i = 0; i <= a.d_; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j <= b.d_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

std::string BinaryForm::str() const
{
    std::string out;
    for (std::size_t i = 0; i <= d_; ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational a = c.abs();
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        const std::size_t es = d_ - i;
        if (es > 0) mono += es == 1 ? "s" : "s^" + std::to_string(es);
        if (i > 0) mono += (mono.empty() ? "" : "*") + (i == 1 ? std::string("t") : "t^" + std::to_string(i));
        if (mono.empty())
            out += a.str();
        else if (a == Rational(1))
            out += mono;
        else
            out += a.str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

Rational det(const Mat2& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

BinaryForm mobius(const BinaryForm& f, const Mat2& g)
{
    if (det(g).is_zero()) throw std::invalid_argument("singular substitution matrix");
    const std::size_t d = f.degree();
    const BinaryForm s_img(1, {g[0][0], g[0][1]});
    const BinaryForm t_img(1, {g[1][0], g[1][1]});
    BinaryForm out(d);
    for (std::size_t i = 0; i <= d; ++i) {
        if (f.coeff(i).is_zero()) continue;
        out += f.coeff(i) * (s_img.pow(static_cast<unsigned>(d - i)) * t_img.pow(static_cast<unsigned>(i)));
    }
    return out;
}

}  // namespace kstab
