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

#include "kstab/literal.hpp"

#include <cctype>

namespace kstab {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars, const std::map<std::string, Rational>& constants)
        : s_(text), vars_(vars), constants_(constants)
    {
    }

    SparsePoly run()
    {
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        SparsePoly p = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePoly constant(const Rational& c) const
    {
        SparsePoly p;
        if (!c.is_zero()) p[std::vector<unsigned>(vars_.size(), 0)] = c;
        return p;
    }

    static void add_into(SparsePoly& a, const SparsePoly& b, bool negate)
    {
        for (const auto& [e, c] : b) {
            Rational& slot = a[e];
            slot += negate ? -c : c;
            if (slot.is_zero()) a.erase(e);
        }
    }

    static SparsePoly mul(const SparsePoly& a, const SparsePoly& b)
    {
        SparsePoly r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                std::vector<unsigned> e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                Rational& slot = r[e];
                slot += ca * cb;
                if (slot.is_zero()) r.erase(e);
            }
        return r;
    }

    SparsePoly expr()
    {
        SparsePoly acc = term();
        for (;;) {
            if (eat('+'))
                add_into(acc, term(), false);
            else if (eat('-'))
                add_into(acc, term(), true);
            else
                return acc;
        }
    }

    SparsePoly term()
    {
        SparsePoly acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = mul(acc, unary());
            } else if (eat('/')) {
                skip();
                const std::size_t at = pos_;
                const SparsePoly d = unary();
                const std::vector<unsigned> zero(vars_.size(), 0);
                if (d.empty()) fail_at("division by zero", at);
                if (d.size() != 1 || d.begin()->first != zero) fail_at("division by a non-constant", at);
                acc = mul(acc, constant(d.begin()->second.inverse()));
            } else {
                return acc;
            }
        }
    }

    SparsePoly unary()
    {
        if (eat('-')) {
            SparsePoly p = unary();
            for (auto& [e, c] : p) c = -c;
            return p;
        }
        if (eat('+')) return unary();
        return power();
    }

    SparsePoly power()
    {
        SparsePoly base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t at = pos_;
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a nonnegative integer exponent");
        unsigned long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (e > 4096) fail_at("exponent too large", at);
            ++pos_;
        }
        SparsePoly r = constant(1);
        for (unsigned long k = 0; k < e; ++k) r = mul(r, base);
        return r;
    }

    SparsePoly atom()
    {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] != name) continue;
                std::vector<unsigned> e(vars_.size(), 0);
                e[i] = 1;
                return SparsePoly{{e, Rational(1)}};
            }
            if (auto it = constants_.find(name); it != constants_.end()) return constant(it->second);
            fail_at("unknown identifier '" + name + "'", start);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    const std::map<std::string, Rational>& constants_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            const std::map<std::string, Rational>& constants)
{
    return Parser(text, vars, constants).run();
}

UniPoly parse_univariate(std::string_view text, const std::string& var, const std::map<std::string, Rational>& constants)
{
    const SparsePoly p = parse_polynomial(text, {var}, constants);
    std::vector<Rational> c;
    for (const auto& [e, v] : p) {
        if (c.size() <= e[0]) c.resize(e[0] + 1);
        c[e[0]] = v;
    }
    return UniPoly(std::move(c));
}

}  // namespace kstab
