/* Copyright 2026 The idring Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "idring/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace idring {

RatFun::RatFun(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = poly_gcd(num, den);
    UniPoly n = num / g, d = den / g;
    Rational l = d.lc();
    num_ = n * (1 / l);
    den_ = d * (1 / l);
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.is_constant()) return RatFun(b.num_ * a.constant_value(), b.den_, RatFun::Canonical{});
    if (b.is_constant()) return RatFun(a.num_ * b.constant_value(), a.den_, RatFun::Canonical{});
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(den_, num_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

namespace {

bool is_monomial_power(const UniPoly& p) {
    return p.terms().size() == 1 && p.lc() == 1;
}

std::string wrap(const UniPoly& p) {
    if (is_monomial_power(p) || (p.terms().size() == 1 && p.degree() == 0)) return p.to_string();
    return "(" + p.to_string() + ")";
}

}  // namespace

std::string RatFun::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::string head;
    if (num_.degree() == 0) {
        Rational c = num_.lc();
        // c/den reads as (c)/den only when c is an integer.
        head = is_integer(c) ? c.get_str() : "(" + c.get_str() + ")";
    } else {
        head = wrap(num_);
    }
    return head + "/" + wrap(den_);
}

RatFun PartialFractionForm::reassemble() const {
    RatFun acc(poly_part);
    for (const auto& t : terms) acc += RatFun(t.a, pow(t.p, t.j));
    return acc;
}

PartialFractionForm partial_fractions(const RatFun& f) {
    PartialFractionForm out;
    auto [q, r] = divmod(f.num(), f.den());
    out.poly_part = q;
    if (r.is_zero()) return out;
    const auto factors = irreducible_factor(f.den());
    for (const auto& [p, e] : factors) {
        UniPoly P = pow(p, e);
        UniPoly rest = f.den() / P;
        UniPoly A = (r * poly_inverse_mod(rest, P)) % P;
        // Expand A in powers of p: A = sum d_t p^t, giving d_t / p^(e-t).
        std::vector<PfTerm> local;
        for (unsigned t = 0; t < e && !A.is_zero(); ++t) {
            auto [quot, digit] = divmod(A, p);
            if (!digit.is_zero()) local.push_back({p, e - t, digit});
            A = quot;
        }
        std::reverse(local.begin(), local.end());
        for (auto& t : local) out.terms.push_back(std::move(t));
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const PfTerm& a, const PfTerm& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.j < b.j;
    });
    return out;
}

namespace {

class RatParser {
public:
    explicit RatParser(std::string_view s) : s_(s) {}

    RatFun run() {
        RatFun v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("rational function parse error at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    RatFun expr() {
        RatFun v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }
    RatFun term() {
        RatFun v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                RatFun d = unary();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }
    RatFun unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    RatFun power() {
        RatFun b = primary();
        if (eat('^')) {
            skip();
            bool neg = eat('-');
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            RatFun r(1);
            for (unsigned long i = 0; i < e; ++i) r = r * b;
            if (neg) {
                if (r.is_zero()) fail("division by zero");
                r = r.inverse();
            }
            return r;
        }
        return b;
    }
    RatFun primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatFun v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return RatFun::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatFun(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFun RatFun::parse(std::string_view text) { return RatParser(text).run(); }

}  // namespace idring
