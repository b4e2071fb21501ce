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

#include "idring/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace idring {

namespace {

int add_windows(long a, long b) {
    long s = a + b;
    if (a >= LaurentLog::kExact || b >= LaurentLog::kExact || s >= LaurentLog::kExact) return LaurentLog::kExact;
    return static_cast<int>(std::max<long>(s, INT_MIN / 2));
}

}  // namespace

LaurentLog::LaurentLog(const Rational& c) { add({0, 0}, c); }

LaurentLog LaurentLog::monomial(const Rational& c, int k, unsigned n, int valid_below) {
    LaurentLog r;
    r.valid_below_ = valid_below;
    r.add({k, n}, c);
    r.clip();
    return r;
}

LaurentLog LaurentLog::zero_with_window(int valid_below) {
    LaurentLog r;
    r.valid_below_ = valid_below;
    return r;
}

Rational LaurentLog::coeff(int k, unsigned n) const {
    if (k >= valid_below_)
        throw TruncationError("coefficient of x^" + std::to_string(k) + " is beyond the truncation order " +
                              std::to_string(valid_below_));
    auto it = terms_.find({k, n});
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentLog::valuation() const { return terms_.empty() ? valid_below_ : terms_.begin()->first.first; }

void LaurentLog::add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentLog::clip() {
    if (valid_below_ == kExact) return;
    terms_.erase(terms_.lower_bound({valid_below_, 0}), terms_.end());
}

LaurentLog LaurentLog::truncated(int valid_below) const {
    LaurentLog r = *this;
    r.valid_below_ = std::min(valid_below_, valid_below);
    r.clip();
    return r;
}

LaurentLog LaurentLog::derivative() const {
    LaurentLog r;
    r.valid_below_ = valid_below_ == kExact ? kExact : valid_below_ - 1;
    for (const auto& [key, c] : terms_) {
        auto [k, n] = key;
        if (k != 0) r.add({k - 1, n}, c * k);
        if (n > 0) r.add({k - 1, n - 1}, c * n);
    }
    r.clip();
    return r;
}

LaurentLog LaurentLog::operator-() const {
    LaurentLog r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

LaurentLog& LaurentLog::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

LaurentLog operator+(const LaurentLog& a, const LaurentLog& b) {
    LaurentLog r = a;
    r.valid_below_ = std::min(a.valid_below_, b.valid_below_);
    for (const auto& [k, c] : b.terms_) r.add(k, c);
    r.clip();
    return r;
}

LaurentLog operator-(const LaurentLog& a, const LaurentLog& b) { return a + (-b); }

LaurentLog operator*(const LaurentLog& a, const LaurentLog& b) {
    LaurentLog r;
    bool a_zero = a.is_zero() && a.is_exact();
    bool b_zero = b.is_zero() && b.is_exact();
    if (a_zero || b_zero) return r;
    r.valid_below_ = std::min(add_windows(a.valid_below_, b.valuation()), add_windows(b.valid_below_, a.valuation()));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            int k = ka.first + kb.first;
            if (k >= r.valid_below_) continue;
            r.add({k, ka.second + kb.second}, ca * cb);
        }
    return r;
}

bool LaurentLog::agrees_with(const LaurentLog& o) const {
    int n = std::min(valid_below_, o.valid_below_);
    return truncated(n).terms_ == o.truncated(n).terms_;
}

std::string LaurentLog::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c0] : terms_) {
        auto [k, n] = key;
        Rational c = c0;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        std::vector<std::string> parts;
        if (c != 1 || (k == 0 && n == 0)) parts.push_back(c.get_str());
        if (k == 1) parts.emplace_back("x");
        else if (k != 0) parts.push_back("x^" + std::to_string(k));
        if (n == 1) parts.emplace_back("ln(x)");
        else if (n > 1) parts.push_back("ln(x)^" + std::to_string(n));
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " * " : "") << parts[i];
    }
    if (!is_exact()) {
        os << (first ? "" : " + ") << "O(x^" << valid_below_ << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

LaurentLog laurent_integrate(const LaurentLog& f) {
    LaurentLog g = LaurentLog::zero_with_window(f.is_exact() ? LaurentLog::kExact : f.valid_below() + 1);
    for (const auto& [key, c] : f.terms()) {
        auto [k, n] = key;
        if (k == -1) {
            g += LaurentLog::monomial(c / Rational(n + 1), 0, n + 1);
            continue;
        }
        // x^k ln^n antiderivative: sum_i (-1)^i n!/(n-i)! x^(k+1) ln^(n-i) / (k+1)^(i+1)
        Rational kp1(k + 1);
        Rational falling(1);
        Rational pw = kp1;
        for (unsigned i = 0; i <= n; ++i) {
            Rational t = c * falling / pw;
            if (i % 2) t = -t;
            g += LaurentLog::monomial(t, k + 1, n - i);
            falling *= Rational(n - i);
            pw *= kp1;
        }
    }
    if (g.valid_below() > 0) {
        Rational e = g.coeff(0, 0);
        if (e != 0) g = g - LaurentLog(e);
    }
    return g;
}

Rational laurent_evaluate(const LaurentLog& f) {
    if (f.valid_below() <= 0)
        throw TruncationError("evaluation needs the x^0 coefficient but the series is only known below x^" +
                              std::to_string(f.valid_below()));
    return f.coeff(0, 0);
}

LaurentLog expand_ratfun(const RatFun& f, int n) {
    if (f.is_zero()) return LaurentLog();
    const UniPoly& den = f.den();
    unsigned v = 0;
    while (den.coeff(v) == 0) ++v;
    std::vector<Rational> d(den.terms().rbegin()->first - v + 1);
    for (const auto& [e, c] : den.terms()) d[e - v] = c;
    LaurentLog r;
    if (d.size() == 1) {
        for (const auto& [e, c] : f.num().terms()) r += LaurentLog::monomial(c / d[0], static_cast<int>(e) - static_cast<int>(v), 0);
        return r;
    }
    r = LaurentLog::zero_with_window(n);
    long count = static_cast<long>(n) + v;
    std::vector<Rational> s(static_cast<std::size_t>(std::max<long>(count, 0)));
    for (std::size_t i = 0; i < s.size(); ++i) {
        Rational acc = f.num().coeff(static_cast<unsigned>(i));
        for (std::size_t j = 1; j <= i && j < d.size(); ++j) acc -= d[j] * s[i - j];
        s[i] = acc / d[0];
        r += LaurentLog::monomial(s[i], static_cast<int>(i) - static_cast<int>(v), 0, n);
    }
    return r;
}

}  // namespace idring
