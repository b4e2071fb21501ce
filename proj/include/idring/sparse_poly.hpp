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
// Sparse multivariate polynomials over Q with an arbitrary ordered variable
// type. A monomial is a sorted list of (variable, exponent) pairs.

#ifndef IDRING_SPARSE_POLY_HPP
#define IDRING_SPARSE_POLY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "idring/rational.hpp"

namespace idring {

template <class Var, class Less = std::less<Var>>
class SparsePoly {
public:
    using Monomial = std::vector<std::pair<Var, unsigned>>;

    struct MonoLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            Less less;
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                [&](const auto& x, const auto& y) {
                                                    if (less(x.first, y.first)) return true;
                                                    if (less(y.first, x.first)) return false;
                                                    return x.second < y.second;
                                                });
        }
    };
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    SparsePoly() = default;
    explicit SparsePoly(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }
    static SparsePoly variable(const Var& v) { return monomial(Monomial{{v, 1u}}, 1); }
    static SparsePoly monomial(Monomial m, const Rational& c) {
        SparsePoly p;
        if (c != 0) p.terms_.emplace(std::move(m), c);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    static Monomial mono_mul(const Monomial& a, const Monomial& b) {
        Less less;
        Monomial r;
        r.reserve(a.size() + b.size());
        auto i = a.begin(), j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (less(i->first, j->first)) {
                r.push_back(*i++);
            } else if (less(j->first, i->first)) {
                r.push_back(*j++);
            } else {
                r.emplace_back(i->first, i->second + j->second);
                ++i;
                ++j;
            }
        }
        r.insert(r.end(), i, a.end());
        r.insert(r.end(), j, b.end());
        return r;
    }

    static unsigned degree_of(const Monomial& m) {
        unsigned d = 0;
        for (const auto& [v, e] : m) d += e;
        return d;
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    SparsePoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

    SparsePoly pow(unsigned e) const {
        SparsePoly r(1), base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    std::set<Var, Less> variables() const {
        std::set<Var, Less> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    // Replaces every variable v for which lookup(v) returns a non-null
    // pointer by that polynomial.
    template <class Lookup>
    SparsePoly substitute(Lookup&& lookup) const {
        SparsePoly out;
        for (const auto& [m, c] : terms_) {
            SparsePoly term = monomial(Monomial{}, c);
            Monomial kept;
            for (const auto& [v, e] : m) {
                const SparsePoly* rep = lookup(v);
                if (rep == nullptr) {
                    kept.emplace_back(v, e);
                } else {
                    term = term * rep->pow(e);
                }
            }
            if (!kept.empty()) {
                SparsePoly shifted;
                for (const auto& [tm, tc] : term.terms_) shifted.add_term(mono_mul(tm, kept), tc);
                term = std::move(shifted);
            }
            out += term;
        }
        return out;
    }

    template <class Name>
    std::string to_string(Name&& name) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c0] : terms_) {
            Rational c = c0;
            bool neg = c < 0;
            if (neg) c = -c;
            if (first) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            first = false;
            std::string body;
            for (const auto& [v, e] : m) {
                if (!body.empty()) body += "*";
                body += name(v);
                if (e > 1) body += "^" + std::to_string(e);
            }
            if (body.empty()) {
                s += c.get_str();
            } else if (c == 1) {
                s += body;
            } else {
                s += c.get_str() + "*" + body;
            }
        }
        return s;
    }

private:
    TermMap terms_;
};

}  // namespace idring

#endif  // IDRING_SPARSE_POLY_HPP
