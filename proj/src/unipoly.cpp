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

#include "idring/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace idring {

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) terms_.emplace(0u, c);
}

UniPoly UniPoly::monomial(const Rational& c, unsigned deg) {
    UniPoly p;
    if (c != 0) p.terms_.emplace(deg, c);
    return p;
}

UniPoly UniPoly::from_dense(const std::vector<Rational>& coeffs) {
    UniPoly p;
    for (unsigned i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.terms_.emplace(i, coeffs[i]);
    return p;
}

Rational UniPoly::coeff(unsigned deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational UniPoly::lc() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

std::vector<Rational> UniPoly::dense() const {
    std::vector<Rational> out(static_cast<std::size_t>(degree() + 1));
    for (const auto& [d, c] : terms_) out[d] = c;
    return out;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r = *this;
    Rational inv = 1 / lc();
    r *= inv;
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    for (const auto& [d, c] : terms_)
        if (d > 0) r.terms_.emplace(d - 1, c * d);
    return r;
}

Rational UniPoly::eval(const Rational& at) const {
    Rational acc = 0;
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = prev; k > static_cast<int>(it->first); --k) acc *= at;
        acc += it->second;
        prev = static_cast<int>(it->first);
    }
    for (int k = prev; k > 0; --k) acc *= at;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    for (const auto& [d, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(d, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, v] : terms_) v *= c;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [da, ca] : a.terms_)
        for (const auto& [db, cb] : b.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(da + db, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    auto ia = a.terms_.rbegin();
    auto ib = b.terms_.rbegin();
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first <=> ib->first;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ia != a.terms_.rend()) return std::strong_ordering::greater;
    if (ib != b.terms_.rend()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string UniPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        unsigned d = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? "-" : "+");
        }
        first = false;
        if (d == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << 'x';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly q, r = a;
    const int db = b.degree();
    const Rational lcb = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        unsigned shift = static_cast<unsigned>(r.degree() - db);
        Rational c = r.lc() / lcb;
        UniPoly t = UniPoly::monomial(c, shift);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r(1), base = p;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

ExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b, s0(1), s1, t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = 1 / r0.lc();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly poly_inverse_mod(const UniPoly& a, const UniPoly& m) {
    ExtGcd e = poly_ext_gcd(a % m, m);
    if (e.g != UniPoly(1)) throw std::domain_error("polynomial not invertible modulo");
    return e.s % m;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_factor(const UniPoly& p) {
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (p.degree() <= 0) return out;
    UniPoly f = p.monic();
    UniPoly df = f.derivative();
    UniPoly a0 = poly_gcd(f, df);
    UniPoly b = f / a0;
    UniPoly c = df / a0;
    UniPoly d = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        UniPoly a = poly_gcd(b, d);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0) out.emplace_back(a, i);
        ++i;
    }
    return out;
}

}  // namespace idring
