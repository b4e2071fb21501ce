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

#include "idring/basering.hpp"

#include <mutex>
#include <stdexcept>

namespace idring {

std::optional<Rational> RationalBase::as_constant(const Elem& f) {
    if (!f.is_constant()) return std::nullopt;
    return f.constant_value();
}

RationalBase::Hermite RationalBase::hermite(const Elem& f) const {
    {
        std::shared_lock lock(cache_mu_);
        auto it = cache_.find(f);
        if (it != cache_.end()) return it->second;
    }
    PartialFractionForm pf = partial_fractions(f);
    Hermite h;
    UniPoly integral;
    for (const auto& [e, c] : pf.poly_part.terms()) integral += UniPoly::monomial(c / Rational(e + 1), e + 1);
    h.q = RatFun(integral);

    std::map<UniPoly, std::map<unsigned, UniPoly>> by_p;
    for (const auto& t : pf.terms) by_p[t.p][t.j] += t.a;
    for (auto& [p, parts] : by_p) {
        const UniPoly dp = p.derivative();
        const UniPoly s = poly_inverse_mod(dp, p);
        for (unsigned j = parts.empty() ? 0 : parts.rbegin()->first; j >= 2; --j) {
            auto it = parts.find(j);
            if (it == parts.end() || it->second.is_zero()) continue;
            const UniPoly a = it->second;
            const Rational jm1(j - 1);
            UniPoly b = (-(a * s) * (Rational(1) / jm1)) % p;
            UniPoly c = (a + b * dp * jm1) / p;
            h.q += RatFun(b, pow(p, j - 1));
            parts[j - 1] += c - b.derivative();
        }
        auto one = parts.find(1);
        if (one != parts.end() && !one->second.is_zero()) h.simple.push_back(PfTerm{p, 1, one->second % p});
    }
    std::unique_lock lock(cache_mu_);
    return cache_.try_emplace(f, std::move(h)).first->second;
}

RationalBase::Elem RationalBase::quasi_int(const Elem& f) const { return hermite(f).q; }

LetterExpansion RationalBase::t_part(const Elem& f) const {
    LetterExpansion out;
    for (const auto& t : hermite(f).simple)
        for (const auto& [k, c] : t.a.terms()) out.emplace_back(letters_.id_of(LetterKey{t.p, k}), c);
    return out;
}

LetterExpansion RationalBase::letters_of(const Elem& f) const {
    if (!hermite(f).q.is_zero()) throw std::invalid_argument(f.to_string() + " is not in the kernel of Q");
    return t_part(f);
}

CjSplit RationalBase::cj_split(const Elem& f) const {
    PartialFractionForm pf = partial_fractions(f);
    CjSplit out{pf.poly_part.coeff(0), {}};
    for (const auto& [e, c] : pf.poly_part.terms())
        if (e > 0) out.j.emplace_back(rj_.id_of(RjKey{UniPoly(), 0, e}), c);
    for (const auto& t : pf.terms)
        for (const auto& [k, c] : t.a.terms()) out.j.emplace_back(rj_.id_of(RjKey{t.p, t.j, k}), c);
    return out;
}

RationalBase::Elem RationalBase::letter_value(Letter l) const {
    LetterKey key = letters_.key(l);
    return RatFun(UniPoly::monomial(1, key.k), key.p);
}

RationalBase::Elem RationalBase::rj_value(RjId id) const {
    RjKey key = rj_.key(id);
    if (key.j == 0) return RatFun(UniPoly::monomial(1, key.k));
    return RatFun(UniPoly::monomial(1, key.k), pow(key.p, key.j));
}

Letter RationalBase::pin_letter(const UniPoly& p, unsigned k) const {
    auto f = irreducible_factor(p);
    if (f.size() != 1 || f[0].second != 1 || !(f[0].first == p))
        throw std::invalid_argument(p.to_string() + " is not monic irreducible");
    if (static_cast<int>(k) >= p.degree()) throw std::invalid_argument("letter numerator degree too large");
    return letters_.id_of(LetterKey{p, k});
}

LetterExpansion TrivialBase::t_part(const Elem& f) const {
    if (f == 0) return {};
    return {{0, f}};
}

TrivialBase::Elem TrivialBase::letter_value(Letter l) const {
    if (l != 0) throw std::out_of_range("the trivial base ring has a single letter");
    return 1;
}

TrivialBase::Elem TrivialBase::rj_value(RjId) const {
    throw std::out_of_range("the trivial base ring has R_J = 0");
}

namespace {

void require_laurent_poly(const LaurentLog& f) {
    if (!f.is_exact()) throw std::invalid_argument("Laurent base elements must be exact");
    for (const auto& [key, c] : f.terms())
        if (key.second != 0) throw std::invalid_argument("Laurent base elements must be free of ln(x)");
}

}  // namespace

std::optional<Rational> LaurentBase::as_constant(const Elem& f) {
    if (!f.is_exact()) return std::nullopt;
    for (const auto& [key, c] : f.terms())
        if (key.first != 0 || key.second != 0) return std::nullopt;
    return f.is_zero() ? Rational(0) : f.terms().begin()->second;
}

LaurentBase::Elem LaurentBase::derive(const Elem& f) const {
    require_laurent_poly(f);
    return f.derivative();
}

LaurentBase::Elem LaurentBase::quasi_int(const Elem& f) const {
    require_laurent_poly(f);
    LaurentLog out;
    for (const auto& [key, c] : f.terms())
        if (key.first != -1) out += LaurentLog::monomial(c / Rational(key.first + 1), key.first + 1);
    return out;
}

LetterExpansion LaurentBase::t_part(const Elem& f) const {
    require_laurent_poly(f);
    Rational c = f.coeff(-1, 0);
    if (c == 0) return {};
    return {{0, c}};
}

CjSplit LaurentBase::cj_split(const Elem& f) const {
    require_laurent_poly(f);
    CjSplit out{0, {}};
    for (const auto& [key, c] : f.terms()) {
        if (key.first == 0) out.c = c;
        else out.j.emplace_back(exponents_.id_of(key.first), c);
    }
    return out;
}

LaurentBase::Elem LaurentBase::letter_value(Letter l) const {
    if (l != 0) throw std::out_of_range("the Laurent base ring has a single letter");
    return LaurentLog::monomial(1, -1);
}

LaurentBase::Elem LaurentBase::rj_value(RjId id) const { return LaurentLog::monomial(1, exponents_.key(id)); }

}  // namespace idring
