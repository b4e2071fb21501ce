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

#include "idring/constants.hpp"

#include <mutex>
#include <stdexcept>

namespace idring {

bool SymbolLess::operator()(const ConstSymbol& a, const ConstSymbol& b) const {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const auto* x = std::get_if<C1Gen>(&a)) {
        const auto& y = std::get<C1Gen>(b);
        if (x->rj != y.rj) return x->rj < y.rj;
        return dlex_cmp(x->word, y.word) < 0;
    }
    return gen_cmp(std::get<C2Gen>(a).key, std::get<C2Gen>(b).key) < 0;
}

std::string symbol_name(const ConstSymbol& s) {
    if (const auto* g = std::get_if<C1Gen>(&s))
        return "eps(J:" + std::to_string(g->rj) + ";W:" + word_name(g->word) + ")";
    const auto& k = std::get<C2Gen>(s).key;
    return "c(" + word_name(k.v) + "|" + word_name(k.w) + ")";
}

std::string const_poly_string(const ConstPoly& p) { return p.to_string(symbol_name); }

C2Gen c2gen_canonical(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw std::invalid_argument("c(V,W) needs nonempty words");
    if (dlex_cmp(u, v) <= 0) return C2Gen{GenKey{u, v}};
    return C2Gen{GenKey{v, u}};
}

ConstPoly epsilon_expand(const TensorElem& s, const TensorElem& t) {
    ConstPoly out;
    for (const auto& [u, cu] : s.terms())
        for (const auto& [v, cv] : t.terms()) {
            if (u.empty() || v.empty()) throw std::invalid_argument("eps(s (.) t) needs nonempty words");
            out.add_term(ConstMono{{ConstSymbol{c2gen_canonical(u, v)}, 1u}}, cu * cv);
        }
    return out;
}

namespace {

Word slice(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<long>(from), w.begin() + static_cast<long>(to));
}

TensorElem sh(const Word& a, const Word& b) { return shuffle_mul(TensorElem::word(a), TensorElem::word(b)); }
TensorElem tw(const Word& a) { return TensorElem::word(a); }

}  // namespace

ConstPoly relation_poly(const Word& f, const Word& g, const Word& h) {
    if (f.empty() || g.empty() || h.empty()) throw std::invalid_argument("relation needs nonempty words");
    const std::size_t n = f.size(), m = g.size(), l = h.size();
    ConstPoly r = epsilon_expand(sh(f, g), tw(h)) - epsilon_expand(tw(f), sh(g, h));
    for (std::size_t j = 0; j < m; ++j) {
        const Word g_head = slice(g, 0, j), g_tail = slice(g, j, m);
        for (std::size_t i = (j == 0 ? 1 : 0); i < n; ++i)
            r += epsilon_expand(tw(slice(f, i, n)), tw(g_tail)) * epsilon_expand(sh(slice(f, 0, i), g_head), tw(h));
        for (std::size_t k = (j == 0 ? 1 : 0); k < l; ++k)
            r -= epsilon_expand(tw(f), sh(g_head, slice(h, 0, k))) * epsilon_expand(tw(g_tail), tw(slice(h, k, l)));
    }
    return r;
}

ConstPoly relation_r(const Word& v1, const Word& v2, const Word& v3) {
    if (dlex_cmp(v1, v3) >= 0) throw std::invalid_argument("relation_r requires V1 <_dlex V3");
    return relation_poly(v1, v2, v3);
}

std::optional<C2Gen> leading_c2gen(const ConstPoly& p) {
    std::optional<C2Gen> best;
    for (const auto& [m, c] : p.terms())
        for (const auto& [s, e] : m)
            if (const auto* g = std::get_if<C2Gen>(&s))
                if (!best || gen_cmp(best->key, g->key) < 0) best = *g;
    return best;
}

std::optional<Rational> linear_coefficient(const ConstPoly& p, const C2Gen& g) {
    const ConstSymbol sym{g};
    std::optional<Rational> coeff;
    for (const auto& [m, c] : p.terms()) {
        bool has = false;
        for (const auto& [s, e] : m)
            if (!SymbolLess{}(s, sym) && !SymbolLess{}(sym, s)) has = true;
        if (!has) continue;
        if (m.size() != 1 || m[0].second != 1) return std::nullopt;
        coeff = c;
    }
    return coeff;
}

std::optional<CanonicalRelation> canonical_relation(const C2Gen& g) {
    const Word& v = g.key.v;
    const Word& w = g.key.w;
    if (!is_lyndon(v)) {
        auto split = split_max_shuffle(v);
        return CanonicalRelation{split->first, split->second, w};
    }
    if (auto dec = find_lower_decomposition(v, w)) return CanonicalRelation{dec->first, dec->second, v};
    return std::nullopt;
}

ConstPoly reduce_c2gen(const C2Gen& g) {
    auto rel = canonical_relation(g);
    if (!rel) return const_var(g);
    ConstPoly r = relation_poly(rel->v1, rel->v2, rel->v3);
    auto lead = leading_c2gen(r);
    if (!lead || !(lead->key == g.key))
        throw std::logic_error("canonical relation does not lead with " + symbol_name(g));
    auto coeff = linear_coefficient(r, g);
    if (!coeff || !is_integer(*coeff))
        throw std::logic_error("leading generator not linear with integer coefficient: " + symbol_name(g));
    ConstPoly tail = r - const_var(g) * *coeff;
    tail *= Rational(-1) / *coeff;
    return tail;
}

const ConstPoly& C2Normalizer::normal_form(const C2Gen& g) {
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(g.key);
        if (it != memo_.end()) return it->second;
    }
    ConstPoly step = reduce_c2gen(g);
    ConstPoly nf;
    if (step.variables().size() == 1 && step == const_var(g)) {
        nf = std::move(step);
    } else {
        std::map<ConstSymbol, const ConstPoly*, SymbolLess> reps;
        for (const auto& s : step.variables())
            if (const auto* h = std::get_if<C2Gen>(&s)) {
                if (gen_cmp(h->key, g.key) >= 0) throw std::logic_error("reduction did not decrease generator");
                reps.emplace(s, &normal_form(*h));
            }
        nf = step.substitute([&](const ConstSymbol& s) -> const ConstPoly* {
            auto it = reps.find(s);
            return it == reps.end() ? nullptr : it->second;
        });
    }
    std::unique_lock lock(mu_);
    return memo_.try_emplace(g.key, std::move(nf)).first->second;
}

ConstPoly C2Normalizer::normalize(const ConstPoly& p) {
    std::map<ConstSymbol, const ConstPoly*, SymbolLess> reps;
    for (const auto& s : p.variables())
        if (const auto* h = std::get_if<C2Gen>(&s)) reps.emplace(s, &normal_form(*h));
    return p.substitute([&](const ConstSymbol& s) -> const ConstPoly* {
        auto it = reps.find(s);
        return it == reps.end() ? nullptr : it->second;
    });
}

ConstPoly C2Normalizer::normalize_monomial(const ConstMono& m) {
    ConstPoly out(1);
    ConstMono kept;
    for (const auto& [s, e] : m) {
        if (const auto* h = std::get_if<C2Gen>(&s)) {
            const ConstPoly& nf = normal_form(*h);
            out = out * (e == 1 ? nf : nf.pow(e));
        } else {
            kept.emplace_back(s, e);
        }
    }
    if (kept.empty()) return out;
    ConstPoly shifted;
    for (const auto& [tm, tc] : out.terms()) shifted.add_term(ConstPoly::mono_mul(tm, kept), tc);
    return shifted;
}

std::size_t C2Normalizer::memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
}

C2Normalizer& default_normalizer() {
    static C2Normalizer n;
    return n;
}

ConstPoly c2_normalize(const ConstPoly& p) { return default_normalizer().normalize(p); }

}  // namespace idring
