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
// Elements of IDR(R) = R (x) C1 (x) C2 (x) T as sums of terms
// (constant monomial, word) -> base element, with product, derivation,
// integration and evaluation. A context fixes the base ring and the mode.

#ifndef IDRING_IDR_HPP
#define IDRING_IDR_HPP

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idring/basering.hpp"
#include "idring/constants.hpp"
#include "idring/tensor.hpp"

namespace idring {

enum class Mode { Free, QRespecting, Multiplicative };

std::string mode_name(Mode m);
// Accepts free, q and ida. Throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view s);

template <DifferentialBase B>
class Idr;

template <DifferentialBase B>
class IdrElem {
public:
    using Elem = typename B::Elem;
    using Key = std::pair<ConstMono, Word>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            ConstPoly::MonoLess ml;
            if (ml(a.first, b.first)) return true;
            if (ml(b.first, a.first)) return false;
            return dlex_cmp(a.second, b.second) < 0;
        }
    };
    using TermMap = std::map<Key, Elem, KeyLess>;

    IdrElem() = default;
    IdrElem(std::shared_ptr<const Idr<B>> ctx, TermMap terms = {}) : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

    const std::shared_ptr<const Idr<B>>& ctx() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Elem& f) { add_to(terms_, k, f); }
    static void add_to(TermMap& m, const Key& k, const Elem& f) {
        if (B::is_zero(f)) return;
        auto [it, inserted] = m.try_emplace(k, f);
        if (!inserted) {
            it->second += f;
            if (B::is_zero(it->second)) m.erase(it);
        }
    }

    IdrElem& operator+=(const IdrElem& o) {
        adopt(o);
        for (const auto& [k, f] : o.terms_) add(k, f);
        return *this;
    }
    IdrElem& operator-=(const IdrElem& o) {
        adopt(o);
        for (const auto& [k, f] : o.terms_) add(k, f * B::scalar(-1));
        return *this;
    }
    IdrElem operator-() const {
        IdrElem r(ctx_);
        for (const auto& [k, f] : terms_) r.terms_.emplace(k, f * B::scalar(-1));
        return r;
    }
    friend IdrElem operator+(IdrElem a, const IdrElem& b) { return a += b; }
    friend IdrElem operator-(IdrElem a, const IdrElem& b) { return a -= b; }
    friend IdrElem operator*(const IdrElem& a, const Rational& c) {
        IdrElem r(a.ctx_);
        if (c == 0) return r;
        for (const auto& [k, f] : a.terms_) r.terms_.emplace(k, f * B::scalar(c));
        return r;
    }
    friend IdrElem operator*(const IdrElem& a, const IdrElem& b) {
        const auto& ctx = a.ctx_ ? a.ctx_ : b.ctx_;
        if (!ctx) return IdrElem();
        return ctx->mul(a, b);
    }
    friend bool operator==(const IdrElem& a, const IdrElem& b) { return a.terms_ == b.terms_; }

private:
    void adopt(const IdrElem& o) {
        if (!ctx_) ctx_ = o.ctx_;
        else if (o.ctx_ && o.ctx_ != ctx_) throw std::invalid_argument("IDR elements from different contexts");
    }

    std::shared_ptr<const Idr<B>> ctx_;
    TermMap terms_;
};

template <DifferentialBase B>
class Idr : public std::enable_shared_from_this<Idr<B>> {
public:
    using Elem = typename B::Elem;
    using E = IdrElem<B>;
    using Key = typename E::Key;
    using TermMap = typename E::TermMap;
    // Word part of a product: result word -> coefficient over C2 symbols.
    using WordProduct = std::map<Word, ConstPoly, DlexLess>;

    static std::shared_ptr<Idr> create(std::shared_ptr<B> base, Mode mode,
                                       C2Normalizer* normalizer = &default_normalizer()) {
        return std::shared_ptr<Idr>(new Idr(std::move(base), mode, normalizer));
    }

    const B& base() const { return *base_; }
    const std::shared_ptr<B>& base_ptr() const { return base_; }
    Mode mode() const { return mode_; }
    C2Normalizer& normalizer() const { return *normalizer_; }

    E zero() const { return E(self()); }
    E one() const { return embed(B::scalar(1)); }
    E embed(const Elem& f) const {
        E r(self());
        r.add({{}, {}}, f);
        return r;
    }
    E term(const Elem& f, const ConstMono& m, const Word& w) const {
        TermMap raw;
        E::add_to(raw, {m, w}, f);
        return finish(std::move(raw));
    }
    E constant(const ConstPoly& p) const {
        TermMap raw;
        for (const auto& [m, c] : p.terms()) E::add_to(raw, {m, {}}, B::scalar(c));
        return finish(std::move(raw));
    }

    // f0 * int f1 * int f2 ... * int fn for f1..fn in ker Q.
    E nested_integral(const Elem& f0, const std::vector<Elem>& fs) const {
        std::vector<std::pair<Word, Rational>> acc{{{}, 1}};
        for (const auto& f : fs) {
            if (!B::is_zero(base_->quasi_int(f)))
                throw std::invalid_argument(B::elem_string(f) + " is not in the kernel of Q");
            std::vector<std::pair<Word, Rational>> next;
            for (const auto& [w, c] : acc)
                for (const auto& [l, cl] : base_->t_part(f)) {
                    Word u = w;
                    u.push_back(l);
                    next.emplace_back(std::move(u), c * cl);
                }
            acc = std::move(next);
        }
        E r(self());
        for (const auto& [w, c] : acc) r.add({{}, w}, f0 * B::scalar(c));
        return r;
    }

    E mul(const E& a, const E& b) const {
        check(a);
        check(b);
        TermMap raw;
        for (const auto& [ka, fa] : a.terms())
            for (const auto& [kb, fb] : b.terms()) {
                Elem f = fa * fb;
                if (B::is_zero(f)) continue;
                ConstMono m = ConstPoly::mono_mul(ka.first, kb.first);
                for (const auto& [u, poly] : word_product(ka.second, kb.second))
                    for (const auto& [cm, cc] : poly.terms())
                        E::add_to(raw, {ConstPoly::mono_mul(m, cm), u}, f * B::scalar(cc));
            }
        return finish(std::move(raw));
    }

    E derive(const E& a) const {
        check(a);
        E r(self());
        for (const auto& [k, f0] : a.terms()) {
            r.add(k, base_->derive(f0));
            if (!k.second.empty()) {
                Word tail(k.second.begin() + 1, k.second.end());
                r.add({k.first, tail}, f0 * base_->letter_value(k.second.front()));
            }
        }
        return r;
    }

    E integrate(const E& a) const {
        check(a);
        TermMap raw;
        for (const auto& [k, f0] : a.terms()) integrate_term(f0, k.first, k.second, raw);
        return finish(std::move(raw));
    }

    E evaluate(const E& a) const { return a - integrate(derive(a)); }

    // Closed form of the evaluation, term by term.
    E evaluate_explicit(const E& a) const {
        check(a);
        TermMap raw;
        for (const auto& [k, f0] : a.terms()) {
            const auto& [c, w] = k;
            Elem q = base_->quasi_int(base_->derive(f0));
            CjSplit split = base_->cj_split(q);
            if (w.empty()) {
                auto cst = B::as_constant(f0 - q);
                if (!cst) throw std::logic_error("f - Q d f is not constant");
                E::add_to(raw, {c, {}}, B::scalar(*cst));
                if (mode_ != Mode::QRespecting)
                    for (const auto& [b, cb] : split.j) E::add_to(raw, {with_c1(c, b, {}), {}}, B::scalar(cb));
            } else if (mode_ != Mode::Multiplicative) {
                for (const auto& [b, cb] : split.j) E::add_to(raw, {with_c1(c, b, w), {}}, B::scalar(cb));
            }
        }
        return finish(std::move(raw));
    }

    bool is_constant(const E& a) const {
        for (const auto& [k, f] : a.terms())
            if (!k.second.empty() || !B::as_constant(f)) return false;
        return true;
    }

    // Applies the mode's constant rewriting to every monomial.
    E finish(TermMap raw) const {
        E r(self());
        for (const auto& [k, f] : raw) {
            if (k.first.empty()) {
                r.add(k, f);
                continue;
            }
            const ConstPoly& p = reduce_monomial(k.first);
            for (const auto& [m, c] : p.terms()) r.add({m, k.second}, c == 1 ? f : f * B::scalar(c));
        }
        return r;
    }

    // Generalized shuffle of two words, cached.
    const WordProduct& word_product(const Word& f, const Word& g) const {
        const bool swap = dlex_cmp(g, f) < 0;
        const Word& u = swap ? g : f;
        const Word& v = swap ? f : g;
        std::pair<Word, Word> key{u, v};
        {
            std::shared_lock lock(wp_mu_);
            auto it = wp_cache_.find(key);
            if (it != wp_cache_.end()) return it->second;
        }
        WordProduct wp;
        auto add = [&](const TensorElem& t, const ConstPoly& c) {
            for (const auto& [w, cw] : t.terms()) wp[w] += c * cw;
        };
        add(shuffle_mul(TensorElem::word(u), TensorElem::word(v)), ConstPoly(1));
        if (mode_ != Mode::Multiplicative) {
            for (std::size_t i = 0; i < u.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j) {
                    Word us(u.begin() + static_cast<long>(i), u.end());
                    Word vs(v.begin() + static_cast<long>(j), v.end());
                    Word up(u.begin(), u.begin() + static_cast<long>(i));
                    Word vp(v.begin(), v.begin() + static_cast<long>(j));
                    ConstPoly e = normalizer_->normalize(const_var(c2gen_canonical(us, vs)));
                    add(shuffle_mul(TensorElem::word(up), TensorElem::word(vp)), e);
                }
        }
        std::erase_if(wp, [](const auto& kv) { return kv.second.is_zero(); });
        std::unique_lock lock(wp_mu_);
        return wp_cache_.try_emplace(std::move(key), std::move(wp)).first->second;
    }

    std::string term_string(const Key& k, const Elem& f, bool leading) const {
        std::vector<std::string> parts;
        bool neg = false;
        auto cst = B::as_constant(f);
        bool has_rest = !k.first.empty() || !k.second.empty();
        if (cst) {
            Rational c = *cst;
            neg = c < 0;
            if (neg) c = -c;
            if (c != 1 || !has_rest) parts.push_back(c.get_str());
        } else {
            std::string s = B::elem_string(f);
            if (has_rest && s.find_first_of("+-", 1) != std::string::npos) s = "(" + s + ")";
            parts.push_back(s);
        }
        if (!k.first.empty()) {
            ConstPoly mono = ConstPoly::monomial(k.first, 1);
            parts.push_back(mono.to_string(symbol_name));
        }
        if (!k.second.empty()) {
            std::string s = "II(";
            for (std::size_t i = 0; i < k.second.size(); ++i)
                s += (i ? "," : "") + base_->letter_name(k.second[i]);
            parts.push_back(s + ")");
        }
        std::string body;
        for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
        if (leading) return (neg ? "-" : "") + body;
        return (neg ? " - " : " + ") + body;
    }

    std::string to_string(const E& a) const {
        if (a.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, f] : a.terms()) {
            s += term_string(k, f, first);
            first = false;
        }
        return s;
    }

    // Letters and R_J basis ids occurring in a, with their base ring values.
    std::string legend(const E& a) const {
        auto [letters, rjs] = used_symbols(a);
        std::string s;
        for (Letter l : letters) s += (s.empty() ? "" : "\n") + letter_name(l) + " = " + base_->letter_name(l);
        for (RjId id : rjs) s += (s.empty() ? "" : "\n") + std::string("J:") + std::to_string(id) + " = " + base_->rj_name(id);
        return s;
    }

    nlohmann::json to_json(const E& a) const {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [k, f] : a.terms()) {
            nlohmann::json c1 = nlohmann::json::array(), c2 = nlohmann::json::array();
            for (const auto& [s, e] : k.first) {
                if (const auto* g = std::get_if<C1Gen>(&s))
                    c1.push_back({{"rj", g->rj}, {"word", g->word}, {"exp", e}, {"name", symbol_name(s)}});
                else {
                    const auto& key = std::get<C2Gen>(s).key;
                    c2.push_back({{"v", key.v}, {"w", key.w}, {"exp", e}, {"name", symbol_name(s)}});
                }
            }
            terms.push_back({{"base", B::elem_string(f)}, {"c1", c1}, {"c2", c2}, {"word", k.second}});
        }
        auto [letters, rjs] = used_symbols(a);
        nlohmann::json alphabet = nlohmann::json::array(), rj = nlohmann::json::array();
        for (Letter l : letters) alphabet.push_back({{"id", l}, {"name", letter_name(l)}, {"value", base_->letter_name(l)}});
        for (RjId id : rjs) rj.push_back({{"id", id}, {"value", base_->rj_name(id)}});
        return {{"mode", mode_name(mode_)}, {"base_ring", base_->name()}, {"terms", terms}, {"alphabet", alphabet},
                {"rj_basis", rj}, {"text", to_string(a)}};
    }

private:
    Idr(std::shared_ptr<B> base, Mode mode, C2Normalizer* normalizer)
        : base_(std::move(base)), mode_(mode), normalizer_(normalizer) {}

    std::shared_ptr<const Idr> self() const { return this->shared_from_this(); }

    void check(const E& a) const {
        if (a.ctx() && a.ctx().get() != this) throw std::invalid_argument("IDR element from a different context");
    }

    static ConstMono with_c1(const ConstMono& c, RjId b, const Word& w) {
        return ConstPoly::mono_mul(c, ConstMono{{ConstSymbol{C1Gen{b, w}}, 1u}});
    }

    void integrate_term(const Elem& f0, const ConstMono& c, const Word& w, TermMap& raw) const {
        if (B::is_zero(f0)) return;
        Elem q = base_->quasi_int(f0);
        E::add_to(raw, {c, w}, q);
        for (const auto& [l, cl] : base_->t_part(f0)) {
            Word u;
            u.reserve(w.size() + 1);
            u.push_back(l);
            u.insert(u.end(), w.begin(), w.end());
            E::add_to(raw, {c, u}, B::scalar(cl));
        }
        if (B::is_zero(q)) return;
        CjSplit split = base_->cj_split(q);
        if (w.empty()) {
            if (mode_ != Mode::QRespecting)
                for (const auto& [b, cb] : split.j) E::add_to(raw, {with_c1(c, b, {}), {}}, B::scalar(-cb));
            return;
        }
        if (mode_ != Mode::Multiplicative)
            for (const auto& [b, cb] : split.j) E::add_to(raw, {with_c1(c, b, w), {}}, B::scalar(-cb));
        Word tail(w.begin() + 1, w.end());
        integrate_term(q * base_->letter_value(w.front()) * B::scalar(-1), c, tail, raw);
    }

    const ConstPoly& reduce_monomial(const ConstMono& m) const {
        {
            std::shared_lock lock(mono_mu_);
            auto it = mono_cache_.find(m);
            if (it != mono_cache_.end()) return it->second;
        }
        ConstPoly p = compute_monomial(m);
        std::unique_lock lock(mono_mu_);
        return mono_cache_.try_emplace(m, std::move(p)).first->second;
    }

    ConstPoly compute_monomial(const ConstMono& m) const {
        bool has_c2 = false;
        for (const auto& [s, e] : m) {
            if (const auto* g = std::get_if<C1Gen>(&s)) {
                if (g->word.empty() && mode_ == Mode::QRespecting) return ConstPoly();
                if (!g->word.empty() && mode_ == Mode::Multiplicative) return ConstPoly();
            } else {
                has_c2 = true;
            }
        }
        if (mode_ == Mode::Multiplicative) {
            if (has_c2) return ConstPoly();
            std::vector<RjId> gens;
            for (const auto& [s, e] : m)
                for (unsigned i = 0; i < e; ++i) gens.push_back(std::get<C1Gen>(s).rj);
            return multiply_evaluations(gens);
        }
        if (!has_c2) return ConstPoly::monomial(m, 1);
        return normalizer_->normalize_monomial(m);
    }

    // eps(f) eps(g) = E(fg) = c + eps(Q d(fg)) when evaluation is multiplicative.
    ConstPoly multiply_evaluations(const std::vector<RjId>& gens) const {
        if (gens.size() <= 1) {
            ConstPoly p(1);
            if (!gens.empty()) p = const_var(C1Gen{gens[0], {}});
            return p;
        }
        Elem f = base_->rj_value(gens[0]) * base_->rj_value(gens[1]);
        CjSplit split = base_->cj_split(f);
        std::vector<RjId> rest(gens.begin() + 2, gens.end());
        ConstPoly out = multiply_evaluations(rest) * split.c;
        for (const auto& [b, cb] : split.j) {
            std::vector<RjId> next = rest;
            next.push_back(b);
            out += multiply_evaluations(next) * cb;
        }
        return out;
    }

    std::pair<std::set<Letter>, std::set<RjId>> used_symbols(const E& a) const {
        std::set<Letter> letters;
        std::set<RjId> rjs;
        for (const auto& [k, f] : a.terms()) {
            letters.insert(k.second.begin(), k.second.end());
            for (const auto& [s, e] : k.first) {
                if (const auto* g = std::get_if<C1Gen>(&s)) {
                    rjs.insert(g->rj);
                    letters.insert(g->word.begin(), g->word.end());
                } else {
                    const auto& key = std::get<C2Gen>(s).key;
                    letters.insert(key.v.begin(), key.v.end());
                    letters.insert(key.w.begin(), key.w.end());
                }
            }
        }
        return {letters, rjs};
    }

    std::shared_ptr<B> base_;
    Mode mode_;
    C2Normalizer* normalizer_;

    mutable std::shared_mutex wp_mu_;
    mutable std::map<std::pair<Word, Word>, WordProduct> wp_cache_;
    mutable std::shared_mutex mono_mu_;
    mutable std::map<ConstMono, ConstPoly, ConstPoly::MonoLess> mono_cache_;
};

// Projection from Free mode onto QRespecting or Multiplicative (identity when
// the modes agree). Both contexts must share the base ring.
template <DifferentialBase B>
IdrElem<B> mode_project(const IdrElem<B>& a, const Idr<B>& target) {
    if (!a.ctx()) return target.zero();
    const Idr<B>& source = *a.ctx();
    if (source.base_ptr() != target.base_ptr()) throw std::invalid_argument("mode_project needs a shared base ring");
    if (source.mode() != target.mode() && source.mode() != Mode::Free)
        throw std::invalid_argument("unsupported projection " + mode_name(source.mode()) + " -> " +
                                    mode_name(target.mode()));
    return target.finish(a.terms());
}

// The homomorphism into the Laurent-log model: letters and base elements map
// through to_model, words to nested integrals, constants to evaluations.
template <DifferentialBase B>
class ModelMap {
public:
    ModelMap(const Idr<B>& ctx, int truncation) : ctx_(ctx), n_(truncation) {}

    const LaurentLog& sigma(const Word& w) {
        auto it = sigma_.find(w);
        if (it != sigma_.end()) return it->second;
        LaurentLog s(1);
        if (!w.empty()) {
            Word tail(w.begin() + 1, w.end());
            LaurentLog inner = sigma(tail);
            s = laurent_integrate(ctx_.base().to_model(ctx_.base().letter_value(w.front()), n_) * inner);
        }
        return sigma_.emplace(w, std::move(s)).first->second;
    }

    Rational symbol_value(const ConstSymbol& s) {
        auto it = values_.find(s);
        if (it != values_.end()) return it->second;
        Rational v;
        if (const auto* g = std::get_if<C1Gen>(&s)) {
            LaurentLog f0 = ctx_.base().to_model(ctx_.base().rj_value(g->rj), n_);
            v = laurent_evaluate(f0 * sigma(g->word));
        } else {
            const auto& key = std::get<C2Gen>(s).key;
            LaurentLog a = sigma(key.v);
            v = laurent_evaluate(a * sigma(key.w));
        }
        values_.emplace(s, v);
        return v;
    }

    Rational monomial_value(const ConstMono& m) {
        Rational v(1);
        for (const auto& [s, e] : m) {
            Rational sv = symbol_value(s);
            for (unsigned i = 0; i < e; ++i) v *= sv;
        }
        return v;
    }

    LaurentLog eta(const IdrElem<B>& a) {
        LaurentLog out;
        for (const auto& [k, f] : a.terms()) {
            Rational c = monomial_value(k.first);
            if (c == 0) continue;
            LaurentLog t = ctx_.base().to_model(f, n_) * sigma(k.second);
            t *= c;
            out += t;
        }
        return out;
    }

private:
    const Idr<B>& ctx_;
    int n_;
    std::map<Word, LaurentLog> sigma_;
    std::map<ConstSymbol, Rational, SymbolLess> values_;
};

template <DifferentialBase B>
LaurentLog eta_model(const IdrElem<B>& a, int truncation) {
    if (!a.ctx()) return LaurentLog();
    ModelMap<B> m(*a.ctx(), truncation);
    return m.eta(a);
}

template <DifferentialBase B>
std::map<ConstSymbol, Rational, SymbolLess> closure_constants(const IdrElem<B>& a, int truncation) {
    std::map<ConstSymbol, Rational, SymbolLess> out;
    if (!a.ctx()) return out;
    ModelMap<B> m(*a.ctx(), truncation);
    for (const auto& [k, f] : a.terms())
        for (const auto& [s, e] : k.first) out.emplace(s, m.symbol_value(s));
    return out;
}

// Substitutes every constant symbol by its model value.
template <DifferentialBase B>
IdrElem<B> closure_reduce(const IdrElem<B>& a, int truncation) {
    if (!a.ctx()) return a;
    ModelMap<B> m(*a.ctx(), truncation);
    IdrElem<B> r(a.ctx());
    for (const auto& [k, f] : a.terms()) {
        Rational c = m.monomial_value(k.first);
        if (c != 0) r.add({{}, k.second}, f * B::scalar(c));
    }
    return r;
}

// Value of a constant polynomial under the model map.
template <DifferentialBase B>
Rational model_value(const ConstPoly& p, ModelMap<B>& m) {
    Rational v(0);
    for (const auto& [mono, c] : p.terms()) v += c * m.monomial_value(mono);
    return v;
}

}  // namespace idring

#endif  // IDRING_IDR_HPP
