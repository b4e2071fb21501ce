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
// Differential base rings with a quasi-integration Q. Every instance splits
// f = dQf + T(f) with T(f) expanded over the letters of R_T = ker Q, and
// f = c + (R_J part) with R_J = im Q expanded over numbered basis elements.

#ifndef IDRING_BASERING_HPP
#define IDRING_BASERING_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idring/laurent.hpp"
#include "idring/ratfun.hpp"
#include "idring/words.hpp"

namespace idring {

using RjId = std::uint32_t;
using LetterExpansion = std::vector<std::pair<Letter, Rational>>;
using RjExpansion = std::vector<std::pair<RjId, Rational>>;

struct CjSplit {
    Rational c;
    RjExpansion j;
};

template <class B>
concept DifferentialBase = requires(const B& b, const typename B::Elem& f, Letter l, RjId id, int n) {
    { B::scalar(Rational(1)) } -> std::same_as<typename B::Elem>;
    { B::is_zero(f) } -> std::same_as<bool>;
    { B::as_constant(f) } -> std::same_as<std::optional<Rational>>;
    { B::elem_string(f) } -> std::same_as<std::string>;
    { b.derive(f) } -> std::same_as<typename B::Elem>;
    { b.quasi_int(f) } -> std::same_as<typename B::Elem>;
    { b.t_part(f) } -> std::same_as<LetterExpansion>;
    { b.cj_split(f) } -> std::same_as<CjSplit>;
    { b.letter_value(l) } -> std::same_as<typename B::Elem>;
    { b.rj_value(id) } -> std::same_as<typename B::Elem>;
    { b.letter_name(l) } -> std::same_as<std::string>;
    { b.rj_name(id) } -> std::same_as<std::string>;
    { b.to_model(f, n) } -> std::same_as<LaurentLog>;
    { b.name() } -> std::same_as<std::string>;
};

// Append-only table from keys to dense ids; safe for concurrent use.
template <class Key, class Less = std::less<Key>>
class Registry {
public:
    std::uint32_t id_of(const Key& k) {
        {
            std::shared_lock lock(mu_);
            auto it = ids_.find(k);
            if (it != ids_.end()) return it->second;
        }
        std::unique_lock lock(mu_);
        auto [it, inserted] = ids_.try_emplace(k, static_cast<std::uint32_t>(keys_.size()));
        if (inserted) keys_.push_back(k);
        return it->second;
    }
    std::optional<std::uint32_t> find(const Key& k) const {
        std::shared_lock lock(mu_);
        auto it = ids_.find(k);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }
    Key key(std::uint32_t id) const {
        std::shared_lock lock(mu_);
        if (id >= keys_.size()) throw std::out_of_range("unregistered id " + std::to_string(id));
        return keys_[id];
    }
    std::size_t size() const {
        std::shared_lock lock(mu_);
        return keys_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, std::uint32_t, Less> ids_;
    std::vector<Key> keys_;
};

// Q(x) with Q computed from partial fractions and Hermite reduction.
// Letters are x^k/p for monic irreducible p and k < deg p; R_J is spanned by
// x^k (k >= 1) and x^k/p^j (j >= 1, k < deg p).
class RationalBase {
public:
    using Elem = RatFun;

    struct LetterKey {
        UniPoly p;
        unsigned k = 0;
        friend auto operator<=>(const LetterKey&, const LetterKey&) = default;
        friend bool operator==(const LetterKey&, const LetterKey&) = default;
    };
    struct RjKey {
        UniPoly p;       // unused when j == 0
        unsigned j = 0;  // 0 means the monomial x^k
        unsigned k = 0;
        friend auto operator<=>(const RjKey&, const RjKey&) = default;
        friend bool operator==(const RjKey&, const RjKey&) = default;
    };

    static Elem scalar(const Rational& c) { return RatFun(c); }
    static bool is_zero(const Elem& f) { return f.is_zero(); }
    static std::optional<Rational> as_constant(const Elem& f);
    static std::string elem_string(const Elem& f) { return f.to_string(); }
    static Elem parse(std::string_view s) { return RatFun::parse(s); }

    Elem derive(const Elem& f) const { return f.derivative(); }
    Elem quasi_int(const Elem& f) const;
    LetterExpansion t_part(const Elem& f) const;
    CjSplit cj_split(const Elem& f) const;
    Elem letter_value(Letter l) const;
    Elem rj_value(RjId id) const;
    std::string letter_name(Letter l) const { return letter_value(l).to_string(); }
    std::string rj_name(RjId id) const { return rj_value(id).to_string(); }
    LaurentLog to_model(const Elem& f, int n) const { return expand_ratfun(f, n); }
    std::string name() const { return "rational"; }

    // Registers x^k/p ahead of use so that it gets the next letter id.
    Letter pin_letter(const UniPoly& p, unsigned k) const;
    // For f in R_T: the letter expansion; throws std::invalid_argument otherwise.
    LetterExpansion letters_of(const Elem& f) const;
    std::size_t letter_count() const { return letters_.size(); }
    LetterKey letter_key(Letter l) const { return letters_.key(l); }
    RjKey rj_key(RjId id) const { return rj_.key(id); }

private:
    struct Hermite {
        RatFun q;
        std::vector<PfTerm> simple;  // remaining a/p terms
    };
    Hermite hermite(const Elem& f) const;

    mutable Registry<LetterKey> letters_;
    mutable Registry<RjKey> rj_;
    mutable std::shared_mutex cache_mu_;
    mutable std::map<RatFun, Hermite> cache_;
};

// R = Q with d = 0 and Q = 0. R_T = Q is spanned by the single letter 1 and
// R_J = 0.
class TrivialBase {
public:
    using Elem = Rational;

    static Elem scalar(const Rational& c) { return c; }
    static bool is_zero(const Elem& f) { return f == 0; }
    static std::optional<Rational> as_constant(const Elem& f) { return f; }
    static std::string elem_string(const Elem& f) { return f.get_str(); }
    static Elem parse(std::string_view s) { return parse_rational(s); }

    Elem derive(const Elem&) const { return 0; }
    Elem quasi_int(const Elem&) const { return 0; }
    LetterExpansion t_part(const Elem& f) const;
    CjSplit cj_split(const Elem& f) const { return {f, {}}; }
    Elem letter_value(Letter l) const;
    Elem rj_value(RjId id) const;
    std::string letter_name(Letter l) const { return letter_value(l).get_str(); }
    std::string rj_name(RjId id) const { return rj_value(id).get_str(); }
    LaurentLog to_model(const Elem& f, int) const { return LaurentLog(f); }
    std::string name() const { return "trivial"; }
};

// Exact Laurent polynomials Q[x, 1/x] (log-free LaurentLog values). Q is
// termwise integration dropping x^-1; the single letter is 1/x; R_J is spanned
// by x^k with k != 0.
class LaurentBase {
public:
    using Elem = LaurentLog;

    static Elem scalar(const Rational& c) { return LaurentLog(c); }
    static bool is_zero(const Elem& f) { return f.is_zero(); }
    static std::optional<Rational> as_constant(const Elem& f);
    static std::string elem_string(const Elem& f) { return f.to_string(); }

    Elem derive(const Elem& f) const;
    Elem quasi_int(const Elem& f) const;
    LetterExpansion t_part(const Elem& f) const;
    CjSplit cj_split(const Elem& f) const;
    Elem letter_value(Letter l) const;
    Elem rj_value(RjId id) const;
    std::string letter_name(Letter l) const { return letter_value(l).to_string(); }
    std::string rj_name(RjId id) const { return rj_value(id).to_string(); }
    LaurentLog to_model(const Elem& f, int) const { return f; }
    std::string name() const { return "laurent"; }

private:
    mutable Registry<int> exponents_;
};

static_assert(DifferentialBase<RationalBase>);
static_assert(DifferentialBase<TrivialBase>);
static_assert(DifferentialBase<LaurentBase>);

}  // namespace idring

#endif  // IDRING_BASERING_HPP
