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

#include "idring/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace idring {

TensorElem TensorElem::word(const Word& w, const Rational& c) {
    TensorElem t;
    t.add(w, c);
    return t;
}

Rational TensorElem::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElem::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

TensorElem& TensorElem::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

std::string TensorElem::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.get_str() << '*';
        os << (w.empty() ? std::string("1") : word_name(w));
    }
    return os.str();
}

TensorElem shuffle_mul(const TensorElem& s, const TensorElem& t) {
    TensorElem out;
    for (const auto& [v, cv] : s.terms())
        for (const auto& [w, cw] : t.terms()) {
            Rational c = cv * cw;
            for (const auto& [u, mult] : shuffle_multiset(v, w)) out.add(u, c * Rational(mult));
        }
    return out;
}

namespace {

TensorElem shuffle_of(const LyndonMultiset& ws) {
    TensorElem acc = TensorElem::word({});
    for (const auto& w : ws) acc = shuffle_mul(acc, TensorElem::word(w));
    return acc;
}

}  // namespace

LyndonPoly lyndon_decompose(const TensorElem& t) {
    LyndonPoly out;
    TensorElem rest = t;
    while (!rest.is_zero()) {
        auto top = std::prev(rest.terms().end());
        const Word w = top->first;
        const Rational c = top->second;
        LyndonMultiset factors;
        if (!w.empty()) {
            factors = lyndon_factorization(w);
            std::sort(factors.begin(), factors.end());
        }
        TensorElem sh = shuffle_of(factors);
        Rational lead = sh.coeff(w);
        if (lead == 0 || std::prev(sh.terms().end())->first != w)
            throw std::logic_error("Lyndon triangularity failed for " + word_name(w));
        Rational k = c / lead;
        out[factors] += k;
        if (out[factors] == 0) out.erase(factors);
        rest -= sh * k;
    }
    return out;
}

TensorElem lyndon_recompose(const LyndonPoly& p) {
    TensorElem out;
    for (const auto& [ms, c] : p) out += shuffle_of(ms) * c;
    return out;
}

}  // namespace idring
