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

#include <doctest.h>

#include "idring/constants.hpp"
#include "idring/verify.hpp"
#include "oracles.hpp"

using namespace idring;

namespace {

Word W(const char* s) { return parse_word(s); }
ConstPoly c(const char* v, const char* w) { return const_var(c2gen_canonical(W(v), W(w))); }

}  // namespace

TEST_CASE("canonical generators") {
    CHECK(c2gen_canonical(W("aa"), W("a")).key == GenKey{W("a"), W("aa")});
    CHECK(c2gen_canonical(W("a"), W("b")).key == GenKey{W("a"), W("b")});
    CHECK(c2gen_canonical(W("ab"), W("ab")).key == GenKey{W("ab"), W("ab")});
    CHECK(symbol_name(c2gen_canonical(W("b"), W("a"))) == "c(a|b)");
    CHECK(symbol_name(C1Gen{3, W("ab")}) == "eps(J:3;W:ab)");
    CHECK(symbol_name(C1Gen{0, {}}) == "eps(J:0;W:)");
}

TEST_CASE("epsilon expansion is bilinear and symmetric") {
    auto a = TensorElem::word(W("a")), b = TensorElem::word(W("b"));
    CHECK(epsilon_expand(a, a) == c("a", "a"));
    CHECK(epsilon_expand(a * Rational(2), b) == c("a", "b") * Rational(2));
    CHECK(epsilon_expand(a + b, a) == c("a", "a") + c("a", "b"));
    CHECK_THROWS(epsilon_expand(TensorElem::word({}), a));
}

TEST_CASE("relations") {
    CHECK(relation_poly(W("a"), W("a"), W("aa")) ==
          c("aa", "aa") * Rational(2) - c("a", "aaa") * Rational(3) - c("a", "a") * c("a", "a"));
    CHECK(relation_poly(W("a"), W("a"), W("a")).is_zero());
    CHECK_THROWS_AS(relation_r(W("b"), W("a"), W("a")), std::invalid_argument);
}

TEST_CASE("relations agree with the associator of the raw product") {
    auto words = all_words_upto(2, 3);
    for (const auto& f : words)
        for (const auto& g : words)
            for (const auto& h : words) {
                if (f.size() + g.size() + h.size() > 5) continue;
                auto as = oracle::associator(f, g, h);
                auto it = as.find(Word{});
                ConstPoly expected = it == as.end() ? ConstPoly() : it->second;
                CHECK(relation_poly(f, g, h) == expected);
            }
}

TEST_CASE("rank-1 relations agree with the word relations") {
    // c_{n,m} -> c(a^n|a^m)
    auto to_words = [](const Rank1Poly& p) {
        ConstPoly out;
        for (const auto& [m, k] : p.terms()) {
            ConstPoly t(k);
            for (const auto& [v, e] : m)
                t = t * const_var(c2gen_canonical(Word(v.first, 0), Word(v.second, 0))).pow(e);
            out += t;
        }
        return out;
    };
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned l = 1; l <= 3; ++l)
                CHECK(to_words(rank1_relation(n, m, l)) == relation_poly(Word(n, 0), Word(m, 0), Word(l, 0)));
}

TEST_CASE("leading generators") {
    ConstPoly r = relation_r(W("a"), W("a"), W("aa"));
    auto g = leading_c2gen(r);
    REQUIRE(g.has_value());
    CHECK(g->key == GenKey{W("aa"), W("aa")});
    CHECK(linear_coefficient(r, *g) == Rational(2));
    CHECK_FALSE(leading_c2gen(ConstPoly(3)).has_value());
    CHECK_FALSE(linear_coefficient(c("a", "a") * c("a", "a"), C2Gen{{W("a"), W("a")}}).has_value());
}

TEST_CASE("canonical relations and reduction") {
    CHECK_FALSE(canonical_relation(C2Gen{{W("a"), W("aa")}}).has_value());
    CHECK_FALSE(canonical_relation(C2Gen{{W("a"), W("a")}}).has_value());
    CHECK(canonical_relation(C2Gen{{W("aa"), W("aa")}}).has_value());
    ConstPoly expected = (c("a", "aaa") * Rational(3) + c("a", "a") * c("a", "a")) * Rational(1, 2);
    CHECK(reduce_c2gen(C2Gen{{W("aa"), W("aa")}}) == expected);
    CHECK(reduce_c2gen(C2Gen{{W("a"), W("aa")}}) == c("a", "aa"));
    CHECK(c2_normalize(c("aa", "aa")) == expected);
    CHECK(c2_normalize(c("a", "a")) == c("a", "a"));
    CHECK(c2_normalize(c("aa", "aa") * c("a", "a")) == expected * c("a", "a"));
}

TEST_CASE("normal forms only involve generators in S and satisfy all relations") {
    C2Normalizer norm;
    auto gens = all_generators(2, 5);
    for (const auto& g : gens) {
        ConstPoly nf = norm.normal_form(C2Gen{g});
        for (const auto& v : nf.variables()) {
            const auto& key = std::get<C2Gen>(v).key;
            CHECK(is_in_S(key.v, key.w));
        }
        CHECK(norm.normalize(nf) == nf);
    }
    auto words = all_words_upto(2, 3);
    for (const auto& f : words)
        for (const auto& g : words)
            for (const auto& h : words)
                if (f.size() + g.size() + h.size() <= 5) CHECK(norm.normalize(relation_poly(f, g, h)).is_zero());
}

TEST_CASE("constant polynomial printing") {
    CHECK(const_poly_string(c("a", "a") * Rational(2) - c("a", "b")) == "2*c(a|a) - c(a|b)");
    CHECK(const_poly_string(ConstPoly()) == "0");
}
