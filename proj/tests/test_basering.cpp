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

#include "idring/basering.hpp"
#include "properties.hpp"

using namespace idring;

namespace {

RatFun R(const char* s) { return RatFun::parse(s); }
LaurentLog xk(const Rational& c, int k, unsigned n = 0) { return LaurentLog::monomial(c, k, n); }

LaurentLog random_laurent(fuzz::Rng& rng, int window) {
    LaurentLog f = LaurentLog::zero_with_window(window);
    for (int t = static_cast<int>(fuzz::uniform(rng, 1, 4)); t > 0; --t)
        f += LaurentLog::monomial(fuzz::rational(rng, 10), static_cast<int>(fuzz::uniform(rng, -3, 3)),
                                  static_cast<unsigned>(fuzz::uniform(rng, 0, 2)), window);
    return f;
}

}  // namespace

TEST_CASE("Laurent-log integration and evaluation") {
    CHECK(laurent_integrate(xk(1, -1)) == LaurentLog::log_x());
    CHECK(laurent_integrate(xk(1, -2)) == xk(-1, -1));
    CHECK(laurent_integrate(xk(1, 1, 1)) == xk(Rational(1, 2), 2, 1) - xk(Rational(1, 4), 2));
    CHECK(laurent_evaluate(LaurentLog(1)) == 1);
    CHECK(laurent_evaluate(xk(1, 3, 2) + LaurentLog(7)) == 7);
    CHECK(laurent_evaluate(xk(1, -1)) == 0);
    CHECK(LaurentLog::log_x().derivative() == xk(1, -1));
    CHECK_THROWS_AS(laurent_evaluate(LaurentLog::zero_with_window(0)), TruncationError);
    CHECK_THROWS_AS(LaurentLog::zero_with_window(2).coeff(2, 0), TruncationError);
}

TEST_CASE("rational expansion") {
    CHECK(expand_ratfun(R("1/(x+1)"), 3) == LaurentLog(1) - xk(1, 1, 0).truncated(3) + xk(1, 2).truncated(3) +
                                                LaurentLog::zero_with_window(3));
    CHECK(expand_ratfun(R("1/(x+1)"), 3).valid_below() == 3);
    CHECK(expand_ratfun(R("1/x"), 3) == xk(1, -1));
    CHECK(expand_ratfun(R("x^2"), 3) == xk(1, 2));
    fuzz::Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        RatFun f = fuzz::ratfun(rng), g = fuzz::ratfun(rng);
        CHECK(expand_ratfun(f * g, 20).agrees_with(expand_ratfun(f, 20) * expand_ratfun(g, 20)));
        CHECK(expand_ratfun(f.derivative(), 20).agrees_with(expand_ratfun(f, 20).derivative()));
    }
}

TEST_CASE("Laurent-log properties") {
    fuzz::Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        LaurentLog f = random_laurent(rng, 8), g = random_laurent(rng, 8);
        CHECK(laurent_integrate(f).derivative().agrees_with(f));
        CHECK(laurent_evaluate(laurent_integrate(f)) == 0);
        LaurentLog F = laurent_integrate(f), G = laurent_integrate(g);
        LaurentLog rhs = laurent_integrate(f * G) + laurent_integrate(F * g) + LaurentLog(laurent_evaluate(F * G));
        CHECK((F * G).agrees_with(rhs));
        CHECK((f * g).derivative().agrees_with(f.derivative() * g + f * g.derivative()));
    }
}

TEST_CASE("Laurent-log printing") {
    CHECK((LaurentLog(1) - xk(1, 1) + xk(3, -2, 2)).to_string() == "3 * x^-2 * ln(x)^2 + 1 - x");
    CHECK(expand_ratfun(R("1/(1-x)"), 2).to_string() == "1 + x + O(x^2)");
    CHECK(LaurentLog().to_string() == "0");
}

TEST_CASE("rational base") {
    RationalBase b;
    CHECK(b.derive(R("1/x")) == R("-1/x^2"));
    CHECK(b.quasi_int(R("x")) == R("x^2/2"));
    CHECK(b.quasi_int(R("1/x^2")) == R("-1/x"));
    CHECK(b.quasi_int(R("1/x")).is_zero());
    CHECK(b.t_part(R("1/x^2")).empty());

    auto t = b.t_part(R("1/(x*(x+1))"));
    REQUIRE(t.size() == 2);
    CHECK(b.letter_value(t[0].first) == R("1/x"));
    CHECK(t[0].second == 1);
    CHECK(b.letter_value(t[1].first) == R("1/(x+1)"));
    CHECK(t[1].second == -1);
    CHECK(b.letter_key(t[0].first).p == R("x").num());

    auto t2 = b.t_part(R("(2*x+1)/(x^2+1)"));
    REQUIRE(t2.size() == 2);
    std::map<unsigned, Rational> by_k;
    for (const auto& [l, c] : t2) {
        CHECK(b.letter_key(l).p == R("x^2+1").num());
        by_k[b.letter_key(l).k] = c;
    }
    CHECK(by_k == std::map<unsigned, Rational>{{0, 1}, {1, 2}});

    CjSplit s = b.cj_split(R("3+1/x"));
    CHECK(s.c == 3);
    REQUIRE(s.j.size() == 1);
    CHECK(b.rj_value(s.j[0].first) == R("1/x"));
    CHECK(b.cj_split(R("5")).j.empty());
    CjSplit sx = b.cj_split(R("x"));
    CHECK(sx.c == 0);
    REQUIRE(sx.j.size() == 1);
    CHECK(b.rj_value(sx.j[0].first) == R("x"));

    CHECK_THROWS_AS(b.letters_of(R("1/x^2")), std::invalid_argument);
    CHECK_THROWS_AS(b.pin_letter(R("x^2-1").num(), 0), std::invalid_argument);
}

TEST_CASE("letters are registered in first-use order unless pinned") {
    RationalBase b;
    Letter first = b.pin_letter(R("x+5").num(), 0);
    Letter second = b.letters_of(R("1/x"))[0].first;
    CHECK(first == 0);
    CHECK(second == 1);
    CHECK(b.letters_of(R("3/(x+5)"))[0].first == 0);
    CHECK(b.letter_count() == 2);
}

TEST_CASE("Hermite contract on random rational functions") {
    RationalBase b;
    fuzz::Rng rng(21);
    for (int i = 0; i < 200; ++i) CHECK(props::hermite_contract(b, fuzz::ratfun(rng, i % 2 == 0)) == "");
}

TEST_CASE("trivial and Laurent bases") {
    TrivialBase t;
    CHECK(t.derive(Rational(3)) == 0);
    CHECK(t.quasi_int(Rational(3)) == 0);
    CHECK(t.t_part(Rational(3)) == LetterExpansion{{0, 3}});
    CHECK(t.cj_split(Rational(3)).c == 3);
    CHECK_THROWS(t.rj_value(0));

    LaurentBase l;
    LaurentLog f = xk(2, -3) + xk(5, -1) + LaurentLog(7) + xk(1, 2);
    CHECK(l.quasi_int(f) == xk(-1, -2) + xk(7, 1) + xk(Rational(1, 3), 3));
    CHECK(l.t_part(f) == LetterExpansion{{0, 5}});
    CHECK(l.derive(l.quasi_int(f)) + xk(5, -1) == f);
    CjSplit s = l.cj_split(f);
    CHECK(s.c == 7);
    CHECK(s.j.size() == 3);
    CHECK_THROWS_AS(l.quasi_int(LaurentLog::log_x()), std::invalid_argument);
}
