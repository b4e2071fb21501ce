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

#include "fuzz_support.hpp"
#include "idring/ratfun.hpp"
#include "idring/unipoly.hpp"

using namespace idring;

namespace {

UniPoly P(const char* s) { return RatFun::parse(s).num(); }

UniPoly product(const std::vector<std::pair<UniPoly, unsigned>>& fs) {
    UniPoly r(1);
    for (const auto& [p, e] : fs) r = r * pow(p, e);
    return r;
}

// Searches small rational roots only; enough for degree <= 3 factors of the
// small random products below.
bool has_rational_root(const UniPoly& p) {
    for (long num = -12; num <= 12; ++num)
        for (long den = 1; den <= 12; ++den)
            if (p.eval(Rational(num, den)) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("rational parsing and binomials") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(6) == 720);
}

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(P("x^2-1"), P("x-1")) == P("x-1"));
    CHECK(poly_gcd(P("3*x^2+6"), UniPoly()) == P("x^2+2"));
    CHECK(poly_gcd(UniPoly(1), P("x^3+x")) == UniPoly(1));
}

TEST_CASE("factorization examples") {
    using F = std::vector<std::pair<UniPoly, unsigned>>;
    CHECK(irreducible_factor(P("x^2-1")) == F{{P("x-1"), 1}, {P("x+1"), 1}});
    CHECK(irreducible_factor(P("x^2+1")) == F{{P("x^2+1"), 1}});
    CHECK(irreducible_factor(P("x^3")) == F{{P("x"), 3}});
    CHECK(irreducible_factor(P("x^4+1")).size() == 1);
    CHECK(irreducible_factor(P("x^4-10*x^2+1")).size() == 1);
    CHECK(irreducible_factor(P("(x^2-2)*(x^2-3)")).size() == 2);
    CHECK(irreducible_factor(P("x^6-1")).size() == 4);
    CHECK(irreducible_factor(P("x^8-1")).size() == 4);
}

TEST_CASE("random division, gcd and factorization") {
    fuzz::Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        UniPoly a = fuzz::poly(rng, 6, 10), b = fuzz::poly(rng, 4, 10);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        UniPoly g = poly_gcd(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
        ExtGcd e = poly_ext_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
    }
    for (int it = 0; it < 150; ++it) {
        UniPoly a = fuzz::poly(rng, 3, 6), b = fuzz::poly(rng, 3, 6);
        UniPoly p = a * b;
        if (p.degree() < 1) continue;
        auto fs = irreducible_factor(p);
        CHECK(product(fs) * p.lc() == p);
        for (const auto& [f, e] : fs) {
            CHECK(f.lc() == 1);
            if (f.degree() >= 2 && f.degree() <= 3) CHECK_FALSE(has_rational_root(f));
        }
    }
}

TEST_CASE("partial fractions") {
    auto pf = partial_fractions(RatFun::parse("1/(x*(x+1))"));
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.poly_part.is_zero());
    CHECK(pf.terms[0].p == P("x"));
    CHECK(pf.terms[0].a == UniPoly(1));
    CHECK(pf.terms[1].p == P("x+1"));
    CHECK(pf.terms[1].a == UniPoly(-1));

    pf = partial_fractions(RatFun::parse("x"));
    CHECK(pf.poly_part == P("x"));
    CHECK(pf.terms.empty());

    pf = partial_fractions(RatFun::parse("(x+2)/x^2"));
    REQUIRE(pf.terms.size() == 2);
    CHECK(pf.terms[0].j == 1);
    CHECK(pf.terms[0].a == UniPoly(1));
    CHECK(pf.terms[1].j == 2);
    CHECK(pf.terms[1].a == UniPoly(2));

    fuzz::Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        RatFun f = fuzz::ratfun(rng, it % 2 == 0);
        auto form = partial_fractions(f);
        CHECK(form.reassemble() == f);
        for (const auto& t : form.terms) CHECK(t.a.degree() < t.p.degree());
    }
}

TEST_CASE("rational function arithmetic and printing") {
    fuzz::Rng rng(3);
    for (int it = 0; it < 200; ++it) {
        RatFun a = fuzz::ratfun(rng), b = fuzz::ratfun(rng), c = fuzz::ratfun(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK(RatFun::parse(a.to_string()) == a);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
    CHECK(RatFun::parse("1/x").derivative() == RatFun::parse("-1/x^2"));
    CHECK(RatFun::parse("(x^2-1)/(x-1)") == RatFun::parse("x+1"));
}
