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

#include "properties.hpp"

using namespace idring;

namespace {

using Ctx = Idr<RationalBase>;
using Elem = IdrElem<RationalBase>;

RatFun R(const char* s) { return RatFun::parse(s); }

struct Setup {
    std::shared_ptr<RationalBase> base = std::make_shared<RationalBase>();
    std::shared_ptr<Ctx> free = Ctx::create(base, Mode::Free);
    std::shared_ptr<Ctx> q = Ctx::create(base, Mode::QRespecting);
    std::shared_ptr<Ctx> ida = Ctx::create(base, Mode::Multiplicative);
    Letter a, b;
    Setup() {
        a = base->letters_of(R("1/x"))[0].first;
        b = base->letters_of(R("1/(x+1)"))[0].first;
    }
    ConstMono c2(const Word& v, const Word& w) const {
        return ConstMono{{ConstSymbol{c2gen_canonical(v, w)}, 1u}};
    }
    ConstMono eps(const RatFun& f, const Word& w) const {
        CjSplit s = base->cj_split(f);
        REQUIRE(s.j.size() == 1);
        REQUIRE(s.j[0].second == 1);
        return ConstMono{{ConstSymbol{C1Gen{s.j[0].first, w}}, 1u}};
    }
};

}  // namespace

TEST_CASE("embedding") {
    Setup s;
    CHECK(s.free->embed(R("1")) == s.free->one());
    Elem e = s.q->embed(R("1/x"));
    REQUIRE(e.terms().size() == 1);
    CHECK(e.terms().begin()->first == Elem::Key{{}, {}});
    CHECK(s.q->embed(R("0")).is_zero());
}

TEST_CASE("products") {
    Setup s;
    const Ctx& c = *s.free;
    Elem ia = c.term(R("1"), {}, {s.a}), ib = c.term(R("1"), {}, {s.b});
    CHECK(ia * ia == c.term(R("2"), {}, {s.a, s.a}) + c.term(R("1"), s.c2({s.a}, {s.a}), {}));
    CHECK(ia * ib == c.term(R("1"), {}, {s.a, s.b}) + c.term(R("1"), {}, {s.b, s.a}) +
                         c.term(R("1"), s.c2({s.a}, {s.b}), {}));
    CHECK(c.one() * c.embed(R("x")) == c.embed(R("x")));
    CHECK(c.to_string(ia * ia) == "2*II(1/x,1/x) + c(a|a)");
    // Multiplicative evaluation keeps only the shuffle.
    Elem ja = s.ida->term(R("1"), {}, {s.a});
    CHECK(ja * ja == s.ida->term(R("2"), {}, {s.a, s.a}));
}

TEST_CASE("derivation") {
    Setup s;
    const Ctx& c = *s.free;
    CHECK(c.derive(c.embed(R("x^3/(x+1)"))) == c.embed(R("x^3/(x+1)").derivative()));
    CHECK(c.derive(c.term(R("1"), {}, {s.a})) == c.embed(R("1/x")));
    CHECK(c.derive(c.term(R("5"), s.c2({s.a}, {s.b}), {})).is_zero());
}

TEST_CASE("integration") {
    Setup s;
    CHECK(s.free->integrate(s.free->embed(R("1/x"))) == s.free->term(R("1"), {}, {s.a}));
    CHECK(s.q->integrate(s.q->embed(R("x"))) == s.q->embed(R("x^2/2")));
    Elem fx = s.free->integrate(s.free->embed(R("x")));
    CHECK(fx == s.free->embed(R("x^2/2")) - s.free->term(R("1/2"), s.eps(R("x^2"), {}), {}));
    CHECK(s.free->to_string(fx).find("eps(J:") != std::string::npos);
}

TEST_CASE("evaluation") {
    Setup s;
    CHECK(s.q->evaluate(s.q->embed(R("3+1/x"))) == s.q->embed(R("3")));
    Elem xa = s.free->term(R("x"), {}, {s.a});
    CHECK(s.free->evaluate(xa) == s.free->term(R("1"), s.eps(R("x"), {s.a}), {}));
    fuzz::Rng rng(17);
    fuzz::pin_letters(*s.base);
    for (const auto& ctx : {s.free, s.q, s.ida})
        for (int i = 0; i < 60; ++i) {
            Elem e = fuzz::element(rng, *ctx, 3);
            Elem ev = ctx->evaluate(e);
            CHECK(ev == ctx->evaluate_explicit(e));
            CHECK(ctx->is_constant(ev));
            CHECK(ctx->derive(ev).is_zero());
            CHECK(ctx->evaluate(ctx->integrate(e)).is_zero());
        }
}

TEST_CASE("nested integrals") {
    Setup s;
    const Ctx& c = *s.q;
    CHECK(c.nested_integral(R("x"), {R("1/x")}) == c.term(R("x"), {}, {s.a}));
    CHECK(c.nested_integral(R("1"), {}) == c.one());
    CHECK(c.nested_integral(R("1"), {R("1/x"), R("1/(x+1)")}) == c.term(R("1"), {}, {s.a, s.b}));
    CHECK(c.nested_integral(R("1"), {R("1/(x*(x+1))")}) == c.term(R("1"), {}, {s.a}) - c.term(R("1"), {}, {s.b}));
    CHECK_THROWS_AS(c.nested_integral(R("1"), {R("1/x^2")}), std::invalid_argument);
}

TEST_CASE("model map and closure") {
    Setup s;
    const Ctx& c = *s.free;
    CHECK(eta_model(c.term(R("1"), {}, {s.a}), 30) == LaurentLog::log_x());
    CHECK(eta_model(c.embed(R("1/(1-x)")), 10) == expand_ratfun(R("1/(1-x)"), 10));
    Elem eps_xa = c.term(R("1"), s.eps(R("x"), {s.a}), {});
    auto vals = closure_constants(eps_xa, 30);
    REQUIRE(vals.size() == 1);
    CHECK(vals.begin()->second == 0);
    Elem caa = c.term(R("1"), s.c2({s.a}, {s.a}), {});
    CHECK(closure_constants(caa, 30).begin()->second == 0);

    Elem hyper = c.evaluate(c.embed(R("1/x")) * c.integrate(c.embed(R("1/(x+1)"))));
    CHECK(closure_reduce(hyper, 30) == c.one());
    CHECK(closure_reduce(c.embed(R("x+1")), 30) == c.embed(R("x+1")));
    Elem ia = c.term(R("1"), {}, {s.a});
    CHECK(closure_reduce(ia * ia, 30) == c.term(R("2"), {}, {s.a, s.a}));
    // The evaluation of 1/(x+1) in the model is 1 although it lies in R_J.
    CHECK(closure_constants(c.integrate(c.embed(R("-1/(x+1)^2"))), 30).begin()->second == 1);
}

TEST_CASE("truncation errors surface") {
    Setup s;
    const Ctx& c = *s.free;
    // E(x^-4 int 1/(x+1)) needs the expansion of 1/(x+1) up to x^3.
    Elem deep = c.term(R("1"), s.eps(R("1/x^4"), {s.b}), {});
    CHECK(closure_reduce(deep, 4) == c.embed(R("-1/4")));
    CHECK_THROWS_AS(closure_reduce(deep, 3), TruncationError);
}

TEST_CASE("mode projection") {
    Setup s;
    Elem fx = s.free->integrate(s.free->embed(R("x")));
    CHECK(mode_project(fx, *s.q) == s.q->embed(R("x^2/2")));
    CHECK(mode_project(s.free->term(R("1"), s.c2({s.a}, {s.a}), {}), *s.ida).is_zero());
    CHECK(mode_project(s.free->embed(R("1/x")), *s.q) == s.q->embed(R("1/x")));
    CHECK_THROWS_AS(mode_project(s.q->embed(R("1")), *s.free), std::invalid_argument);
    auto other = Ctx::create(std::make_shared<RationalBase>(), Mode::QRespecting);
    CHECK_THROWS_AS(mode_project(s.free->embed(R("1")), *other), std::invalid_argument);

    fuzz::pin_letters(*s.base);
    fuzz::Rng rng(2);
    for (int i = 0; i < 100; ++i) {
        Elem a = fuzz::element(rng, *s.free, 3);
        CHECK(mode_project(s.free->integrate(a), *s.q) == s.q->integrate(mode_project(a, *s.q)));
        CHECK(mode_project(s.free->derive(a), *s.q) == s.q->derive(mode_project(a, *s.q)));
        Elem b = fuzz::element(rng, *s.free, 2);
        CHECK(mode_project(a * b, *s.q) == mode_project(a, *s.q) * mode_project(b, *s.q));
        CHECK(mode_project(a * b, *s.ida) == mode_project(a, *s.ida) * mode_project(b, *s.ida));
        CHECK(mode_project(s.free->integrate(a), *s.ida) == s.ida->integrate(mode_project(a, *s.ida)));
    }
}

TEST_CASE("multiplicative evaluation") {
    Setup s;
    const Ctx& c = *s.ida;
    Elem ex = c.evaluate(c.embed(R("x")));
    Elem einv = c.evaluate(c.embed(R("1/x")));
    CHECK(ex == c.term(R("1"), s.eps(R("x"), {}), {}));
    CHECK(ex * einv == c.one());
    fuzz::pin_letters(*s.base);
    fuzz::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        RatFun f = fuzz::ratfun(rng), g = fuzz::ratfun(rng);
        CHECK(c.evaluate(c.embed(f)) * c.evaluate(c.embed(g)) == c.evaluate(c.embed(f * g)));
    }
}

TEST_CASE("JSON and legend") {
    Setup s;
    const Ctx& c = *s.free;
    Elem ia = c.term(R("1"), {}, {s.a});
    Elem e = ia * ia;
    auto j = c.to_json(e);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["word"] == nlohmann::json::array({0, 0}));
    CHECK(j["terms"][0]["base"] == "2");
    CHECK(j["terms"][1]["c2"][0]["name"] == "c(a|a)");
    CHECK(j["alphabet"][0]["value"] == "1/x");
    CHECK(c.legend(e) == "a = 1/x");
}

TEST_CASE("short property runs in every mode") {
    Setup s;
    fuzz::pin_letters(*s.base);
    fuzz::Rng rng(77);
    for (const auto& ctx : {s.free, s.q, s.ida})
        for (int i = 0; i < 40; ++i) {
            CHECK(props::section(*ctx, rng) == "");
            CHECK(props::leibniz(*ctx, rng) == "");
            CHECK(props::commutative_associative(*ctx, rng) == "");
            CHECK(props::evaluation_of_integral(*ctx, rng) == "");
        }
    for (int i = 0; i < 40; ++i) {
        CHECK(props::shuffle_relation(*s.free, rng) == "");
        CHECK(props::shuffle_relation(*s.q, rng) == "");
        CHECK(props::eta_homomorphism(*s.free, rng) == "");
        CHECK(props::constant_relation_closure(*s.free, rng) == "");
    }
}

TEST_CASE("other base rings") {
    auto tb = std::make_shared<TrivialBase>();
    auto tc = Idr<TrivialBase>::create(tb, Mode::Free);
    auto one = tc->integrate(tc->one());
    CHECK(one == tc->term(1, {}, {0}));
    CHECK(tc->derive(one) == tc->one());
    CHECK(one * one == tc->term(2, {}, {0, 0}) + tc->term(1, ConstMono{{ConstSymbol{c2gen_canonical({0}, {0})}, 1u}}, {}));
    CHECK(tc->evaluate(one).is_zero());
    CHECK(closure_reduce(one * one, 10) == tc->term(2, {}, {0, 0}));
    CHECK(eta_model(tc->term(1, {}, {0, 0}), 10) == LaurentLog::monomial(Rational(1, 2), 2));

    auto lb = std::make_shared<LaurentBase>();
    for (Mode m : {Mode::Free, Mode::QRespecting, Mode::Multiplicative}) {
        auto lc = Idr<LaurentBase>::create(lb, m);
        LaurentLog f = LaurentLog::monomial(3, -2) + LaurentLog::monomial(2, -1) + LaurentLog::monomial(1, 1);
        auto a = lc->embed(f);
        auto ia = lc->integrate(a);
        CHECK(lc->derive(ia) == a);
        CHECK(lc->evaluate(ia).is_zero());
        auto p = ia * ia;
        CHECK(lc->derive(p) == a * ia + ia * a);
    }
}
