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

#include "idring/expr.hpp"

#include <cctype>

namespace idring {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr run() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool eat_word(std::string_view kw) {
        skip();
        if (s_.substr(pos_, kw.size()) != kw) return false;
        pos_ += kw.size();
        return true;
    }
    static Expr node(Expr::Kind k, std::size_t at) {
        Expr e;
        e.kind = k;
        e.offset = at;
        return e;
    }
    // Moves the operands; an initializer list would copy whole subtrees.
    static Expr node(Expr::Kind k, std::size_t at, Expr a) {
        Expr e = node(k, at);
        e.args.push_back(std::move(a));
        return e;
    }
    static Expr node(Expr::Kind k, std::size_t at, Expr a, Expr b) {
        Expr e = node(k, at, std::move(a));
        e.args.push_back(std::move(b));
        return e;
    }

    Expr expr() {
        Expr v = term();
        for (;;) {
            std::size_t at = pos_;
            if (eat('+')) v = node(Expr::Kind::Add, at, std::move(v), term());
            else if (eat('-')) v = node(Expr::Kind::Sub, at, std::move(v), term());
            else return v;
        }
    }
    Expr term() {
        Expr v = unary();
        for (;;) {
            std::size_t at = pos_;
            if (eat('*')) v = node(Expr::Kind::Mul, at, std::move(v), unary());
            else if (eat('/')) v = node(Expr::Kind::Div, at, std::move(v), unary());
            else return v;
        }
    }
    Expr unary() {
        std::size_t at = pos_;
        if (eat('-')) return node(Expr::Kind::Neg, at, unary());
        if (eat('+')) return unary();
        return power();
    }
    Expr power() {
        Expr b = factor();
        std::size_t at = pos_;
        if (!eat('^')) return b;
        skip();
        bool neg = eat('-');
        skip();
        Integer n = digits();
        if (!n.fits_slong_p()) fail("exponent too large");
        Expr e = node(Expr::Kind::Pow, at, std::move(b));
        e.exponent = neg ? -n.get_si() : n.get_si();
        return e;
    }
    Integer digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    Word word_until(char stop) {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z') ++pos_;
        Word w = parse_word(s_.substr(start, pos_ - start));
        expect(stop);
        return w;
    }
    Expr call(Expr::Kind k, std::size_t at) {
        Expr e = node(k, at, expr());
        expect(')');
        return e;
    }
    Expr factor() {
        skip();
        std::size_t at = pos_;
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e = node(Expr::Kind::Number, at);
            e.value = Rational(digits());
            return e;
        }
        if (eat_word("D(")) return call(Expr::Kind::Deriv, at);
        if (eat_word("int(")) return call(Expr::Kind::Int, at);
        if (eat_word("E(")) return call(Expr::Kind::Eval, at);
        if (eat_word("II(")) {
            Expr e = node(Expr::Kind::Nested, at);
            do {
                e.args.push_back(expr());
            } while (eat(','));
            expect(')');
            return e;
        }
        if (eat_word("c(")) {
            Expr e = node(Expr::Kind::C2, at);
            e.v = word_until('|');
            e.w = word_until(')');
            return e;
        }
        if (eat_word("eps(J:")) {
            Expr e = node(Expr::Kind::Eps, at);
            Integer id = digits();
            if (!id.fits_uint_p()) fail("basis id too large");
            e.rj = static_cast<RjId>(id.get_ui());
            if (!eat_word(";W:")) fail("expected ';W:'");
            e.w = word_until(')');
            return e;
        }
        if (c == 'x') {
            ++pos_;
            return node(Expr::Kind::X, at);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

using Elem = IdrElem<RationalBase>;

// The base ring element of a word-free, constant-free value.
std::optional<RatFun> as_base(const Elem& a) {
    if (a.is_zero()) return RatFun();
    if (a.terms().size() != 1) return std::nullopt;
    const auto& [k, f] = *a.terms().begin();
    if (!k.first.empty() || !k.second.empty()) return std::nullopt;
    return f;
}

RatFun need_base(const Elem& a, const Expr& e, const char* what) {
    auto f = as_base(a);
    if (!f) throw std::invalid_argument(std::string(what) + " at offset " + std::to_string(e.offset) +
                                        " needs a rational function");
    return *f;
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

IdrElem<RationalBase> eval_expr(const Expr& e, const Idr<RationalBase>& ctx) {
    using K = Expr::Kind;
    auto arg = [&](std::size_t i) { return eval_expr(e.args[i], ctx); };
    switch (e.kind) {
        case K::Number: return ctx.embed(RatFun(e.value));
        case K::X: return ctx.embed(RatFun::x());
        case K::Add: return arg(0) + arg(1);
        case K::Sub: return arg(0) - arg(1);
        case K::Neg: return -arg(0);
        case K::Mul: return ctx.mul(arg(0), arg(1));
        case K::Div: {
            RatFun d = need_base(arg(1), e, "division");
            if (d.is_zero()) throw std::invalid_argument("division by zero at offset " + std::to_string(e.offset));
            return ctx.mul(arg(0), ctx.embed(d.inverse()));
        }
        case K::Pow: {
            Elem b = arg(0);
            if (e.exponent < 0) {
                RatFun f = need_base(b, e, "negative power");
                if (f.is_zero()) throw std::invalid_argument("division by zero at offset " + std::to_string(e.offset));
                b = ctx.embed(f.inverse());
            }
            Elem r = ctx.one();
            for (long i = 0; i < (e.exponent < 0 ? -e.exponent : e.exponent); ++i) r = ctx.mul(r, b);
            return r;
        }
        case K::Deriv: return ctx.derive(arg(0));
        case K::Int: return ctx.integrate(arg(0));
        case K::Eval: return ctx.evaluate(arg(0));
        case K::Nested: {
            std::vector<RatFun> fs;
            for (std::size_t i = 0; i < e.args.size(); ++i) fs.push_back(need_base(arg(i), e.args[i], "II argument"));
            return ctx.nested_integral(RatFun(1), fs);
        }
        case K::C2: {
            if (e.v.empty() || e.w.empty())
                throw std::invalid_argument("c(V|W) needs nonempty words at offset " + std::to_string(e.offset));
            for (Letter l : e.v) ctx.base().letter_value(l);
            for (Letter l : e.w) ctx.base().letter_value(l);
            return ctx.constant(ctx.normalizer().normalize(const_var(c2gen_canonical(e.v, e.w))));
        }
        case K::Eps: {
            ctx.base().rj_value(e.rj);
            for (Letter l : e.w) ctx.base().letter_value(l);
            return ctx.constant(const_var(C1Gen{e.rj, e.w}));
        }
    }
    throw std::logic_error("unhandled expression kind");
}

}  // namespace idring
