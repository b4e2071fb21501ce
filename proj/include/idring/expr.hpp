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
// Surface syntax for IDR(Q(x)) elements:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := factor ('^' ['-'] integer)?
//   factor := integer | 'x' | '(' expr ')' | 'D(' expr ')' | 'int(' expr ')'
//           | 'E(' expr ')' | 'II(' expr (',' expr)* ')'
//           | 'c(' word '|' word ')' | 'eps(J:' integer ';W:' word ')'
//
// Division and negative powers need a divisor in the base ring.

#ifndef IDRING_EXPR_HPP
#define IDRING_EXPR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idring/idr.hpp"

namespace idring {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct Expr {
    enum class Kind { Number, X, Add, Sub, Mul, Div, Pow, Neg, Deriv, Int, Eval, Nested, C2, Eps };
    Kind kind = Kind::Number;
    Rational value;   // Number
    long exponent = 0;  // Pow
    std::vector<Expr> args;
    Word v, w;      // C2 (v, w); Eps (w)
    RjId rj = 0;    // Eps
    std::size_t offset = 0;
};

Expr parse_expr(std::string_view text);
IdrElem<RationalBase> eval_expr(const Expr& e, const Idr<RationalBase>& ctx);
inline IdrElem<RationalBase> eval_expr(std::string_view text, const Idr<RationalBase>& ctx) {
    return eval_expr(parse_expr(text), ctx);
}

}  // namespace idring

#endif  // IDRING_EXPR_HPP
