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

#ifndef IDRING_RATFUN_HPP
#define IDRING_RATFUN_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "idring/unipoly.hpp"

namespace idring {

// num/den with den monic and gcd(num, den) = 1.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFun(long c) : RatFun(Rational(c)) {}          // NOLINT
    RatFun(const UniPoly& p) : num_(p), den_(1) {}   // NOLINT
    RatFun(const UniPoly& num, const UniPoly& den);

    static RatFun x() { return RatFun(UniPoly::x()); }
    // Parses infix text in x: integers, + - * / ^ and parentheses.
    static RatFun parse(std::string_view text);

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
    Rational constant_value() const { return num_.coeff(0); }

    RatFun derivative() const;
    RatFun inverse() const;

    RatFun operator-() const { return RatFun(-num_, den_, Canonical{}); }
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) = default;
    friend std::strong_ordering operator<=>(const RatFun& a, const RatFun& b) {
        if (auto c = a.den_ <=> b.den_; c != 0) return c;
        return a.num_ <=> b.num_;
    }

    std::string to_string() const;

private:
    struct Canonical {};
    RatFun(UniPoly num, UniPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    UniPoly num_;
    UniPoly den_;
};

// One summand a / p^j of a partial fraction decomposition.
struct PfTerm {
    UniPoly p;  // monic irreducible
    unsigned j = 1;
    UniPoly a;  // deg a < deg p
};

struct PartialFractionForm {
    UniPoly poly_part;
    std::vector<PfTerm> terms;  // sorted by (p, j)

    RatFun reassemble() const;
};

PartialFractionForm partial_fractions(const RatFun& f);

}  // namespace idring

#endif  // IDRING_RATFUN_HPP
