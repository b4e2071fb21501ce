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
// Truncated Laurent series in x with polynomial dependence on ln(x).
// Coefficients of x^k with k >= valid_below are unknown.

#ifndef IDRING_LAURENT_HPP
#define IDRING_LAURENT_HPP

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "idring/ratfun.hpp"

namespace idring {

// Raised whenever a requested coefficient lies outside the validity window.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LaurentLog {
public:
    // (exponent of x, power of ln x)
    using Key = std::pair<int, unsigned>;
    static constexpr int kExact = INT_MAX;

    LaurentLog() = default;
    LaurentLog(const Rational& c);  // NOLINT
    static LaurentLog monomial(const Rational& c, int k, unsigned n = 0, int valid_below = kExact);
    static LaurentLog log_x() { return monomial(1, 0, 1); }
    static LaurentLog zero_with_window(int valid_below);

    const std::map<Key, Rational>& terms() const { return terms_; }
    int valid_below() const { return valid_below_; }
    bool is_exact() const { return valid_below_ == kExact; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int k, unsigned n) const;
    // Smallest stored exponent, or valid_below when no term is stored.
    int valuation() const;

    LaurentLog truncated(int valid_below) const;
    LaurentLog derivative() const;

    LaurentLog operator-() const;
    friend LaurentLog operator+(const LaurentLog& a, const LaurentLog& b);
    friend LaurentLog operator-(const LaurentLog& a, const LaurentLog& b);
    friend LaurentLog operator*(const LaurentLog& a, const LaurentLog& b);
    LaurentLog& operator+=(const LaurentLog& o) { return *this = *this + o; }
    LaurentLog& operator*=(const LaurentLog& o) { return *this = *this * o; }
    LaurentLog& operator*=(const Rational& c);

    // Equality of known coefficients below the common window.
    bool agrees_with(const LaurentLog& o) const;
    friend bool operator==(const LaurentLog&, const LaurentLog&) = default;

    std::string to_string() const;

private:
    void add(const Key& k, const Rational& c);
    void clip();

    std::map<Key, Rational> terms_;
    int valid_below_ = kExact;
};

// The integration g - E g with g the termwise antiderivative.
LaurentLog laurent_integrate(const LaurentLog& f);
// Coefficient of x^0 ln(x)^0. Throws TruncationError if it is not known.
Rational laurent_evaluate(const LaurentLog& f);
// Expansion at x = 0 with coefficients known below x^n. Exact when the
// denominator is a power of x.
LaurentLog expand_ratfun(const RatFun& f, int n);

}  // namespace idring

#endif  // IDRING_LAURENT_HPP
