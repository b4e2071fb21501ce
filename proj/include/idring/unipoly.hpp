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
// Sparse univariate polynomials over Q, plus factorization into monic
// irreducibles.

#ifndef IDRING_UNIPOLY_HPP
#define IDRING_UNIPOLY_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "idring/rational.hpp"

namespace idring {

class UniPoly {
public:
    using TermMap = std::map<unsigned, Rational>;

    UniPoly() = default;
    UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
    UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT

    static UniPoly x() { return monomial(1, 1); }
    static UniPoly monomial(const Rational& c, unsigned deg);
    // coeffs[i] is the coefficient of x^i.
    static UniPoly from_dense(const std::vector<Rational>& coeffs);

    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
    Rational coeff(unsigned deg) const;
    Rational lc() const;
    const TermMap& terms() const { return terms_; }
    std::vector<Rational> dense() const;

    UniPoly monic() const;
    UniPoly derivative() const;
    Rational eval(const Rational& at) const;
    bool is_constant() const { return degree() <= 0; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }
    // Total order: by degree, then coefficients from the top down.
    friend std::strong_ordering operator<=>(const UniPoly& a, const UniPoly& b);

    std::string to_string() const;

private:
    TermMap terms_;
};

// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient only
UniPoly operator%(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& p, unsigned e);

// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

struct ExtGcd {
    UniPoly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd poly_ext_gcd(const UniPoly& a, const UniPoly& b);

// Inverse of a modulo m; throws if not coprime.
UniPoly poly_inverse_mod(const UniPoly& a, const UniPoly& m);

// Yun decomposition of a monic polynomial: factors a_i with p = prod a_i^i.
std::vector<std::pair<UniPoly, unsigned>> squarefree_factor(const UniPoly& p);

// Monic irreducible factors with multiplicities, sorted by the UniPoly order.
// The product of the factors times p.lc() reproduces p.
std::vector<std::pair<UniPoly, unsigned>> irreducible_factor(const UniPoly& p);

}  // namespace idring

#endif  // IDRING_UNIPOLY_HPP
