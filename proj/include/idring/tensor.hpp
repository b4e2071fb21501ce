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
// The shuffle algebra on words and its Lyndon (Radford) coordinates.

#ifndef IDRING_TENSOR_HPP
#define IDRING_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "idring/words.hpp"

namespace idring {

class TensorElem {
public:
    using TermMap = std::map<Word, Rational, DlexLess>;

    TensorElem() = default;
    static TensorElem word(const Word& w, const Rational& c = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Word& w) const;
    void add(const Word& w, const Rational& c);

    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    TensorElem& operator*=(const Rational& c);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
    friend TensorElem operator*(TensorElem a, const Rational& c) { return a *= c; }
    friend TensorElem operator*(const Rational& c, TensorElem a) { return a *= c; }
    friend bool operator==(const TensorElem&, const TensorElem&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

TensorElem shuffle_mul(const TensorElem& s, const TensorElem& t);

// A multiset of Lyndon words, stored sorted.
using LyndonMultiset = std::vector<Word>;
using LyndonPoly = std::map<LyndonMultiset, Rational>;

LyndonPoly lyndon_decompose(const TensorElem& t);
TensorElem lyndon_recompose(const LyndonPoly& p);

}  // namespace idring

#endif  // IDRING_TENSOR_HPP
