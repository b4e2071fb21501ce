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
// Exact rationals. GMP keeps every mpq_class canonical after arithmetic.

#ifndef IDRING_RATIONAL_HPP
#define IDRING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace idring {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace idring

#endif  // IDRING_RATIONAL_HPP
