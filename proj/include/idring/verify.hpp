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
// Machine checks on the constant relations: the rank-1 Groebner basis G_d and
// the weight-bounded freeness check over a finite alphabet.

#ifndef IDRING_VERIFY_HPP
#define IDRING_VERIFY_HPP

#include <json.hpp>

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "idring/constants.hpp"
#include "idring/sparse_poly.hpp"
#include "idring/words.hpp"

namespace idring {

// c_{n,m} = c(a^n, a^m) as an ordered pair. Variables are ordered by n + m,
// then by n, so c_{n,m} > c_{m,n} when n > m.
using Rank1Var = std::pair<unsigned, unsigned>;
struct Rank1Less {
    bool operator()(const Rank1Var& a, const Rank1Var& b) const {
        unsigned wa = a.first + a.second, wb = b.first + b.second;
        if (wa != wb) return wa < wb;
        return a.first < b.first;
    }
};
using Rank1Poly = SparsePoly<Rank1Var, Rank1Less>;

std::string rank1_string(const Rank1Poly& p);
Rank1Poly rank1_var(unsigned n, unsigned m);

// The relation for (n, m, l), n, m, l >= 1.
Rank1Poly rank1_relation(unsigned n, unsigned m, unsigned l);
// One relation per (n, m, l) with n + m + l <= d, in lexicographic order.
std::vector<Rank1Poly> rank1_relations(unsigned d);
// The solved relation for 2 <= m <= n.
Rank1Poly rank1_solved(unsigned m, unsigned n);
// Solved relations for 2 <= m <= n <= d - m and symmetries c_{n,m} - c_{m,n}
// for 1 <= m < n <= d - m.
std::vector<Rank1Poly> rank1_Gd(unsigned d);

enum class Exec { Serial, Parallel };

struct VerifyReport {
    std::string kind;
    std::map<std::string, long> parameters;
    std::size_t relations_generated = 0;
    std::size_t reduced_to_zero = 0;
    std::size_t basis_size = 0;
    std::vector<std::string> failures;
    std::vector<std::string> irreducible_generators;
    // Only for freeness: whether the irreducible generators are exactly S.
    bool generators_match = true;
    std::vector<std::string> generator_mismatches;
    double elapsed_seconds = 0;

    bool passed() const { return failures.empty() && generators_match; }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

VerifyReport check_ideal_equality(unsigned d, Exec exec = Exec::Parallel);

// Triples (V1, V2, V3) of nonempty words with V1 <_dlex V3 and total length
// <= wmax, ordered by total length, then V1, V2, V3 in dlex.
std::vector<std::array<Word, 3>> relation_triples(std::size_t alphabet_size, std::size_t wmax);
// Generators c(V, W) with V <=_dlex W and |V| + |W| <= wmax, in increasing order.
std::vector<GenKey> all_generators(std::size_t alphabet_size, std::size_t wmax);

VerifyReport freeness_truncated(std::size_t alphabet_size, std::size_t wmax, Exec exec = Exec::Parallel);

}  // namespace idring

#endif  // IDRING_VERIFY_HPP
