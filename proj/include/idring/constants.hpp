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
// Constant symbols eps(f0 (x) W) and c(V, W), polynomials in them, the
// relations among the c(V, W) and the Lyndon-based normal form.

#ifndef IDRING_CONSTANTS_HPP
#define IDRING_CONSTANTS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <variant>

#include "idring/sparse_poly.hpp"
#include "idring/tensor.hpp"
#include "idring/words.hpp"

namespace idring {

// eps(f0 (x) word) with f0 an R_J basis element of the base ring.
struct C1Gen {
    std::uint32_t rj = 0;
    Word word;
    friend bool operator==(const C1Gen&, const C1Gen&) = default;
};

// c(V, W) = eps(V (.) W), stored with V <=_dlex W.
struct C2Gen {
    GenKey key;
    friend bool operator==(const C2Gen&, const C2Gen&) = default;
};

using ConstSymbol = std::variant<C1Gen, C2Gen>;

// C1 symbols first, ordered by (rj, word); C2 symbols by the generator order.
struct SymbolLess {
    bool operator()(const ConstSymbol& a, const ConstSymbol& b) const;
};

using ConstPoly = SparsePoly<ConstSymbol, SymbolLess>;
using ConstMono = ConstPoly::Monomial;

std::string symbol_name(const ConstSymbol& s);
std::string const_poly_string(const ConstPoly& p);
inline ConstPoly const_var(const ConstSymbol& s) { return ConstPoly::variable(s); }

C2Gen c2gen_canonical(const Word& u, const Word& v);

// Bilinear expansion of eps(s (.) t); both supported on nonempty words.
ConstPoly epsilon_expand(const TensorElem& s, const TensorElem& t);

// The relation r(V1, V2, V3) without the ordering precondition.
ConstPoly relation_poly(const Word& v1, const Word& v2, const Word& v3);
// Same, requiring V1 <_dlex V3 (throws std::invalid_argument otherwise).
ConstPoly relation_r(const Word& v1, const Word& v2, const Word& v3);

// The largest C2 generator occurring in p, if any.
std::optional<C2Gen> leading_c2gen(const ConstPoly& p);

// Whether g occurs in p only in the monomial g^1; returns its coefficient.
std::optional<Rational> linear_coefficient(const ConstPoly& p, const C2Gen& g);

struct CanonicalRelation {
    Word v1, v2, v3;
};
// The relation used to eliminate g; nullopt when g is in S.
std::optional<CanonicalRelation> canonical_relation(const C2Gen& g);

// One elimination step: g itself when in S, otherwise g solved from its
// canonical relation in terms of smaller generators.
ConstPoly reduce_c2gen(const C2Gen& g);

// Memoized full normal forms. Safe for concurrent use.
class C2Normalizer {
public:
    const ConstPoly& normal_form(const C2Gen& g);
    ConstPoly normalize(const ConstPoly& p);
    ConstPoly normalize_monomial(const ConstMono& m);
    std::size_t memo_size() const;

private:
    mutable std::shared_mutex mu_;
    std::map<GenKey, ConstPoly, GenLess> memo_;
};

C2Normalizer& default_normalizer();
ConstPoly c2_normalize(const ConstPoly& p);

}  // namespace idring

#endif  // IDRING_CONSTANTS_HPP
