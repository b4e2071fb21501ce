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
// Property checks over random inputs. Each returns an empty string on
// success and a description of the counterexample otherwise.

#ifndef IDRING_TESTS_PROPERTIES_HPP
#define IDRING_TESTS_PROPERTIES_HPP

#include <string>

#include "fuzz_support.hpp"

namespace idring::props {

using Ctx = Idr<RationalBase>;
using Elem = IdrElem<RationalBase>;

inline std::string show(const Ctx& ctx, const Elem& a) { return ctx.to_string(a); }

inline std::string hermite_contract(const RationalBase& base, const RatFun& f) {
    RatFun q = base.quasi_int(f);
    RatFun t;
    for (const auto& [l, c] : base.t_part(f)) t += base.letter_value(l) * RatFun(c);
    if (q.derivative() + t != f) return "dQf + T(f) != f for " + f.to_string();
    if (!base.quasi_int(t).is_zero()) return "Q(T(f)) != 0 for " + f.to_string();
    if (base.quasi_int(base.derive(q)) != q) return "QdQ != Q for " + f.to_string();
    if (base.quasi_int(f.derivative()).derivative() != f.derivative()) return "dQd != d for " + f.to_string();
    if (base.cj_split(q).c != 0) return "constant part of Qf nonzero for " + f.to_string();
    return {};
}

inline std::string section(const Ctx& ctx, fuzz::Rng& rng) {
    Elem a = fuzz::element(rng, ctx, 4);
    Elem d = ctx.derive(ctx.integrate(a));
    if (!(d == a)) return "d int a != a for a = " + show(ctx, a) + " (got " + show(ctx, d) + ")";
    return {};
}

inline std::string leibniz(const Ctx& ctx, fuzz::Rng& rng) {
    Elem a = fuzz::element(rng, ctx, 2), b = fuzz::element(rng, ctx, 2);
    Elem lhs = ctx.derive(a * b);
    Elem rhs = ctx.derive(a) * b + a * ctx.derive(b);
    if (!(lhs == rhs)) return "Leibniz fails for a = " + show(ctx, a) + ", b = " + show(ctx, b);
    return {};
}

inline std::string commutative_associative(const Ctx& ctx, fuzz::Rng& rng) {
    Elem a = fuzz::element(rng, ctx, 2, 2), b = fuzz::element(rng, ctx, 2, 2), c = fuzz::element(rng, ctx, 2, 2);
    if (!(a * b == b * a)) return "ab != ba for a = " + show(ctx, a) + ", b = " + show(ctx, b);
    if (!((a * b) * c == a * (b * c)))
        return "(ab)c != a(bc) for a = " + show(ctx, a) + ", b = " + show(ctx, b) + ", c = " + show(ctx, c);
    return {};
}

// sigma(f) sigma(g) = sigma(f sh g) + sum E(sigma(f_{i+1..n}) sigma(g_{j+1..m})) sigma(f_{1..i} sh g_{1..j})
inline std::string shuffle_relation(const Ctx& ctx, fuzz::Rng& rng) {
    const std::size_t k = fuzz::letter_pool().size();
    Word f = fuzz::word(rng, 4, k), g = fuzz::word(rng, 4, k);
    auto sigma = [&](const Word& w) { return ctx.term(RatFun(1), {}, w); };
    auto sh = [&](const Word& u, const Word& v) {
        Elem r = ctx.zero();
        for (const auto& [w, m] : shuffle_multiset(u, v)) r += sigma(w) * Rational(m);
        return r;
    };
    Elem rhs = sh(f, g);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            Word fs(f.begin() + static_cast<long>(i), f.end()), gs(g.begin() + static_cast<long>(j), g.end());
            Word fp(f.begin(), f.begin() + static_cast<long>(i)), gp(g.begin(), g.begin() + static_cast<long>(j));
            rhs += ctx.evaluate(sigma(fs) * sigma(gs)) * sh(fp, gp);
        }
    if (!(sigma(f) * sigma(g) == rhs)) return "shuffle relation fails for " + word_name(f) + ", " + word_name(g);
    return {};
}

inline std::string evaluation_of_integral(const Ctx& ctx, fuzz::Rng& rng) {
    Elem a = fuzz::element(rng, ctx, 4);
    Elem e = ctx.evaluate(ctx.integrate(a));
    if (!e.is_zero()) return "E int a != 0 for a = " + show(ctx, a) + " (got " + show(ctx, e) + ")";
    return {};
}

// Agreement below the common window, which must leave some coefficients.
inline bool agree(const LaurentLog& a, const LaurentLog& b) {
    return a.agrees_with(b) && std::min(a.valid_below(), b.valid_below()) >= 3;
}

inline std::string eta_homomorphism(const Ctx& ctx, fuzz::Rng& rng, int truncation = 30) {
    Elem a = fuzz::element(rng, ctx, 3, 2), b = fuzz::element(rng, ctx, 3, 2);
    ModelMap<RationalBase> m(ctx, truncation);
    LaurentLog ea = m.eta(a), eb = m.eta(b);
    if (!agree(m.eta(a * b), ea * eb)) return "eta(ab) != eta(a) eta(b) for a = " + show(ctx, a) + ", b = " + show(ctx, b);
    if (!agree(m.eta(ctx.derive(a)), ea.derivative())) return "eta(da) != d eta(a) for a = " + show(ctx, a);
    if (!agree(m.eta(ctx.integrate(a)), laurent_integrate(ea))) return "eta(int a) != int eta(a) for a = " + show(ctx, a);
    return {};
}

inline std::string constant_relation_closure(const Ctx& ctx, fuzz::Rng& rng, int truncation = 30) {
    const std::size_t k = fuzz::letter_pool().size();
    Word v1, v2, v3;
    do {
        v1 = fuzz::word(rng, 4, k, 1);
        v2 = fuzz::word(rng, 4, k, 1);
        v3 = fuzz::word(rng, 4, k, 1);
    } while (v1.size() + v2.size() + v3.size() > 6);
    ModelMap<RationalBase> m(ctx, truncation);
    Rational v = model_value(relation_poly(v1, v2, v3), m);
    if (v != 0)
        return "relation (" + word_name(v1) + "," + word_name(v2) + "," + word_name(v3) + ") evaluates to " + v.get_str();
    return {};
}

}  // namespace idring::props

#endif  // IDRING_TESTS_PROPERTIES_HPP
