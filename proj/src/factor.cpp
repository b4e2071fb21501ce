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
// Factorization over Q: squarefree decomposition, factorization modulo a small
// prime (distinct degree + Cantor-Zassenhaus), linear Hensel lifting and
// Zassenhaus recombination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <stdexcept>

#include "idring/unipoly.hpp"

namespace idring {
namespace {

using i64 = std::int64_t;
using ModPoly = std::vector<i64>;  // ascending coefficients in [0, p), trimmed
using ZPoly = std::vector<Integer>;  // ascending, trimmed

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

i64 mulmod(i64 a, i64 b, i64 p) { return (a * b) % p; }

i64 powmod(i64 a, i64 e, i64 p) {
    i64 r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, i64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
    trim(r);
    return r;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, i64 p) {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, i64 p) {
    if (b.empty()) throw std::domain_error("modular division by zero");
    ModPoly r = a;
    if (deg(r) < deg(b)) return {{}, r};
    ModPoly q(r.size() - b.size() + 1, 0);
    i64 inv = invmod(b.back(), p);
    while (!r.empty() && deg(r) >= deg(b)) {
        std::size_t shift = r.size() - b.size();
        i64 c = mulmod(r.back(), inv, p);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = (r[shift + j] - mulmod(c, b[j], p) + p) % p;
        trim(r);
    }
    trim(q);
    return {q, r};
}

ModPoly mp_monic(const ModPoly& a, i64 p) {
    if (a.empty()) return a;
    i64 inv = invmod(a.back(), p);
    ModPoly r = a;
    for (auto& c : r) c = mulmod(c, inv, p);
    return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, i64 p) {
    while (!b.empty()) {
        ModPoly r = mp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mp_ext_gcd(const ModPoly& a, const ModPoly& b, i64 p) {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        auto [q, r] = mp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r0) != 0) throw std::logic_error("modular factors not coprime");
    i64 inv = invmod(r0[0], p);
    for (auto& c : s0) c = mulmod(c, inv, p);
    for (auto& c : t0) c = mulmod(c, inv, p);
    return {s0, t0};
}

ModPoly mp_powmod(ModPoly base, const Integer& e, const ModPoly& mod, i64 p) {
    ModPoly r{1};
    base = mp_divmod(base, mod, p).second;
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mp_divmod(mp_mul(r, r, p), mod, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_divmod(mp_mul(r, base, p), mod, p).second;
    }
    return r;
}

ModPoly mp_derivative(const ModPoly& a, i64 p) {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], static_cast<i64>(i) % p, p));
    trim(r);
    return r;
}

ModPoly reduce(const ZPoly& f, i64 p) {
    ModPoly r;
    Integer pp = p;
    for (const auto& c : f) {
        Integer m = c % pp;
        if (m < 0) m += pp;
        r.push_back(m.get_si());
    }
    trim(r);
    return r;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> ddf(ModPoly f, i64 p) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly h{0, 1};
    const ModPoly x{0, 1};
    Integer pz = p;
    for (int i = 1; 2 * i <= deg(f); ++i) {
        h = mp_powmod(h, pz, f, p);
        ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, i);
            f = mp_divmod(f, g, p).first;
            h = mp_divmod(h, f, p).second;
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

void edf(const ModPoly& g, int d, i64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    std::uniform_int_distribution<i64> dist(0, p - 1);
    for (;;) {
        ModPoly a(static_cast<std::size_t>(deg(g)), 0);
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly c = mp_gcd(a, g, p);
        if (deg(c) <= 0 || deg(c) >= deg(g)) {
            ModPoly b = mp_sub(mp_powmod(a, e, g, p), ModPoly{1}, p);
            c = mp_gcd(b, g, p);
        }
        if (deg(c) > 0 && deg(c) < deg(g)) {
            edf(c, d, p, rng, out);
            edf(mp_divmod(g, c, p).first, d, p, rng, out);
            return;
        }
    }
}

std::vector<i64> small_primes() {
    std::vector<i64> ps;
    const int limit = 20000;
    std::vector<bool> sieve(limit, true);
    for (int i = 2; i < limit; ++i) {
        if (!sieve[i]) continue;
        if (i > 2) ps.push_back(i);
        for (int j = 2 * i; j < limit; j += i) sieve[j] = false;
    }
    return ps;
}

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive(ZPoly f) {
    trim(f);
    if (f.empty()) return f;
    Integer g = content(f);
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

void mod_inplace(ZPoly& f, const Integer& m) {
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
    }
    trim(f);
}

void symmetric_inplace(ZPoly& f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    trim(f);
}

ZPoly from_mod(const ModPoly& a) {
    ZPoly r;
    for (auto c : a) r.emplace_back(static_cast<long>(c));
    return r;
}

// Lifts g*h = F (mod p) to G*H = F (mod p^k); F monic mod p^k, g and h monic.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& F, const ModPoly& g, const ModPoly& h, i64 p, unsigned k) {
    auto [s, t] = mp_ext_gcd(g, h, p);
    ZPoly G = from_mod(g), H = from_mod(h);
    Integer m = p;
    for (unsigned j = 1; j < k; ++j) {
        Integer next = m * p;
        ZPoly e = F;
        ZPoly gh = zmul(G, H);
        e.resize(std::max(e.size(), gh.size()), 0);
        for (std::size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
        mod_inplace(e, next);
        ZPoly q0 = e;
        for (auto& c : q0) {
            if (c % m != 0) throw std::logic_error("Hensel step lost divisibility");
            c /= m;
        }
        ModPoly ebar = reduce(q0, p);
        auto [q, r] = mp_divmod(mp_mul(s, ebar, p), h, p);
        ModPoly dg = mp_add(mp_mul(t, ebar, p), mp_mul(q, g, p), p);
        ZPoly dG = from_mod(dg), dH = from_mod(r);
        G.resize(std::max(G.size(), dG.size()), 0);
        H.resize(std::max(H.size(), dH.size()), 0);
        for (std::size_t i = 0; i < dG.size(); ++i) G[i] += m * dG[i];
        for (std::size_t i = 0; i < dH.size(); ++i) H[i] += m * dH[i];
        trim(G);
        trim(H);
        m = next;
    }
    return {G, H};
}

UniPoly to_unipoly(const ZPoly& f) {
    std::vector<Rational> c;
    for (const auto& z : f) c.emplace_back(z);
    return UniPoly::from_dense(c);
}

ZPoly to_zpoly(const UniPoly& f) {
    Integer l = 1;
    for (const auto& [d, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z(static_cast<std::size_t>(f.degree() + 1), 0);
    for (const auto& [d, c] : f.terms()) z[d] = c.get_num() * (l / c.get_den());
    return primitive(z);
}

// Exact division over Z, or empty optional-like result via flag.
bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly& quot) {
    auto [q, r] = divmod(to_unipoly(f), to_unipoly(g));
    if (!r.is_zero()) return false;
    for (const auto& [d, c] : q.terms())
        if (c.get_den() != 1) return false;
    quot = to_zpoly(q);
    // to_zpoly normalizes content and sign; restore the true quotient.
    Integer scale = q.lc().get_num() / quot.back();
    for (auto& c : quot) c *= scale;
    return true;
}

// f primitive, squarefree, deg >= 1, positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 1) return {f};
    static const std::vector<i64> primes = small_primes();
    const Integer& lcf = f.back();

    i64 best_p = 0;
    std::size_t best_count = 0;
    int good = 0;
    for (i64 p : primes) {
        if (lcf % Integer(static_cast<long>(p)) == 0) continue;
        ModPoly fb = reduce(f, p);
        if (deg(fb) != n) continue;
        ModPoly dfb = mp_derivative(fb, p);
        if (dfb.empty() || deg(mp_gcd(fb, dfb, p)) != 0) continue;
        std::size_t count = 0;
        for (auto& [g, d] : ddf(mp_monic(fb, p), p)) count += static_cast<std::size_t>(deg(g) / d);
        if (best_p == 0 || count < best_count) {
            best_p = p;
            best_count = count;
        }
        if (count == 1) break;
        if (++good >= 5) break;
    }
    if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
    if (best_count == 1) return {f};
    const i64 p = best_p;

    std::mt19937_64 rng(0x1d5eedULL + static_cast<unsigned long long>(p));
    std::vector<ModPoly> facs;
    for (auto& [g, d] : ddf(mp_monic(reduce(f, p), p), p)) edf(g, d, p, rng, facs);
    std::sort(facs.begin(), facs.end());

    // Coefficient bound for factors, scaled by the leading coefficient.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Integer bound = root;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
    bound = 2 * bound * abs(lcf) + 1;
    unsigned k = 1;
    Integer M = p;
    while (M <= bound) {
        M *= p;
        ++k;
    }

    // Monic image of f modulo p^k, then lift the factor list one split at a time.
    Integer lcinv;
    Integer lcm_mod = lcf % M;
    if (lcm_mod < 0) lcm_mod += M;
    mpz_invert(lcinv.get_mpz_t(), lcm_mod.get_mpz_t(), M.get_mpz_t());
    ZPoly cur = f;
    for (auto& c : cur) c *= lcinv;
    mod_inplace(cur, M);

    std::vector<ZPoly> lifted;
    for (std::size_t i = 0; i + 1 < facs.size(); ++i) {
        ModPoly rest{1};
        for (std::size_t j = i + 1; j < facs.size(); ++j) rest = mp_mul(rest, facs[j], p);
        auto [G, H] = hensel_pair(cur, facs[i], rest, p, k);
        mod_inplace(G, M);
        mod_inplace(H, M);
        lifted.push_back(G);
        cur = H;
    }
    lifted.push_back(cur);

    std::vector<ZPoly> result;
    std::vector<std::size_t> idx(lifted.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    ZPoly rem = f;
    std::size_t s = 1;
    while (2 * s <= idx.size()) {
        bool found = false;
        std::vector<std::size_t> pick(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        for (;;) {
            ZPoly g{rem.back()};
            for (auto i : pick) {
                g = zmul(g, lifted[idx[i]]);
                mod_inplace(g, M);
            }
            symmetric_inplace(g, M);
            g = primitive(g);
            ZPoly quot;
            if (!g.empty() && g.size() > 1 && zdivides(rem, g, quot)) {
                result.push_back(g);
                rem = primitive(quot);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, j = 0; i < idx.size(); ++i) {
                    if (j < s && pick[j] == i) {
                        ++j;
                        continue;
                    }
                    keep.push_back(idx[i]);
                }
                idx = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == idx.size() - s + (i - 1)) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (rem.size() > 1) result.push_back(rem);
    return result;
}

struct FactorCache {
    std::shared_mutex mu;
    std::map<UniPoly, std::vector<std::pair<UniPoly, unsigned>>> table;
};

FactorCache& cache() {
    static FactorCache c;
    return c;
}

}  // namespace

std::vector<std::pair<UniPoly, unsigned>> irreducible_factor(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("irreducible_factor: zero polynomial");
    if (p.degree() == 0) return {};
    UniPoly key = p.monic();
    {
        std::shared_lock lock(cache().mu);
        auto it = cache().table.find(key);
        if (it != cache().table.end()) return it->second;
    }
    std::vector<std::pair<UniPoly, unsigned>> out;
    for (const auto& [a, mult] : squarefree_factor(key)) {
        if (a.degree() == 1) {
            out.emplace_back(a, mult);
            continue;
        }
        for (const ZPoly& z : factor_squarefree_z(to_zpoly(a))) out.emplace_back(to_unipoly(z).monic(), mult);
    }
    std::sort(out.begin(), out.end());
    {
        std::unique_lock lock(cache().mu);
        cache().table.emplace(key, out);
    }
    return out;
}

}  // namespace idring
