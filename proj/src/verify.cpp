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

#include "idring/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace idring {

namespace {

// Greatest variable of p, with its coefficient when it occurs only linearly.
template <class Var, class Less>
std::optional<std::pair<Var, std::optional<Rational>>> lead_of(const SparsePoly<Var, Less>& p) {
    auto vars = p.variables();
    if (vars.empty()) return std::nullopt;
    Var lead = *vars.rbegin();
    using P = SparsePoly<Var, Less>;
    typename P::Monomial lin{{lead, 1u}};
    std::optional<Rational> coeff;
    for (const auto& [m, c] : p.terms()) {
        bool has = std::any_of(m.begin(), m.end(), [&](const auto& ve) {
            Less less;
            return !less(ve.first, lead) && !less(lead, ve.first);
        });
        if (!has) continue;
        if (m == lin) coeff = c;
        else return std::pair<Var, std::optional<Rational>>{lead, std::nullopt};
    }
    return std::pair<Var, std::optional<Rational>>{lead, coeff};
}

// Division by a set whose leading monomials are distinct variables occurring
// linearly. Rules must be added in increasing order of their leading variable.
template <class Var, class Less>
class LeadReducer {
public:
    using P = SparsePoly<Var, Less>;

    void add(const Var& lead, const Rational& lc, const P& g) {
        P rest = g - P::variable(lead) * lc;
        rules_.emplace(lead, reduce(rest) * (Rational(-1) / lc));
    }
    bool is_lead(const Var& v) const { return rules_.count(v) != 0; }
    std::size_t size() const { return rules_.size(); }
    P reduce(const P& p) const {
        return p.substitute([&](const Var& v) -> const P* {
            auto it = rules_.find(v);
            return it == rules_.end() ? nullptr : &it->second;
        });
    }

private:
    std::map<Var, P, Less> rules_;
};

template <class F>
void run_indexed(std::size_t n, Exec exec, F&& body) {
    std::vector<std::string> errors(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(i)] = e.what();
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
    for (const auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string gen_string(const GenKey& g) { return "c(" + word_name(g.v) + "|" + word_name(g.w) + ")"; }

}  // namespace

std::string rank1_string(const Rank1Poly& p) {
    return p.to_string([](const Rank1Var& v) {
        return "c_{" + std::to_string(v.first) + "," + std::to_string(v.second) + "}";
    });
}

Rank1Poly rank1_var(unsigned n, unsigned m) { return Rank1Poly::variable({n, m}); }

Rank1Poly rank1_relation(unsigned n, unsigned m, unsigned l) {
    if (n == 0 || m == 0 || l == 0) throw std::invalid_argument("rank1_relation needs n, m, l >= 1");
    auto b = [](unsigned long a, unsigned long k) { return Rational(binomial(a, k)); };
    Rank1Poly r = rank1_var(n + m, l) * b(n + m, m) - rank1_var(n, m + l) * b(m + l, m);
    for (unsigned j = 0; j < m; ++j) {
        for (unsigned i = j == 0 ? 1 : 0; i < n; ++i)
            r += rank1_var(n - i, m - j) * rank1_var(i + j, l) * b(i + j, j);
        for (unsigned k = j == 0 ? 1 : 0; k < l; ++k)
            r -= rank1_var(n, j + k) * rank1_var(m - j, l - k) * b(j + k, j);
    }
    return r;
}

std::vector<Rank1Poly> rank1_relations(unsigned d) {
    std::vector<Rank1Poly> out;
    for (unsigned n = 1; n + 2 <= d; ++n)
        for (unsigned m = 1; n + m + 1 <= d; ++m)
            for (unsigned l = 1; n + m + l <= d; ++l) out.push_back(rank1_relation(n, m, l));
    return out;
}

Rank1Poly rank1_solved(unsigned m, unsigned n) {
    if (m < 2 || n < m) throw std::invalid_argument("rank1_solved needs 2 <= m <= n");
    auto b = [](unsigned long a, unsigned long k) { return Rational(binomial(a, k)); };
    Rank1Poly r = rank1_var(m, n) * Rational(m) - rank1_var(1, m + n - 1) * b(m + n - 1, m - 1);
    for (unsigned j = 0; j + 2 <= m; ++j)
        for (unsigned k = 1; k < n; ++k) r -= rank1_var(1, j + k) * rank1_var(m - j - 1, n - k) * b(j + k, j);
    return r;
}

std::vector<Rank1Poly> rank1_Gd(unsigned d) {
    std::vector<Rank1Poly> out;
    for (unsigned m = 2; 2 * m <= d; ++m)
        for (unsigned n = m; n + m <= d; ++n) out.push_back(rank1_solved(m, n));
    for (unsigned m = 1; 2 * m < d; ++m)
        for (unsigned n = m + 1; n + m <= d; ++n) out.push_back(rank1_var(n, m) - rank1_var(m, n));
    return out;
}

VerifyReport check_ideal_equality(unsigned d, Exec exec) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.kind = "rank1";
    rep.parameters["d"] = d;

    std::vector<Rank1Poly> gd = rank1_Gd(d);
    std::map<Rank1Var, std::pair<Rational, const Rank1Poly*>, Rank1Less> leads;
    for (const auto& g : gd) {
        auto lead = lead_of(g);
        if (!lead || !lead->second) throw std::logic_error("G_d element without a linear leading variable");
        if (!leads.emplace(lead->first, std::pair{*lead->second, &g}).second)
            throw std::logic_error("G_d leading variables are not distinct");
    }
    LeadReducer<Rank1Var, Rank1Less> red;
    for (const auto& [v, cg] : leads) red.add(v, cg.first, *cg.second);
    rep.basis_size = red.size();

    std::vector<std::array<unsigned, 3>> triples;
    for (unsigned n = 1; n + 2 <= d; ++n)
        for (unsigned m = 1; n + m + 1 <= d; ++m)
            for (unsigned l = 1; n + m + l <= d; ++l) triples.push_back({n, m, l});
    rep.relations_generated = triples.size();

    std::vector<Rank1Poly> residual(triples.size());
    run_indexed(triples.size(), exec, [&](std::size_t i) {
        const auto& [n, m, l] = triples[i];
        residual[i] = red.reduce(rank1_relation(n, m, l));
    });
    for (std::size_t i = 0; i < triples.size(); ++i) {
        if (residual[i].is_zero()) {
            ++rep.reduced_to_zero;
            continue;
        }
        const auto& [n, m, l] = triples[i];
        rep.failures.push_back("(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(l) +
                               "): " + rank1_string(residual[i]));
    }
    std::set<Rank1Var, Rank1Less> irreducible;
    for (unsigned n = 1; n < d; ++n)
        for (unsigned m = 1; n + m <= d; ++m)
            if (!red.is_lead({n, m})) irreducible.insert({n, m});
    for (const auto& v : irreducible)
        rep.irreducible_generators.push_back("c_{" + std::to_string(v.first) + "," + std::to_string(v.second) + "}");
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

std::vector<std::array<Word, 3>> relation_triples(std::size_t alphabet_size, std::size_t wmax) {
    std::vector<std::array<Word, 3>> out;
    if (wmax < 3) return out;
    std::vector<Word> words = all_words_upto(alphabet_size, wmax - 2);
    for (const auto& v1 : words)
        for (const auto& v2 : words) {
            if (v1.size() + v2.size() + 1 > wmax) continue;
            for (const auto& v3 : words) {
                if (v1.size() + v2.size() + v3.size() > wmax) continue;
                if (dlex_cmp(v1, v3) >= 0) continue;
                out.push_back({v1, v2, v3});
            }
        }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        std::size_t wa = a[0].size() + a[1].size() + a[2].size();
        std::size_t wb = b[0].size() + b[1].size() + b[2].size();
        if (wa != wb) return wa < wb;
        for (int i = 0; i < 3; ++i) {
            auto c = dlex_cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    return out;
}

std::vector<GenKey> all_generators(std::size_t alphabet_size, std::size_t wmax) {
    std::vector<GenKey> out;
    if (wmax < 2) return out;
    std::vector<Word> words = all_words_upto(alphabet_size, wmax - 1);
    for (const auto& v : words)
        for (const auto& w : words)
            if (v.size() + w.size() <= wmax && dlex_cmp(v, w) <= 0) out.push_back({v, w});
    std::sort(out.begin(), out.end(), GenLess());
    return out;
}

VerifyReport freeness_truncated(std::size_t alphabet_size, std::size_t wmax, Exec exec) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.kind = "freeness";
    rep.parameters["letters"] = static_cast<long>(alphabet_size);
    rep.parameters["wmax"] = static_cast<long>(wmax);

    auto triples = relation_triples(alphabet_size, wmax);
    rep.relations_generated = triples.size();
    std::vector<ConstPoly> rel(triples.size());
    run_indexed(triples.size(), exec, [&](std::size_t i) {
        rel[i] = relation_r(triples[i][0], triples[i][1], triples[i][2]);
    });

    // Greedy choice of G in triple order: the first relation claiming a
    // leading generator keeps it.
    std::map<ConstSymbol, std::pair<Rational, std::size_t>, SymbolLess> claimed;
    std::vector<bool> in_g(triples.size(), false);
    for (std::size_t i = 0; i < rel.size(); ++i) {
        auto lead = lead_of(rel[i]);
        if (!lead || !lead->second || !is_integer(*lead->second)) continue;
        if (claimed.emplace(lead->first, std::pair{*lead->second, i}).second) in_g[i] = true;
    }
    LeadReducer<ConstSymbol, SymbolLess> red;
    for (const auto& [g, ci] : claimed) red.add(g, ci.first, rel[ci.second]);
    rep.basis_size = red.size();

    std::vector<ConstPoly> residual(triples.size());
    run_indexed(triples.size(), exec, [&](std::size_t i) {
        if (!in_g[i]) residual[i] = red.reduce(rel[i]);
    });
    for (std::size_t i = 0; i < triples.size(); ++i) {
        if (residual[i].is_zero()) {
            ++rep.reduced_to_zero;
            continue;
        }
        rep.failures.push_back("r(" + word_name(triples[i][0]) + "," + word_name(triples[i][1]) + "," +
                               word_name(triples[i][2]) + "): " + const_poly_string(residual[i]));
    }

    for (const auto& g : all_generators(alphabet_size, wmax)) {
        bool irreducible = !red.is_lead(ConstSymbol{C2Gen{g}});
        if (irreducible) rep.irreducible_generators.push_back(gen_string(g));
        if (irreducible != is_in_S(g.v, g.w)) {
            rep.generators_match = false;
            rep.generator_mismatches.push_back(gen_string(g) + (irreducible ? " irreducible but not in S"
                                                                            : " in S but eliminated"));
        }
    }
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << "verify " << kind << " (";
    bool first = true;
    for (const auto& [k, v] : parameters) {
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
    }
    os << ")\n";
    os << "relations generated: " << relations_generated << "\n";
    os << "reduced to zero: " << reduced_to_zero << "\n";
    os << "basis size: " << basis_size << "\n";
    os << "failures: " << failures.size() << "\n";
    for (const auto& f : failures) os << "  " << f << "\n";
    os << "irreducible generators (" << irreducible_generators.size() << "):";
    for (const auto& g : irreducible_generators) os << " " << g;
    os << "\n";
    if (kind == "freeness") os << "irreducible generators equal S: " << (generators_match ? "yes" : "no") << "\n";
    for (const auto& m : generator_mismatches) os << "  " << m << "\n";
    os << "elapsed: " << elapsed_seconds << " s\n";
    os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    j["parameters"] = parameters;
    j["relations_generated"] = relations_generated;
    j["reduced_to_zero"] = reduced_to_zero;
    j["basis_size"] = basis_size;
    j["failures"] = failures;
    j["irreducible_generators"] = irreducible_generators;
    j["generators_match"] = generators_match;
    j["generator_mismatches"] = generator_mismatches;
    j["elapsed_seconds"] = elapsed_seconds;
    j["passed"] = passed();
    return j;
}

}  // namespace idring
