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
// Command line front end. Exit codes: 0 ok, 1 error, 2 parse error,
// 3 truncation order too small.

#include <CLI11.hpp>

#include <iostream>

#include "idring/expr.hpp"
#include "idring/verify.hpp"

using namespace idring;

namespace {

struct Options {
    std::string mode = "q";
    int truncation = 30;
    bool json = false;
    std::string expr;
    unsigned d = 10;
    std::size_t letters = 2;
    std::size_t wmax = 5;
    bool full_scale = false;
    bool serial = false;
    std::vector<std::string> words;
};

std::shared_ptr<Idr<RationalBase>> make_context(const Options& o) {
    return Idr<RationalBase>::create(std::make_shared<RationalBase>(), parse_mode(o.mode));
}

int run_simplify(const Options& o) {
    auto ctx = make_context(o);
    auto a = eval_expr(o.expr, *ctx);
    if (o.json) {
        std::cout << ctx->to_json(a).dump(2) << "\n";
        return 0;
    }
    std::cout << ctx->to_string(a) << "\n";
    std::string legend = ctx->legend(a);
    if (!legend.empty()) std::cout << "where\n" << legend << "\n";
    return 0;
}

int run_closure(const Options& o) {
    auto ctx = make_context(o);
    auto a = eval_expr(o.expr, *ctx);
    auto values = closure_constants(a, o.truncation);
    auto r = closure_reduce(a, o.truncation);
    if (o.json) {
        nlohmann::json j = ctx->to_json(r);
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [s, v] : values) table.push_back({{"symbol", symbol_name(s)}, {"value", v.get_str()}});
        j["constants"] = table;
        j["input"] = ctx->to_json(a);
        j["truncation"] = o.truncation;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << ctx->to_string(r) << "\n";
    if (!values.empty()) {
        std::cout << "constants\n";
        for (const auto& [s, v] : values) std::cout << symbol_name(s) << " = " << v.get_str() << "\n";
    }
    std::string legend = ctx->legend(a);
    if (!legend.empty()) std::cout << "where\n" << legend << "\n";
    return 0;
}

int print_report(const VerifyReport& rep, bool json) {
    if (json) std::cout << rep.to_json().dump(2) << "\n";
    else std::cout << rep.to_text();
    return rep.passed() ? 0 : 1;
}

int run_lyndon(const Options& o) {
    Word v = parse_word(o.words.at(0));
    nlohmann::json j;
    j["word"] = o.words[0];
    j["is_lyndon"] = is_lyndon(v);
    std::vector<std::string> factors;
    for (const auto& f : lyndon_factorization(v)) factors.push_back(word_name(f));
    j["factorization"] = factors;
    if (auto split = split_max_shuffle(v)) j["max_shuffle_split"] = {word_name(split->first), word_name(split->second)};
    if (o.words.size() > 1) {
        Word w = parse_word(o.words[1]);
        if (v.empty() || w.empty()) throw std::invalid_argument("S membership needs nonempty words");
        C2Gen g = c2gen_canonical(v, w);
        j["generator"] = symbol_name(g);
        j["in_S"] = is_in_S(g.key.v, g.key.w);
    }
    if (o.json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "word: " << o.words[0] << "\n";
    std::cout << "lyndon: " << (j["is_lyndon"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "factorization:";
    for (const auto& f : factors) std::cout << " (" << f << ")";
    std::cout << "\n";
    if (j.contains("max_shuffle_split"))
        std::cout << "maximal shuffle of: " << j["max_shuffle_split"][0].get<std::string>() << ", "
                  << j["max_shuffle_split"][1].get<std::string>() << "\n";
    if (j.contains("in_S"))
        std::cout << j["generator"].get<std::string>() << " in S: " << (j["in_S"].get<bool>() ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Integro-differential rings of nested integrals over Q(x)"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--mode", o.mode, "free, q or ida")->check(CLI::IsMember({"free", "q", "ida"}));
    app.add_option("--truncation", o.truncation, "Laurent series order for model evaluation")->check(CLI::PositiveNumber);
    app.add_flag("--json", o.json, "Emit JSON");

    auto* simplify = app.add_subcommand("simplify", "Print the canonical form of an expression");
    simplify->add_option("expr", o.expr)->required();
    auto* closure = app.add_subcommand("closure", "Substitute model values for all constants");
    closure->add_option("expr", o.expr)->required();

    auto* verify = app.add_subcommand("verify", "Machine checks on the constant relations");
    verify->require_subcommand(1);
    verify->add_flag("--serial", o.serial, "Use the serial reference implementation");
    auto* rank1 = verify->add_subcommand("rank1", "Rank-1 ideal equality for weight <= d");
    rank1->add_option("--d", o.d, "Maximal weight")->check(CLI::PositiveNumber);
    rank1->add_flag("--full-scale", o.full_scale, "Run with d = 60 (very long)");
    auto* freeness = verify->add_subcommand("freeness", "Truncated freeness check");
    freeness->add_option("--letters", o.letters, "Alphabet size")->check(CLI::PositiveNumber);
    freeness->add_option("--wmax", o.wmax, "Maximal weight")->check(CLI::PositiveNumber);
    freeness->add_flag("--full-scale", o.full_scale, "Run with 2 letters up to weight 12 (very long)");

    auto* lyndon = app.add_subcommand("lyndon", "Lyndon factorization and S membership of c(V|W)");
    lyndon->add_option("words", o.words, "A word, optionally followed by a second word W")->required()->expected(1, 2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Exec exec = o.serial ? Exec::Serial : Exec::Parallel;
        if (simplify->parsed()) return run_simplify(o);
        if (closure->parsed()) return run_closure(o);
        if (rank1->parsed()) return print_report(check_ideal_equality(o.full_scale ? 60 : o.d, exec), o.json);
        if (freeness->parsed()) {
            if (o.full_scale) {
                o.letters = 2;
                o.wmax = 12;
            }
            return print_report(freeness_truncated(o.letters, o.wmax, exec), o.json);
        }
        if (lyndon->parsed()) return run_lyndon(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "truncation error: " << e.what() << " (raise --truncation)\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
