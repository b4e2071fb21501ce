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

#include "idring/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace idring {

bool Alphabet::contains(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [this](Letter l) { return l < size_; });
}

void Alphabet::check(const Word& w) const {
    if (!contains(w)) throw std::invalid_argument("word uses a letter outside the alphabet: " + word_name(w));
}

std::strong_ordering Alphabet::compare(const Word& v, const Word& w) const {
    check(v);
    check(w);
    return dlex_cmp(v, w);
}

std::strong_ordering lex_cmp(const Word& v, const Word& w) {
    return std::lexicographical_compare_three_way(v.begin(), v.end(), w.begin(), w.end());
}

std::strong_ordering dlex_cmp(const Word& v, const Word& w) {
    if (auto c = v.size() <=> w.size(); c != 0) return c;
    return lex_cmp(v, w);
}

namespace {

void shuffle_rec(const Word& v, std::size_t i, const Word& w, std::size_t j, Word& cur, std::map<Word, Integer>& out) {
    if (i == v.size() && j == w.size()) {
        out[cur] += 1;
        return;
    }
    if (i < v.size()) {
        cur.push_back(v[i]);
        shuffle_rec(v, i + 1, w, j, cur, out);
        cur.pop_back();
    }
    if (j < w.size()) {
        cur.push_back(w[j]);
        shuffle_rec(v, i, w, j + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::map<Word, Integer> shuffle_multiset(const Word& v, const Word& w) {
    std::map<Word, Integer> out;
    Word cur;
    cur.reserve(v.size() + w.size());
    shuffle_rec(v, 0, w, 0, cur, out);
    return out;
}

Integer shuffle_count(const Word& v, const Word& w, const Word& u) {
    const std::size_t n = v.size(), m = w.size();
    if (u.size() != n + m) return 0;
    // ways[i][j]: interleavings of v[:i], w[:j] spelling u[:i+j]
    std::vector<std::vector<Integer>> ways(n + 1, std::vector<Integer>(m + 1, 0));
    ways[0][0] = 1;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= m; ++j) {
            if (i == 0 && j == 0) continue;
            Integer acc = 0;
            if (i > 0 && v[i - 1] == u[i + j - 1]) acc += ways[i - 1][j];
            if (j > 0 && w[j - 1] == u[i + j - 1]) acc += ways[i][j - 1];
            ways[i][j] = acc;
        }
    return ways[n][m];
}

MaxShuffle max_shuffle(const Word& v, const Word& w) {
    Word out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        bool take_v;
        if (i == v.size()) {
            take_v = false;
        } else if (j == w.size()) {
            take_v = true;
        } else {
            take_v = std::lexicographical_compare_three_way(v.begin() + static_cast<long>(i), v.end(),
                                                            w.begin() + static_cast<long>(j), w.end()) >= 0;
        }
        if (take_v) out.push_back(v[i++]);
        else out.push_back(w[j++]);
    }
    Integer mult = shuffle_count(v, w, out);
    return {std::move(out), std::move(mult)};
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (std::lexicographical_compare_three_way(w.begin() + static_cast<long>(k), w.end(), w.begin(), w.end()) <= 0)
            return false;
    }
    return true;
}

std::vector<Word> lyndon_factorization(const Word& w) {
    if (w.empty()) throw std::invalid_argument("lyndon_factorization: empty word");
    std::vector<Word> out;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            k = (w[k] < w[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + j - k));
            i += j - k;
        }
    }
    return out;
}

std::optional<std::pair<Word, Word>> split_max_shuffle(const Word& v) {
    if (v.empty()) throw std::invalid_argument("split_max_shuffle: empty word");
    if (is_lyndon(v)) return std::nullopt;
    for (std::size_t k = 1; k < v.size(); ++k) {
        Word a(v.begin(), v.begin() + static_cast<long>(k));
        Word b(v.begin() + static_cast<long>(k), v.end());
        if (max_shuffle(a, b).word == v) return std::make_pair(std::move(a), std::move(b));
    }
    throw std::logic_error("non-Lyndon word without contiguous maximal-shuffle split: " + word_name(v));
}

std::optional<std::pair<Word, Word>> find_lower_decomposition(const Word& v, const Word& w) {
    const std::size_t n = w.size();
    if (n < 2 || n > 30) {
        if (n > 30) throw std::invalid_argument("word too long for exhaustive decomposition search");
        return std::nullopt;
    }
    std::optional<std::pair<Word, Word>> best;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        Word a, b;
        for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? a : b).push_back(w[i]);
        if (dlex_cmp(a, v) >= 0) continue;
        if (max_shuffle(a, b).word != w) continue;
        if (!best || dlex_cmp(a, best->first) < 0 || (a == best->first && dlex_cmp(b, best->second) < 0))
            best = std::make_pair(std::move(a), std::move(b));
    }
    return best;
}

bool is_in_S(const Word& v, const Word& w) {
    if (v.empty() || w.empty()) throw std::invalid_argument("is_in_S: empty word");
    if (dlex_cmp(v, w) > 0) throw std::invalid_argument("is_in_S: requires V <=_dlex W");
    if (!is_lyndon(v)) return false;
    return !find_lower_decomposition(v, w).has_value();
}

std::strong_ordering gen_cmp(const GenKey& a, const GenKey& b) {
    if (auto c = (a.v.size() + a.w.size()) <=> (b.v.size() + b.w.size()); c != 0) return c;
    if (auto c = dlex_cmp(a.v, b.v); c != 0) return c;
    return dlex_cmp(a.w, b.w);
}

std::vector<Word> all_words(std::size_t k, std::size_t length) {
    std::vector<Word> out;
    if (k == 0) return length == 0 ? std::vector<Word>{Word{}} : out;
    Word cur(length, 0);
    for (;;) {
        out.push_back(cur);
        std::size_t i = length;
        while (i > 0 && cur[i - 1] == k - 1) {
            cur[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++cur[i - 1];
    }
    return out;
}

std::vector<Word> all_words_upto(std::size_t k, std::size_t max_length) {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_length; ++len) {
        auto ws = all_words(k, len);
        out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
}

std::string letter_name(Letter l) {
    if (l < 26) return std::string(1, static_cast<char>('a' + l));
    return "L" + std::to_string(l);
}

std::string word_name(const Word& w) {
    if (w.empty()) return "";
    std::string s;
    for (Letter l : w) s += letter_name(l);
    return s;
}

Word parse_word(std::string_view text) {
    Word w;
    for (char c : text) {
        if (c < 'a' || c > 'z') throw std::invalid_argument(std::string("letters must be a-z, got '") + c + "'");
        w.push_back(static_cast<Letter>(c - 'a'));
    }
    return w;
}

}  // namespace idring
