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
// Words over an ordered alphabet of small integer letters. Letter order is
// the numeric order of the ids.

#ifndef IDRING_WORDS_HPP
#define IDRING_WORDS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idring/rational.hpp"

namespace idring {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// A finite alphabet {0, ..., size-1}.
class Alphabet {
public:
    explicit Alphabet(std::size_t size) : size_(size) {}
    std::size_t size() const { return size_; }
    bool contains(const Word& w) const;
    // Throws std::invalid_argument if a word uses a letter outside the alphabet.
    void check(const Word& w) const;
    std::strong_ordering compare(const Word& v, const Word& w) const;

private:
    std::size_t size_;
};

std::strong_ordering lex_cmp(const Word& v, const Word& w);
// Length first, then lexicographic. The empty word is the minimum.
std::strong_ordering dlex_cmp(const Word& v, const Word& w);

struct DlexLess {
    bool operator()(const Word& v, const Word& w) const { return dlex_cmp(v, w) < 0; }
};

// Multiset of all interleavings, as word -> multiplicity.
std::map<Word, Integer> shuffle_multiset(const Word& v, const Word& w);

struct MaxShuffle {
    Word word;
    Integer multiplicity;
};
MaxShuffle max_shuffle(const Word& v, const Word& w);
// Number of interleavings of v and w that spell u.
Integer shuffle_count(const Word& v, const Word& w, const Word& u);

bool is_lyndon(const Word& w);
// Chen-Fox-Lyndon factorization; factors are non-increasing.
std::vector<Word> lyndon_factorization(const Word& w);
// For non-Lyndon v: the contiguous split with the shortest prefix whose maximal
// shuffle is v.
std::optional<std::pair<Word, Word>> split_max_shuffle(const Word& v);

// A pair (w1, w2) of nonempty words with max_shuffle(w1, w2) = w and
// w1 <_dlex v, minimal in (w1, w2) under dlex; nullopt if none exists.
std::optional<std::pair<Word, Word>> find_lower_decomposition(const Word& v, const Word& w);

// Requires v <=_dlex w, both nonempty.
bool is_in_S(const Word& v, const Word& w);

struct GenKey {
    Word v, w;  // v <=_dlex w
    friend bool operator==(const GenKey&, const GenKey&) = default;
};
// Lexicographic on (|v| + |w|, v, w).
std::strong_ordering gen_cmp(const GenKey& a, const GenKey& b);
struct GenLess {
    bool operator()(const GenKey& a, const GenKey& b) const { return gen_cmp(a, b) < 0; }
};

// All words of the given length over k letters, in lexicographic order.
std::vector<Word> all_words(std::size_t k, std::size_t length);
// All words of length 1..max_length over k letters, in dlex order.
std::vector<Word> all_words_upto(std::size_t k, std::size_t max_length);

// Letters render as a, b, ..., z, then L26, L27, ...
std::string letter_name(Letter l);
std::string word_name(const Word& w);
// Inverse of word_name for single-character letters.
Word parse_word(std::string_view text);

}  // namespace idring

#endif  // IDRING_WORDS_HPP
