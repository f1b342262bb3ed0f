// Words over the alphabet {1..n}, block factorization, and the shift operator.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace debruijn {

// A fixed-length word over {1..n}. Lexicographic order of the letter
// sequence is the canonical state ordering everywhere.
struct Word {
    int n = 0;
    std::vector<int> letters;

    Word() = default;
    Word(int alphabet, std::vector<int> ls) : n(alphabet), letters(std::move(ls)) {
        if (n < 2) throw std::invalid_argument("alphabet size must be >= 2");
        if (letters.empty()) throw std::invalid_argument("word must be nonempty");
        for (int a : letters)
            if (a < 1 || a > n) throw std::invalid_argument("letter out of range 1..n");
    }

    int length() const { return static_cast<int>(letters.size()); }
    int first() const { return letters.front(); }
    int last() const { return letters.back(); }

    bool operator==(const Word& o) const { return n == o.n && letters == o.letters; }
    auto operator<=>(const Word& o) const { return letters <=> o.letters; }

    // Lexicographic rank among all words of the same length, 0-based.
    std::int64_t rank() const {
        std::int64_t r = 0;
        for (int a : letters) r = r * n + (a - 1);
        return r;
    }

    static Word from_rank(int n, int length, std::int64_t rank) {
        std::vector<int> ls(length);
        for (int i = length - 1; i >= 0; --i) {
            ls[i] = static_cast<int>(rank % n) + 1;
            rank /= n;
        }
        return Word(n, std::move(ls));
    }

    // Digit string for n <= 9, comma separated otherwise.
    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (n > 9 && i > 0) os << ',';
            os << letters[i];
        }
        return os.str();
    }

    static Word parse(int n, const std::string& text) {
        std::vector<int> ls;
        if (n <= 9) {
            for (char c : text) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad word '" + text + "'");
                ls.push_back(c - '0');
            }
        } else {
            std::istringstream is(text);
            std::string tok;
            while (std::getline(is, tok, ',')) ls.push_back(std::stoi(tok));
        }
        return Word(n, std::move(ls));
    }
};

struct Block {
    int letter = 0;
    int run_length = 0;
    bool operator==(const Block&) const = default;
};

// Canonical factorization into maximal single-letter runs.
inline std::vector<Block> block_factorize(const Word& w) {
    std::vector<Block> blocks;
    for (int a : w.letters) {
        if (!blocks.empty() && blocks.back().letter == a)
            ++blocks.back().run_length;
        else
            blocks.push_back({a, 1});
    }
    return blocks;
}

// Number of blocks in the canonical factorization.
inline int block_count(const Word& w) {
    int count = 1;
    for (int i = 1; i < w.length(); ++i)
        if (w.letters[i] != w.letters[i - 1]) ++count;
    return count;
}

// (letter, depth) of the final maximal block; the rate attached to w is
// x_{letter,depth}.
inline std::pair<int, int> beta_index(const Word& w) {
    int a = w.last();
    int k = 0;
    for (int i = w.length() - 1; i >= 0 && w.letters[i] == a; --i) ++k;
    return {a, k};
}

// Drop the first letter, append a. The word length is preserved.
inline Word shift_append(const Word& w, int a) {
    if (a < 1 || a > w.n) throw std::invalid_argument("letter out of range 1..n");
    Word out = w;
    out.letters.erase(out.letters.begin());
    out.letters.push_back(a);
    return out;
}

// All words of a given length in lexicographic order.
inline std::vector<Word> all_words(int n, int length) {
    std::int64_t count = 1;
    for (int i = 0; i < length; ++i) count *= n;
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t r = 0; r < count; ++r) out.push_back(Word::from_rank(n, length, r));
    return out;
}

inline std::int64_t pow_int(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace debruijn
