#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "qhf/matrix.hpp"

namespace qhf {

// Letter 2i is generator i, letter 2i+1 its inverse.
using Word = std::vector<int>;

inline bool cancels(int a, int b) { return (a ^ 1) == b; }

inline std::string word_to_string(const Word& w, const std::vector<std::string>& labels) {
    std::string s;
    for (int letter : w) {
        if (!s.empty()) s += ' ';
        std::string lab = labels[size_t(letter / 2)];
        if (letter & 1) {
            // capitalized label denotes the inverse letter
            for (char& c : lab) c = char(std::toupper(static_cast<unsigned char>(c)));
        }
        s += lab;
    }
    return s;
}

// All freely reduced words of length 1..max_len over n generators and
// their inverses, shortest first, lexicographic by letter index within a
// length. Matrices built incrementally; inverses via the closed formula.
template <class S>
void enumerate_words(const std::vector<Matrix3<S>>& generators, int max_len,
                     const std::function<void(const Word&, const Matrix3<S>&)>& visit) {
    if (max_len < 1 || generators.empty()) return;
    std::vector<Matrix3<S>> letters;
    for (const auto& g : generators) {
        letters.push_back(g);
        letters.push_back(inverse_formula(g));
    }
    struct Entry {
        Word word;
        Matrix3<S> mat;
    };
    std::vector<Entry> frontier;
    for (size_t i = 0; i < letters.size(); ++i) {
        Entry e{{int(i)}, letters[i]};
        visit(e.word, e.mat);
        frontier.push_back(std::move(e));
    }
    for (int len = 2; len <= max_len; ++len) {
        std::vector<Entry> next;
        next.reserve(frontier.size() * (letters.size() - 1));
        for (const auto& e : frontier) {
            for (size_t i = 0; i < letters.size(); ++i) {
                if (cancels(e.word.back(), int(i))) continue;
                Entry n;
                n.word = e.word;
                n.word.push_back(int(i));
                n.mat = e.mat * letters[i];
                visit(n.word, n.mat);
                next.push_back(std::move(n));
            }
        }
        frontier = std::move(next);
    }
}

template <class S>
std::vector<std::pair<Word, Matrix3<S>>> enumerate_words_vec(
    const std::vector<Matrix3<S>>& generators, int max_len) {
    std::vector<std::pair<Word, Matrix3<S>>> out;
    enumerate_words<S>(generators, max_len,
                       [&](const Word& w, const Matrix3<S>& m) { out.emplace_back(w, m); });
    return out;
}

}  // namespace qhf
