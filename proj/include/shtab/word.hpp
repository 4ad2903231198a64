#pragma once

// Words over the primed alphabet, stored in canonical form: the leftmost
// occurrence of each value is unprimed. Weight counts i and i' together.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "letter.hpp"
#include "permutation.hpp"

namespace shtab {

using Letters = std::vector<Letter>;

// Unprimes the leftmost occurrence of each value; other letters unchanged.
inline Letters canonicalize_letters(Letters w) {
    std::map<int, bool> seen;
    for (auto& x : w) {
        if (!seen[x.value]) {
            seen[x.value] = true;
            x.primed = false;
        }
    }
    return w;
}

struct Word {
    Letters letters; // always canonical

    Word() = default;
    explicit Word(Letters ls) : letters(canonicalize_letters(std::move(ls))) {}

    int length() const { return (int)letters.size(); }

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator<(const Word& a, const Word& b) {
        auto key = [](const Letter& x) { return x.key(); };
        return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                            b.letters.begin(), b.letters.end(),
                                            [&](const Letter& x, const Letter& y) { return key(x) < key(y); });
    }

    std::string str() const {
        std::string s;
        for (auto& x : letters) s += x.str();
        return s;
    }
};

inline Word canonicalize_word(const Letters& representative) { return Word(representative); }

// wt_i = number of i plus i' (indices 1..max value present, or padded to n).
inline std::vector<int> weight(const Letters& w, int n = 0) {
    int top = n;
    for (auto& x : w) {
        if (x.value < 1) throw std::invalid_argument("weight: non-positive letter value");
        top = std::max(top, x.value);
    }
    std::vector<int> wt(top, 0);
    for (auto& x : w) wt[x.value - 1] += 1;
    return wt;
}
inline std::vector<int> weight(const Word& w, int n = 0) { return weight(w.letters, n); }

// Positions of w listed in standardization order: values least to greatest,
// primed occurrences of a value right-to-left before unprimed left-to-right.
inline std::vector<int> standardization_positions(const Letters& w) {
    std::vector<int> order;
    int maxv = 0;
    for (auto& x : w) maxv = std::max(maxv, x.value);
    for (int v = 1; v <= maxv; ++v) {
        for (int p = (int)w.size() - 1; p >= 0; --p)
            if (w[p].value == v && w[p].primed) order.push_back(p);
        for (int p = 0; p < (int)w.size(); ++p)
            if (w[p].value == v && !w[p].primed) order.push_back(p);
    }
    return order;
}

// std(w): the standard word; representative-independent.
inline Word standardize_word(const Word& w) {
    auto order = standardization_positions(w.letters);
    Letters out(w.letters.size());
    for (int k = 0; k < (int)order.size(); ++k) out[order[k]] = Letter(k + 1, false);
    return Word(out);
}

inline Word apply_permutation_word(const Permutation& tau, const Word& w) {
    Letters out;
    out.reserve(w.letters.size());
    for (auto& x : w.letters) out.push_back(tau(x));
    return Word(out);
}

// All representatives of a canonical word: each value's leftmost occurrence
// may be primed or not (test helper for representative-independence).
inline std::vector<Letters> representatives(const Word& w) {
    std::vector<int> firsts;
    std::map<int, bool> seen;
    for (int p = 0; p < (int)w.letters.size(); ++p)
        if (!seen[w.letters[p].value]) {
            seen[w.letters[p].value] = true;
            firsts.push_back(p);
        }
    std::vector<Letters> out;
    for (int mask = 0; mask < (1 << firsts.size()); ++mask) {
        Letters r = w.letters;
        for (size_t k = 0; k < firsts.size(); ++k)
            if (mask & (1 << k)) r[firsts[k]].primed = true;
        out.push_back(r);
    }
    return out;
}

// Space-free form uses one digit per letter ("323'112'2"); words with values
// above 9 must use whitespace-separated tokens ("10' 3 12").
inline Word parse_word(const std::string& s) {
    Letters out;
    if (s.find(' ') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (ss >> tok) out.push_back(parse_letter(tok));
        return Word(out);
    }
    size_t p = 0;
    while (p < s.size()) {
        if (!isdigit((unsigned char)s[p]))
            throw std::invalid_argument("parse_word: bad character in '" + s + "'");
        size_t q = p + 1;
        if (q < s.size() && s[q] == '\'') ++q;
        out.push_back(parse_letter(s.substr(p, q - p)));
        p = q;
    }
    return Word(out);
}

} // namespace shtab
