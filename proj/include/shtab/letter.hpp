#pragma once

// Letters of the primed alphabet [n]' = {1' < 1 < 2' < 2 < ... < n' < n}.
// Negative values are used internally by the evacuation algorithm, ordered
// -n' < -n < ... < -1' < -1 < 1' < 1 < ... (they never escape that module).

#include <compare>
#include <stdexcept>
#include <string>

namespace shtab {

struct Letter {
    int value = 0;     // nonzero; positive in the public alphabet
    bool primed = false;

    Letter() = default;
    Letter(int v, bool p) : value(v), primed(p) {
        if (v == 0) throw std::invalid_argument("Letter: value must be nonzero");
    }

    // Strictly increasing in the total order of the (signed) primed alphabet.
    int key() const {
        return 2 * value - (primed ? 1 : 0) + (value < 0 ? 1 : 0);
    }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.value == b.value && a.primed == b.primed;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
    friend bool operator<(const Letter& a, const Letter& b) { return a.key() < b.key(); }
    friend bool operator<=(const Letter& a, const Letter& b) { return a.key() <= b.key(); }
    friend bool operator>(const Letter& a, const Letter& b) { return a.key() > b.key(); }
    friend bool operator>=(const Letter& a, const Letter& b) { return a.key() >= b.key(); }

    std::string str() const {
        return std::to_string(value) + (primed ? "'" : "");
    }
};

// Parses "3", "3'", "-2'". Throws on malformed input.
inline Letter parse_letter(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_letter: empty token");
    bool primed = false;
    std::string body = s;
    if (body.back() == '\'') {
        primed = true;
        body.pop_back();
    }
    size_t pos = 0;
    int v = std::stoi(body, &pos);
    if (pos != body.size() || v == 0)
        throw std::invalid_argument("parse_letter: bad token '" + s + "'");
    return Letter(v, primed);
}

} // namespace shtab
