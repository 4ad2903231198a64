#pragma once

// Shifted jeu de taquin: inner/outer slides with the diagonal exception,
// rectification with slide records, shifted Knuth moves and equivalence,
// dual equivalence (exhaustive at desk scale), and the complement c_n.

#include <optional>
#include <set>
#include <stdexcept>

#include "tableau.hpp"

namespace shtab {

struct SlideStep {
    Cell cell;              // vacated corner
    enum Kind { Inner, Outer } kind;
    friend bool operator==(const SlideStep& a, const SlideStep& b) {
        return a.cell == b.cell && a.kind == b.kind;
    }
};
using SlideRecord = std::vector<SlideStep>;

namespace detail {

// One inner slide on a raw cell map. Returns the vacated outer-corner cell.
// Tie rule (see ledger): move the strictly smaller of right/below; on letter
// equality move below when unprimed, right when primed. Diagonal exception:
// value a slides left into (r,r) and value a then slides up from (r+1,r+1)
// => both boxes become unprimed.
inline Cell inner_slide_map(std::map<Cell, Letter>& m, Cell hole) {
    bool prev_into_diag = false; // previous move slid value `diag_v` left into (r,r)
    int diag_v = 0;
    Cell diag_cell{0, 0};
    for (;;) {
        auto [r, c] = hole;
        auto right = m.find({r, c + 1});
        auto below = m.find({r + 1, c});
        bool has_r = right != m.end(), has_b = below != m.end();
        if (!has_r && !has_b) return hole;
        bool move_below;
        if (!has_r) move_below = true;
        else if (!has_b) move_below = false;
        else if (below->second < right->second) move_below = true;
        else if (right->second < below->second) move_below = false;
        else move_below = !below->second.primed; // equal letters
        if (move_below) {
            Letter x = below->second;
            // exception: value x.value moved left into diagonal just before,
            // and now a box of the same value moves up from diagonal (r+1,c)
            if (prev_into_diag && r + 1 == c && x.value == diag_v) {
                x.primed = false;
                m.at(diag_cell).primed = false;
            }
            m.erase(below);
            m[{r, c}] = x;
            prev_into_diag = false;
            hole = {r + 1, c};
        } else {
            Letter x = right->second;
            m.erase(right);
            m[{r, c}] = x;
            prev_into_diag = (r == c); // slid left into the diagonal
            diag_v = x.value;
            diag_cell = {r, c};
            hole = {r, c + 1};
        }
    }
}

// One outer slide (exact inverse). Hole starts at an empty outer-corner cell
// and travels northwest; returns the final hole position (new inner cell).
// Reverse exception: value a slides down from (r-1,c) into diagonal (c,c)...
// concretely: a moved down into diagonal (r,r), then a box of the same value
// moves right from diagonal (r-1? ) — see inner_slide_map; the letter moving
// right out of the diagonal cell becomes primed.
inline Cell outer_slide_map(std::map<Cell, Letter>& m, Cell hole) {
    bool prev_into_diag = false; // previous move slid value `diag_v` down into (d,d)
    int diag_v = 0;
    for (;;) {
        auto [r, c] = hole;
        auto left = m.find({r, c - 1});
        auto up = m.find({r - 1, c});
        bool has_l = left != m.end() && c - 1 >= r; // cells west of the diagonal don't exist
        bool has_u = up != m.end();
        if (!has_l && !has_u) return hole;
        bool move_up;
        if (!has_l) move_up = true;
        else if (!has_u) move_up = false;
        else if (up->second > left->second) move_up = true;
        else if (left->second > up->second) move_up = false;
        else move_up = !up->second.primed; // equal letters: above if unprimed, left if primed
        if (move_up) {
            Letter x = up->second;
            m.erase(up);
            m[{r, c}] = x;
            prev_into_diag = (r == c); // slid down into the diagonal
            diag_v = x.value;
            hole = {r - 1, c};
        } else {
            Letter x = left->second;
            // inverse exception: same value moved down into diagonal (r+1,c)
            // just before, and now this box moves right out of diagonal (r,r)
            if (prev_into_diag && c - 1 == r && x.value == diag_v) x.primed = true;
            m.erase(left);
            m[{r, c}] = x;
            prev_into_diag = false;
            hole = {r, c - 1};
        }
    }
}

} // namespace detail

// Inner slide at an inner corner (a removable cell of the inner shape).
inline std::pair<ShiftedTableau, Cell> inner_slide(const ShiftedTableau& T, Cell corner) {
    auto& sh = T.shape();
    auto rem = sh.inner.removable_cells();
    if (std::find(rem.begin(), rem.end(), corner) == rem.end())
        throw std::invalid_argument("inner_slide: not an inner corner");
    auto m = T.filling().entries;
    Cell vac = detail::inner_slide_map(m, corner);
    SkewShape nsh{sh.outer.without_cell(vac.first, vac.second),
                  sh.inner.without_cell(corner.first, corner.second)};
    return {ShiftedTableau(Filling(nsh, std::move(m)), T.n()), vac};
}

// Outer slide at an outer corner (an addable cell of the outer shape).
inline std::pair<ShiftedTableau, Cell> outer_slide(const ShiftedTableau& T, Cell corner) {
    auto& sh = T.shape();
    auto add = sh.outer.addable_cells();
    if (std::find(add.begin(), add.end(), corner) == add.end())
        throw std::invalid_argument("outer_slide: not an outer corner");
    auto m = T.filling().entries;
    Cell vac = detail::outer_slide_map(m, corner);
    SkewShape nsh{sh.outer.with_cell(corner.first, corner.second),
                  sh.inner.with_cell(vac.first, vac.second)};
    return {ShiftedTableau(Filling(nsh, std::move(m)), T.n()), vac};
}

// Rectification. The order may be given as the inner corners to use (each a
// removable cell of the current inner shape); default picks the bottommost.
inline std::pair<ShiftedTableau, SlideRecord>
rectify(const ShiftedTableau& T, const std::vector<Cell>* order = nullptr) {
    ShiftedTableau cur = T;
    SlideRecord rec;
    size_t k = 0;
    while (!cur.shape().inner.empty()) {
        Cell corner;
        if (order) {
            if (k >= order->size()) throw std::invalid_argument("rectify: order too short");
            corner = (*order)[k++];
        } else {
            corner = cur.shape().inner.removable_cells().back(); // bottommost
        }
        auto [next, vac] = inner_slide(cur, corner);
        rec.push_back({vac, SlideStep::Inner});
        cur = next;
    }
    if (order && k != order->size()) throw std::invalid_argument("rectify: order too long");
    return {cur, rec};
}

// Encodes a standard tableau of the inner shape as a rectification order:
// slides are performed at its cells in decreasing entry order.
inline std::vector<Cell> order_from_standard(const ShiftedTableau& U) {
    if (!U.is_standard() || !U.shape().is_straight())
        throw std::invalid_argument("order_from_standard: need a straight standard tableau");
    std::vector<Cell> out(U.num_cells());
    for (auto& [cell, x] : U.filling().entries) out[U.num_cells() - x.value] = cell;
    return out;
}

inline ShiftedTableau rect(const ShiftedTableau& T) { return rectify(T).first; }

// c_n: reflect along the anti-diagonal of the staircase (lambda_1, ..., 1),
// value v -> n+1-v with the prime toggled, then canonicalize.
inline ShiftedTableau complement(const ShiftedTableau& T, int n) {
    auto& sh = T.shape();
    int w = sh.outer.part(1);
    std::map<Cell, Letter> e;
    for (auto& [cell, x] : T.filling().entries) {
        Cell img{w - cell.second + 1, w - cell.first + 1};
        e[img] = Letter(n + 1 - x.value, !x.primed);
    }
    SkewShape nsh{complement_shape(sh.inner, w), complement_shape(sh.outer, w)};
    return ShiftedTableau(Filling(nsh, std::move(e)), n);
}

// Any word is the reading word of an anti-diagonal tableau: letter k of w
// (1-based, k = 1..m) sits alone in row m-k+1 at column m+k-1... laid out so
// rows bottom-to-top spell w with no two cells in adjacent columns.
inline ShiftedTableau word_tableau(const Word& w, int n) {
    int m = w.length();
    if (m == 0) return ShiftedTableau(Filling(SkewShape{}, {}), n);
    std::vector<int> outer, inner;
    for (int i = 1; i <= m; ++i) {
        outer.push_back(2 * (m - i) + 1); // cell of row i at column 2m - i
        if (i < m) inner.push_back(2 * (m - i));
    }
    std::map<Cell, Letter> e;
    for (int i = 1; i <= m; ++i) e[{i, 2 * m - i}] = w.letters[m - i];
    return ShiftedTableau(Filling(SkewShape{StrictPartition(outer), StrictPartition(inner)}, std::move(e)), n);
}

inline ShiftedTableau rect_of_word(const Word& w, int n) { return rect(word_tableau(w, n)); }

inline bool knuth_equivalent(const Word& u, const Word& v, int n) {
    return rect_of_word(u, n) == rect_of_word(v, n);
}

// All single shifted-Knuth-move neighbours of u (moves (1)-(4), letters
// compared through the standardization order of their occurrences).
inline std::vector<Word> knuth_moves(const Word& u) {
    std::vector<Word> out;
    auto add = [&](Letters w) {
        Word cand{std::move(w)};
        if (cand != u) out.push_back(std::move(cand));
    };
    const Letters& w = u.letters;
    int m = (int)w.size();
    // standardization numbers per position
    std::vector<int> s(m);
    {
        auto order = standardization_positions(w);
        for (int k = 0; k < m; ++k) s[order[k]] = k + 1;
    }
    for (int p = 0; p + 2 < m; ++p) {
        int x = s[p], y = s[p + 1], z = s[p + 2];
        // (1) bac <-> bca : swap the last two
        if ((y < x && x < z) || (z < x && x < y)) {
            Letters v = w;
            std::swap(v[p + 1], v[p + 2]);
            add(std::move(v));
        }
        // (2) acb <-> cab : swap the first two
        if ((x < z && z < y) || (y < z && z < x)) {
            Letters v = w;
            std::swap(v[p], v[p + 1]);
            add(std::move(v));
        }
    }
    if (m >= 2) {
        { // (3) ab <-> ba on the first two letters
            Letters v = w;
            std::swap(v[0], v[1]);
            add(std::move(v));
        }
        if (w[0].value == w[1].value) { // (4) aa <-> aa' on the first two letters
            Letters v = w;
            v[1].primed = !v[1].primed;
            add(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Dual equivalence, tested exhaustively: same shape and, for every
// rectification order (standard tableau of the inner shape), identical
// slide-by-slide shape traces.
inline bool dual_equivalent(const ShiftedTableau& S, const ShiftedTableau& T, int max_cells = 8) {
    if (S.shape() != T.shape()) return false;
    if (S.num_cells() > max_cells)
        throw std::invalid_argument("dual_equivalent: size above configured bound");
    if (S.shape().is_straight()) return true;
    for (auto& U : standard_tableaux(SkewShape{S.shape().inner, StrictPartition()})) {
        auto order = order_from_standard(U);
        ShiftedTableau a = S, b = T;
        for (Cell corner : order) {
            auto [a2, va] = inner_slide(a, corner);
            auto [b2, vb] = inner_slide(b, corner);
            if (a2.shape() != b2.shape()) return false;
            a = a2;
            b = b2;
        }
    }
    return true;
}

inline bool is_ballot(const Word& w) {
    auto nu = weight(w);
    for (size_t k = 0; k + 1 < nu.size(); ++k)
        if (nu[k] <= nu[k + 1]) return false;
    if (!nu.empty() && nu.back() == 0) {
        while (!nu.empty() && nu.back() == 0) nu.pop_back();
    }
    int n = (int)nu.size();
    if (n == 0) return w.length() == 0;
    return rect_of_word(w, n) == yamanouchi(StrictPartition(nu), n);
}

inline bool is_LRS(const ShiftedTableau& T) {
    auto nu = T.wt();
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    for (size_t k = 0; k + 1 < nu.size(); ++k)
        if (nu[k] <= nu[k + 1]) return false;
    if (nu.empty()) return T.num_cells() == 0;
    StrictPartition p(nu);
    return rect(T) == yamanouchi(p, T.n());
}

// f^lambda_{mu,nu}: LRS tableaux of shape lambda/mu and weight nu.
inline long long lr_coefficient(const StrictPartition& lambda, const StrictPartition& mu,
                                const StrictPartition& nu, bool* size_mismatch = nullptr) {
    if (size_mismatch) *size_mismatch = false;
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu)) {
        if (size_mismatch) *size_mismatch = true;
        return 0;
    }
    long long cnt = 0;
    for (auto& T : enumerate_by_weight(SkewShape{lambda, mu}, nu.parts))
        if (is_LRS(T)) ++cnt;
    return cnt;
}

} // namespace shtab
