#pragma once

// Evacuation (rect-complement route and the neg/switch/d_n algorithm),
// the skew tilde-evac variants, Haiman reversal (slide-replay route and
// switching route), partial Schuetzenberger involutions eta_{i,j} and the
// reflection operators sigma_i.

#include "switching.hpp"

namespace shtab {

namespace detail {

// The neg/switch/d_n evacuation engine over the signed alphabet
// -[n]' ⊔ [n]' (Figs. 6/7). Works on straight and skew shapes alike.
inline Filling tilde_evac_engine(const Filling& f, int n, std::vector<std::string>* log = nullptr) {
    SwitchState st = state_of(f, 1);
    for (int k = 1; k <= n; ++k) {
        // neg_k: negate the k-strip
        for (auto& [cell, box] : st)
            if (box.strip == StripId{1, k}) {
                box.strip = {1, -k};
                box.letter.value = -k;
            }
        if (log) log->push_back("neg" + std::to_string(k));
        for (int b = k + 1; b <= n; ++b)
            run_sp(st, {1, -k}, {1, b}, log);
    }
    // d_n: un-negate, reverse the alphabet, canonicalize
    std::map<Cell, Letter> e;
    for (auto& [cell, box] : st) {
        int v = -box.letter.value;
        if (v < 1) throw std::logic_error("tilde_evac_engine: positive letter survived");
        e[cell] = Letter(n + 1 - v, box.letter.primed);
    }
    if (log) log->push_back("d" + std::to_string(n));
    Filling out(f.shape, std::move(e));
    out.canonicalize();
    return out;
}

// Shift all letter values by delta (alphabet reindexing for strip unions).
inline Filling shift_values(Filling f, int delta) {
    for (auto& [cell, x] : f.entries) x.value += delta;
    return f;
}

// Replace the letters of T at the cells of `middle` by middle's letters.
inline ShiftedTableau glue_replace(const ShiftedTableau& T, const ShiftedTableau& middle) {
    auto e = T.filling().entries;
    for (auto& [cell, x] : middle.filling().entries) e.at(cell) = x;
    return ShiftedTableau(Filling(T.shape(), std::move(e)), T.n());
}

} // namespace detail

// tilde-evac: the Fig. 6/7 algorithm on any shape, full alphabet [n]'.
inline ShiftedTableau tilde_evac(const ShiftedTableau& T, std::vector<std::string>* log = nullptr) {
    return ShiftedTableau(detail::tilde_evac_engine(T.filling(), T.n(), log), T.n());
}

// evac on straight shapes: both routes computed and asserted equal.
inline ShiftedTableau evac(const ShiftedTableau& T) {
    if (!T.shape().is_straight())
        throw std::invalid_argument("evac: input must be straight-shaped (use tilde_evac)");
    ShiftedTableau a = rect(complement(T, T.n()));
    ShiftedTableau b = tilde_evac(T);
    if (a != b) throw std::logic_error("evac: the two evacuation algorithms disagree");
    return a;
}

// tilde-evac_k: tilde-evac applied to T^{1,k}, other strips untouched.
inline ShiftedTableau tilde_evac_k(const ShiftedTableau& T, int k) {
    if (k < 1 || k > T.n()) throw std::invalid_argument("tilde_evac_k: k out of range");
    ShiftedTableau sub = restrict(T, 1, k);
    Filling ev = detail::tilde_evac_engine(sub.filling(), k);
    return detail::glue_replace(T, ShiftedTableau(std::move(ev), T.n()));
}

inline ShiftedTableau evac_k(const ShiftedTableau& T, int k) {
    if (!T.shape().is_straight())
        throw std::invalid_argument("evac_k: input must be straight-shaped (use tilde_evac_k)");
    return tilde_evac_k(T, k);
}

// tilde-evac_{i,j}: T^{1,i-1} ⊔ tilde-evac(T^{i,j}) ⊔ T^{j+1,n}.
inline ShiftedTableau tilde_evac_ij(const ShiftedTableau& T, int i, int j) {
    if (i < 1 || j > T.n() || i > j) throw std::invalid_argument("tilde_evac_ij: bad range");
    ShiftedTableau sub = restrict(T, i, j);
    int m = j - i + 1;
    Filling down = detail::shift_values(sub.filling(), -(i - 1));
    Filling ev = detail::tilde_evac_engine(down, m);
    Filling back = detail::shift_values(ev, i - 1);
    return detail::glue_replace(T, ShiftedTableau(std::move(back), T.n()));
}

// Haiman reversal T^e, slide-replay route: rectify recording the vacated
// corners, evacuate, then outer slides at the recorded corners in reverse.
inline ShiftedTableau reversal_via_slides(const ShiftedTableau& T) {
    auto [R, rec] = rectify(T);
    ShiftedTableau cur = evac(R);
    for (auto it = rec.rbegin(); it != rec.rend(); ++it)
        cur = outer_slide(cur, it->cell).first;
    if (cur.shape() != T.shape()) throw std::logic_error("reversal: replay did not restore the shape");
    return cur;
}

// Switching route: with U a standard filler of the inner shape,
// SW(evac(rect T), SW2(U,T)) = (U', T^e). Result is U-independent.
inline ShiftedTableau reversal_via_switching(const ShiftedTableau& T, const ShiftedTableau* filler = nullptr) {
    ShiftedTableau U = filler ? *filler : [&] {
        // row-reading standard filler of the inner shape
        StrictPartition mu = T.shape().inner;
        std::map<Cell, Letter> e;
        int k = 0;
        for (auto& cell : mu.cells()) e[cell] = Letter(++k, false);
        return ShiftedTableau(Filling(SkewShape{mu, StrictPartition()}, std::move(e)), std::max(k, 1));
    }();
    ShiftedTableau Wp = sw(U, T).second;
    ShiftedTableau E = evac(rect(T));
    return sw(E, Wp).second;
}

inline ShiftedTableau reversal(const ShiftedTableau& T) {
    ShiftedTableau a = reversal_via_slides(T);
    ShiftedTableau b = reversal_via_switching(T);
    if (a != b) throw std::logic_error("reversal: the two reversal algorithms disagree");
    return a;
}

// eta: evacuation on straight shapes, reversal on skew shapes (they agree on
// straight shapes, so reversal serves both).
inline ShiftedTableau eta(const ShiftedTableau& T) { return reversal(T); }

// eta_{i,j}: reversal of the strip union T^{i,j} in the alphabet i..j,
// strips outside [i,j] fixed.
inline ShiftedTableau eta_ij(const ShiftedTableau& T, int i, int j) {
    if (i < 1 || j > T.n() || i > j) throw std::invalid_argument("eta_ij: bad range");
    ShiftedTableau sub = restrict(T, i, j);
    int m = j - i + 1;
    Filling down = detail::shift_values(sub.filling(), -(i - 1));
    ShiftedTableau R = eta(ShiftedTableau(std::move(down), m));
    Filling back = detail::shift_values(R.filling(), i - 1);
    return detail::glue_replace(T, ShiftedTableau(std::move(back), T.n()));
}

// sigma_i = eta_{i,i+1}: the shifted crystal reflection operator.
inline ShiftedTableau sigma(const ShiftedTableau& T, int i) {
    if (i < 1 || i + 1 > T.n()) throw std::invalid_argument("sigma: i out of range");
    return eta_ij(T, i, i + 1);
}

// Applies sigma_{i_1} ... sigma_{i_k} for a word of theta_{1,n} (rightmost
// factor first); the defining theorem makes this equal eta on LRS input.
inline ShiftedTableau theta_longest_action(const ShiftedTableau& T_high,
                                           const std::vector<int>* word = nullptr) {
    if (!is_LRS(T_high)) throw std::invalid_argument("theta_longest_action: input is not LRS");
    int n = T_high.n();
    std::vector<int> w;
    if (word) {
        w = *word;
    } else {
        for (int a = 1; a < n; ++a)
            for (int b = a; b >= 1; --b) w.push_back(b);
    }
    Permutation prod = Permutation::identity(n);
    for (int i : w) prod = Permutation::compose(prod, Permutation::theta(i, n));
    if (!(prod == Permutation::theta_range(1, n, n)))
        throw std::invalid_argument("theta_longest_action: word is not a word for theta_{1,n}");
    ShiftedTableau cur = T_high;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = sigma(cur, *it);
    return cur;
}

} // namespace shtab
