#pragma once

// Shifted tableau switching: perforated pairs, the switches S1-S7, the SP and
// SW algorithms, the raw-filling operators SP_{i,j} / SW_{k|...}, and type C
// infusion on standard tableaux.

#include <optional>
#include <set>

#include "jdt.hpp"
#include "tableau.hpp"

namespace shtab {

// A strip is identified by (owner, value); owner distinguishes the two
// tableaux in SW (0 = inner/S, 1 = outer/T). Within one tableau owner is 1.
using StripId = std::pair<int, int>;

struct SwitchBox {
    StripId strip;
    Letter letter;
};

using SwitchState = std::map<Cell, SwitchBox>;

namespace detail {

inline bool is_strip(const SwitchState& st, Cell c, StripId s) {
    auto it = st.find(c);
    return it != st.end() && it->second.strip == s;
}

// Selects the box to switch for the pair (a, b): the rightmost unprimed
// a-box adjacent (north or west) to a b-box, else the bottommost primed one.
inline std::optional<Cell> select_box(const SwitchState& st, StripId a, StripId b) {
    std::optional<Cell> best_unprimed, best_primed;
    for (auto& [cell, box] : st) {
        if (box.strip != a) continue;
        auto [r, c] = cell;
        if (!is_strip(st, {r, c + 1}, b) && !is_strip(st, {r + 1, c}, b)) continue;
        if (!box.letter.primed) {
            if (!best_unprimed || cell.second > best_unprimed->second) best_unprimed = cell;
        } else {
            if (!best_primed || cell.first > best_primed->first) best_primed = cell;
        }
    }
    return best_unprimed ? best_unprimed : best_primed;
}

// Applies the unique applicable switch at the selected box; returns its name
// ("S1".."S7"), or nullopt when the pair is fully switched.
inline std::optional<std::string> switch_step(SwitchState& st, StripId a, StripId b) {
    auto sel = select_box(st, a, b);
    if (!sel) return std::nullopt;
    auto [r, c] = *sel;
    Cell X{r, c}, E{r, c + 1}, S{r + 1, c}, W{r, c - 1}, D{r + 1, c + 1};
    bool bE = is_strip(st, E, b), bS = is_strip(st, S, b);

    if (bE && bS && st.at(E).letter.primed) { // S5: swap with the east b'
        std::swap(st.at(X), st.at(E));
        return "S5";
    }
    // S4/S7: box at (r,r+1) with bold-b south on the diagonal and bold-a west
    if (bS && S.first == S.second && is_strip(st, W, a) && !st.at(X).letter.primed) {
        SwitchBox boldA = st.at(W), boldB = st.at(S), plainA = st.at(X);
        plainA.letter.primed = true;
        st[W] = boldB;
        st[X] = plainA;
        st[S] = boldA;
        return bE ? "S7" : "S4";
    }
    if (bE && bS) {
        if (st.at(E).letter.primed) { // S5: swap with the east b'
            std::swap(st.at(X), st.at(E));
            return "S5";
        }
        std::swap(st.at(X), st.at(S)); // S6: swap with the south bold-b
        return "S6";
    }
    if (bS) { // S2
        std::swap(st.at(X), st.at(S));
        return "S2";
    }
    // unique east b-box
    if (r == c && st.at(E).letter.primed && is_strip(st, D, b)) { // S3 on the diagonal
        SwitchBox boldA = st.at(X), bprime = st.at(E), boldB = st.at(D);
        bprime.letter.primed = false;
        st[X] = boldB;
        st[E] = bprime;
        st[D] = boldA;
        return "S3";
    }
    std::swap(st.at(X), st.at(E)); // S1
    return "S1";
}

// Runs switch_step to the fully-switched state; optionally logs switch names.
inline void run_sp(SwitchState& st, StripId a, StripId b, std::vector<std::string>* log = nullptr) {
    while (auto name = switch_step(st, a, b))
        if (log) log->push_back(*name);
}

inline SwitchState state_of(const ShiftedTableau& T, int owner) {
    SwitchState st;
    for (auto& [cell, x] : T.filling().entries) st[cell] = SwitchBox{{owner, x.value}, x};
    return st;
}

inline SwitchState state_of(const Filling& f, int owner) {
    SwitchState st;
    for (auto& [cell, x] : f.entries) st[cell] = SwitchBox{{owner, x.value}, x};
    return st;
}

inline std::vector<int> strip_values(const SwitchState& st, int owner) {
    std::set<int> vals;
    for (auto& [cell, box] : st)
        if (box.strip.first == owner) vals.insert(box.strip.second);
    return {vals.begin(), vals.end()};
}

} // namespace detail

// A perforated (a,b)-pair on a double border strip.
struct PerforatedPair {
    SkewShape shape;
    std::map<Cell, Letter> A, B; // disjoint, covering the shape's cells
    int value_a = 0, value_b = 0;

    PerforatedPair(SkewShape sh, std::map<Cell, Letter> a, std::map<Cell, Letter> b,
                   int va, int vb)
        : shape(std::move(sh)), A(std::move(a)), B(std::move(b)), value_a(va), value_b(vb) {
        validate();
    }

    void validate() const {
        for (auto& cells : shape.cells())
            if (A.count(cells) + B.count(cells) != 1)
                throw std::invalid_argument("PerforatedPair: A,B must partition the shape");
        if ((int)A.size() + (int)B.size() != shape.num_cells())
            throw std::invalid_argument("PerforatedPair: stray cells");
        for (auto& c : shape.cells())
            if (shape.has_cell(c.first + 1, c.second + 1) && shape.has_cell(c.first + 2, c.second + 2))
                throw std::invalid_argument("PerforatedPair: not a double border strip");
        check_perforated(A, value_a);
        check_perforated(B, value_b);
    }

    static void check_perforated(const std::map<Cell, Letter>& P, int v) {
        int diag = 0;
        for (auto& [cell, x] : P) {
            if (x.value != v) throw std::invalid_argument("PerforatedPair: wrong letter value");
            if (cell.first == cell.second) ++diag;
        }
        if (diag > 1) throw std::invalid_argument("PerforatedPair: two boxes on the main diagonal");
        for (auto& [c1, x1] : P)
            if (!x1.primed)
                for (auto& [c2, x2] : P)
                    if (x2.primed && c2.first >= c1.first && c2.second >= c1.second)
                        throw std::invalid_argument("PerforatedPair: primed box south-east of unprimed");
    }

    bool fully_switched() const {
        auto st = to_state();
        return !detail::select_box(st, {0, value_a}, {1, value_b}).has_value();
    }

    SwitchState to_state() const {
        SwitchState st;
        for (auto& [cell, x] : A) st[cell] = SwitchBox{{0, value_a}, x};
        for (auto& [cell, x] : B) st[cell] = SwitchBox{{1, value_b}, x};
        return st;
    }

    static PerforatedPair from_state(const SwitchState& st, const SkewShape& sh, int va, int vb) {
        std::map<Cell, Letter> a, b;
        for (auto& [cell, box] : st)
            (box.strip.first == 0 ? a : b)[cell] = box.letter;
        return PerforatedPair(sh, std::move(a), std::move(b), va, vb);
    }

    friend bool operator==(const PerforatedPair& x, const PerforatedPair& y) {
        return x.shape == y.shape && x.A == y.A && x.B == y.B;
    }
};

// One application of the switch map; no-op (flagged via returned name) when
// fully switched.
inline std::pair<PerforatedPair, std::optional<std::string>> switch_step(const PerforatedPair& P) {
    auto st = P.to_state();
    auto name = detail::switch_step(st, {0, P.value_a}, {1, P.value_b});
    return {PerforatedPair::from_state(st, P.shape, P.value_a, P.value_b), name};
}

// SP(A,B): iterate to the least fully switched state and split by letter.
inline std::pair<std::map<Cell, Letter>, std::map<Cell, Letter>>
sp(const PerforatedPair& P, std::vector<std::string>* log = nullptr) {
    auto st = P.to_state();
    detail::run_sp(st, {0, P.value_a}, {1, P.value_b}, log);
    std::map<Cell, Letter> spB, spA; // SP1 carries the b's, SP2 the a's
    for (auto& [cell, box] : st)
        (box.strip.first == 1 ? spB : spA)[cell] = box.letter;
    return {spB, spA};
}

// SW(S,T) for T extending S; returns (SW1, SW2) with SW1 of shape gamma/nu
// Knuth-equivalent to T, SW2 of shape lambda/gamma Knuth-equivalent to S.
inline std::pair<ShiftedTableau, ShiftedTableau>
sw(const ShiftedTableau& S, const ShiftedTableau& T, std::vector<std::string>* log = nullptr) {
    if (T.shape().inner != S.shape().outer)
        throw std::invalid_argument("sw: T does not extend S");
    auto st = detail::state_of(S, 0);
    for (auto& [cell, box] : detail::state_of(T, 1)) st[cell] = box;
    auto svals = detail::strip_values(st, 0);
    auto tvals = detail::strip_values(st, 1);
    for (auto a = svals.rbegin(); a != svals.rend(); ++a)
        for (int b : tvals)
            detail::run_sp(st, {0, *a}, {1, b}, log);
    std::vector<Cell> tcells;
    std::map<Cell, Letter> te, se;
    for (auto& [cell, box] : st) {
        if (box.strip.first == 1) {
            tcells.push_back(cell);
            te[cell] = box.letter;
        } else {
            se[cell] = box.letter;
        }
    }
    StrictPartition nu = S.shape().inner;
    StrictPartition gamma = shape_from_cells(nu, tcells);
    ShiftedTableau SW1(Filling(SkewShape{gamma, nu}, std::move(te)), T.n());
    ShiftedTableau SW2(Filling(SkewShape{T.shape().outer, gamma}, std::move(se)), S.n());
    return {SW1, SW2};
}

// SP_{i,j}(T): switch strip i (role a) past strip j (role b) inside T,
// leaving other strips fixed. The result is a raw filling in general.
inline Filling sp_ij(const Filling& f, int i, int j, std::vector<std::string>* log = nullptr) {
    auto st = detail::state_of(f, 1);
    detail::run_sp(st, {1, i}, {1, j}, log);
    std::map<Cell, Letter> e;
    for (auto& [cell, box] : st) e[cell] = box.letter;
    return Filling(f.shape, std::move(e));
}

inline Filling sp_ij(const ShiftedTableau& T, int i, int j, std::vector<std::string>* log = nullptr) {
    return sp_ij(T.filling(), i, j, log);
}

// SW_{k | j1,...,jl}(T) = SP_{k,jl} ... SP_{k,j1}(T).
inline Filling sw_given(const ShiftedTableau& T, int k, const std::vector<int>& targets,
                        std::vector<std::string>* log = nullptr) {
    Filling f = T.filling();
    for (int j : targets) f = sp_ij(f, k, j, log);
    return f;
}

// Type C infusion on standard tableaux: slide T through S's cells in
// decreasing entry order, recording S's entries on the vacated corners.
inline std::pair<ShiftedTableau, ShiftedTableau>
infusion(const ShiftedTableau& S, const ShiftedTableau& T) {
    if (!S.is_standard() || !T.is_standard())
        throw std::invalid_argument("infusion: inputs must be standard");
    if (T.shape().inner != S.shape().outer)
        throw std::invalid_argument("infusion: T does not extend S");
    std::vector<Cell> pos(S.num_cells() + 1);
    for (auto& [cell, x] : S.filling().entries) pos[x.value] = cell;
    ShiftedTableau cur = T;
    std::map<Cell, Letter> rec;
    for (int m = S.num_cells(); m >= 1; --m) {
        auto [next, vac] = inner_slide(cur, pos[m]);
        rec[vac] = Letter(m, false);
        cur = next;
    }
    SkewShape recsh{T.shape().outer, cur.shape().outer};
    ShiftedTableau Y(Filling(recsh, std::move(rec)), S.n());
    return {cur, Y};
}

// SW via standardization: (sstd x sstd) after infusion after (std x std).
inline std::pair<ShiftedTableau, ShiftedTableau>
sw_via_infusion(const ShiftedTableau& S, const ShiftedTableau& T) {
    auto nuS = S.wt(), nuT = T.wt();
    auto [X, Y] = infusion(standardize(S), standardize(T));
    auto X2 = semistandardize(X, nuT);
    auto Y2 = semistandardize(Y, nuS);
    if (!X2 || !Y2) throw std::runtime_error("sw_via_infusion: semistandardization undefined");
    return {*X2, *Y2};
}

} // namespace shtab
