#pragma once

// Shifted semistandard tableaux in canonical form: fillings of skew shifted
// shapes over [n]' with weakly increasing rows/columns, at most one i per
// column and one i' per row, reading word (rows bottom to top) canonical.

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "word.hpp"

namespace shtab {

// A bare filling: shape plus one letter per cell. Carries no validity
// promises; switching/Bender-Knuth intermediates live here.
struct Filling {
    SkewShape shape;
    std::map<Cell, Letter> entries;

    Filling() = default;
    Filling(SkewShape sh, std::map<Cell, Letter> e) : shape(std::move(sh)), entries(std::move(e)) {
        for (auto& [cell, x] : entries)
            if (!shape.has_cell(cell.first, cell.second))
                throw std::invalid_argument("Filling: entry outside shape");
        if ((int)entries.size() != shape.num_cells())
            throw std::invalid_argument("Filling: missing entries");
    }

    const Letter& at(int r, int c) const { return entries.at({r, c}); }
    const Letter* find(int r, int c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? nullptr : &it->second;
    }

    // Cells in reading-word order: rows bottom to top, left to right.
    std::vector<Cell> reading_cells() const {
        std::vector<Cell> out;
        for (int r = shape.outer.length(); r >= 1; --r)
            for (int c = shape.row_begin(r); c <= shape.row_end(r); ++c) out.push_back({r, c});
        return out;
    }

    Letters reading_letters() const {
        Letters out;
        for (auto& cell : reading_cells()) out.push_back(entries.at(cell));
        return out;
    }

    // Unprime the leftmost reading-word occurrence of each value.
    void canonicalize() {
        std::map<int, bool> seen;
        for (auto& cell : reading_cells()) {
            Letter& x = entries.at(cell);
            if (!seen[x.value]) {
                seen[x.value] = true;
                x.primed = false;
            }
        }
    }

    friend bool operator==(const Filling& a, const Filling& b) {
        return a.shape == b.shape && a.entries == b.entries;
    }
    friend bool operator!=(const Filling& a, const Filling& b) { return !(a == b); }
    friend bool operator<(const Filling& a, const Filling& b) {
        if (a.shape != b.shape) return a.shape < b.shape;
        auto ka = a.reading_letters(), kb = b.reading_letters();
        return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
    }
};

// Returns an empty string when valid, else a message naming rule and cell.
inline std::string semistandard_violation(const Filling& f, int n = 0) {
    auto& sh = f.shape;
    for (auto& [cell, x] : f.entries) {
        if (x.value < 1) return "letter value not positive at (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ")";
        if (n > 0 && x.value > n) return "letter above alphabet bound at (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ")";
    }
    for (int r = 1; r <= sh.outer.length(); ++r)
        for (int c = sh.row_begin(r); c < sh.row_end(r); ++c)
            if (f.at(r, c) > f.at(r, c + 1))
                return "row not weakly increasing at (" + std::to_string(r) + "," + std::to_string(c) + ")";
    for (auto& [cell, x] : f.entries) {
        auto below = f.find(cell.first + 1, cell.second);
        if (below && x > *below)
            return "column not weakly increasing at (" + std::to_string(cell.first) + "," + std::to_string(cell.second) + ")";
    }
    // one i per column / one i' per row
    std::map<std::pair<int, int>, int> col_unprimed, row_primed; // (col,value) / (row,value)
    for (auto& [cell, x] : f.entries) {
        if (!x.primed && ++col_unprimed[{cell.second, x.value}] > 1)
            return "repeated unprimed " + std::to_string(x.value) + " in column " + std::to_string(cell.second);
        if (x.primed && ++row_primed[{cell.first, x.value}] > 1)
            return "repeated primed " + std::to_string(x.value) + " in row " + std::to_string(cell.first);
    }
    return "";
}

class ShiftedTableau {
public:
    ShiftedTableau() = default;

    // Validates and canonicalizes. Throws std::invalid_argument on failure.
    ShiftedTableau(Filling f, int n) : f_(std::move(f)), n_(n) {
        f_.canonicalize();
        auto err = semistandard_violation(f_, n_);
        if (!err.empty()) throw std::invalid_argument("ShiftedTableau: " + err);
    }

    static ShiftedTableau build(const SkewShape& shape, const std::vector<Letters>& rows, int n) {
        std::map<Cell, Letter> e;
        int nrows = shape.outer.length();
        if ((int)rows.size() != nrows) throw std::invalid_argument("build: wrong number of rows");
        for (int r = 1; r <= nrows; ++r) {
            int len = shape.row_end(r) - shape.row_begin(r) + 1;
            if ((int)rows[r - 1].size() != len)
                throw std::invalid_argument("build: row " + std::to_string(r) + " has wrong length");
            for (int k = 0; k < len; ++k) e[{r, shape.row_begin(r) + k}] = rows[r - 1][k];
        }
        return ShiftedTableau(Filling(shape, std::move(e)), n);
    }

    const Filling& filling() const { return f_; }
    const SkewShape& shape() const { return f_.shape; }
    int n() const { return n_; }
    int num_cells() const { return f_.shape.num_cells(); }
    const Letter& at(int r, int c) const { return f_.at(r, c); }
    const Letter* find(int r, int c) const { return f_.find(r, c); }

    Word reading_word() const { return Word(f_.reading_letters()); }
    std::vector<int> wt() const { return weight(f_.reading_letters(), n_); }

    bool is_standard() const {
        auto w = wt();
        for (int k = 0; k < num_cells(); ++k)
            if (k >= (int)w.size() || w[k] != 1) return false;
        for (size_t k = num_cells(); k < w.size(); ++k)
            if (w[k] != 0) return false;
        return true;
    }

    // Cells holding value v (the v-th border strip T^v when nonempty).
    std::vector<Cell> strip_cells(int v) const {
        std::vector<Cell> out;
        for (auto& [cell, x] : f_.entries)
            if (x.value == v) out.push_back(cell);
        return out;
    }

    friend bool operator==(const ShiftedTableau& a, const ShiftedTableau& b) { return a.f_ == b.f_; }
    friend bool operator!=(const ShiftedTableau& a, const ShiftedTableau& b) { return !(a == b); }
    friend bool operator<(const ShiftedTableau& a, const ShiftedTableau& b) { return a.f_ < b.f_; }

private:
    Filling f_;
    int n_ = 0;
};

// T^{i,j}: the sub-tableau on letters i..j, as a skew tableau over the same
// alphabet. Values in a row increase, so the strip cells are row-contiguous.
inline ShiftedTableau restrict(const ShiftedTableau& T, int i, int j) {
    if (i > j) throw std::invalid_argument("restrict: i > j");
    auto& sh = T.shape();
    std::vector<int> in_parts, out_parts;
    std::map<Cell, Letter> e;
    int nrows = sh.outer.length();
    for (int r = 1; r <= nrows; ++r) {
        int first = sh.row_end(r) + 1, last = sh.row_begin(r) - 1;
        for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) {
            int v = T.at(r, c).value;
            if (v >= i && v <= j) {
                first = std::min(first, c);
                last = std::max(last, c);
                e[{r, c}] = T.at(r, c);
            }
        }
        if (first > last) { // empty row: inner = outer = everything with value < i
            int cut = sh.row_begin(r);
            while (cut <= sh.row_end(r) && T.at(r, cut).value < i) ++cut;
            in_parts.push_back(cut - r);
            out_parts.push_back(cut - r);
        } else {
            in_parts.push_back(first - r);
            out_parts.push_back(last - r + 1);
        }
    }
    while (!out_parts.empty() && out_parts.back() == 0) { out_parts.pop_back(); in_parts.pop_back(); }
    while (!in_parts.empty() && in_parts.back() == 0) in_parts.pop_back();
    SkewShape sub{StrictPartition(out_parts), StrictPartition(in_parts)};
    return ShiftedTableau(Filling(sub, std::move(e)), T.n());
}

inline ShiftedTableau border_strip(const ShiftedTableau& T, int i) {
    auto S = restrict(T, i, i);
    // border strip condition: no {(r,c),(r+1,c+1)} both present
    for (auto& [cell, x] : S.filling().entries)
        if (S.find(cell.first + 1, cell.second + 1))
            throw std::invalid_argument("border_strip: strip is not a border strip");
    return S;
}

// Relabel letters by a permutation of [n] and recanonicalize; result may be
// any filling (validity is the caller's concern).
inline Filling apply_permutation(const Permutation& tau, Filling f) {
    for (auto& [cell, x] : f.entries) x = tau(x);
    f.canonicalize();
    return f;
}

inline ShiftedTableau apply_permutation(const Permutation& tau, const ShiftedTableau& T) {
    return ShiftedTableau(apply_permutation(tau, T.filling()), T.n());
}

// std(T): entries replaced by their standardization numbers.
inline ShiftedTableau standardize(const ShiftedTableau& T) {
    auto cells = T.filling().reading_cells();
    auto order = standardization_positions(T.filling().reading_letters());
    std::map<Cell, Letter> e;
    for (int k = 0; k < (int)order.size(); ++k) e[cells[order[k]]] = Letter(k + 1, false);
    return ShiftedTableau(Filling(T.shape(), std::move(e)), T.num_cells());
}

// sstd_nu(T) for standard T; nullopt when nu is inadmissible for T.
inline std::optional<ShiftedTableau> semistandardize(const ShiftedTableau& T, const std::vector<int>& nu) {
    if (!T.is_standard()) throw std::invalid_argument("semistandardize: input not standard");
    int m = T.num_cells(), total = 0;
    for (int x : nu) total += x;
    if (total != m) throw std::invalid_argument("semistandardize: |nu| != number of cells");
    std::vector<int> block(m + 1, 0); // block[i] = k with i in P_k(nu)
    {
        int i = 1;
        for (int k = 1; k <= (int)nu.size(); ++k)
            for (int c = 0; c < nu[k - 1]; ++c) block[i++] = k;
    }
    std::vector<Cell> pos(m + 1);
    for (auto& [cell, x] : T.filling().entries) pos[x.value] = cell;
    std::map<Cell, Letter> e;
    for (int i = 1; i <= m; ++i) {
        bool primed = false;
        for (int j = i + 1; j <= m && !primed; ++j)
            if (block[j] == block[i] && pos[j].first > pos[i].first && pos[j].second <= pos[i].second)
                primed = true; // some k_j with i<j strictly south, weakly west
        e[pos[i]] = Letter(block[i], primed);
    }
    Filling f(T.shape(), std::move(e));
    if (!semistandard_violation(f).empty()) return std::nullopt;
    Filling canon = f;
    canon.canonicalize();
    if (canon != f) return std::nullopt; // obtained filling must already be canonical
    return ShiftedTableau(std::move(f), (int)nu.size());
}

// Y_nu: row i filled with unprimed i.
inline ShiftedTableau yamanouchi(const StrictPartition& nu, int n) {
    std::map<Cell, Letter> e;
    for (auto& [r, c] : nu.cells()) e[{r, c}] = Letter(r, false);
    return ShiftedTableau(Filling(SkewShape(nu, StrictPartition()), std::move(e)), n);
}

// Enumerates every canonical tableau of the shape over [n]', row-major
// lexicographic in the letter order. weight_cap, when given, bounds (and at
// the leaf pins) the weight.
inline void enumerate(const SkewShape& shape, int n,
                      const std::function<void(const ShiftedTableau&)>& emit,
                      const std::vector<int>* weight_cap = nullptr) {
    auto cells = shape.cells();
    std::map<Cell, Letter> cur;
    std::vector<int> count(n + 1, 0);
    std::vector<Letter> alphabet;
    for (int v = 1; v <= n; ++v) {
        alphabet.push_back(Letter(v, true));
        alphabet.push_back(Letter(v, false));
    }

    std::function<void(size_t)> go = [&](size_t k) {
        if (k == cells.size()) {
            if (weight_cap) {
                for (int v = 1; v <= n; ++v)
                    if (count[v] != (v <= (int)weight_cap->size() ? (*weight_cap)[v - 1] : 0)) return;
            }
            Filling f(shape, cur);
            Filling canon = f;
            canon.canonicalize();
            if (canon != f) return; // not in canonical form
            emit(ShiftedTableau(std::move(f), n));
            return;
        }
        auto [r, c] = cells[k];
        for (auto& L : alphabet) {
            if (weight_cap && count[L.value] + 1 > (L.value <= (int)weight_cap->size() ? (*weight_cap)[L.value - 1] : 0))
                continue;
            auto left = cur.find({r, c - 1});
            if (left != cur.end() && L < left->second) continue;
            auto up = cur.find({r - 1, c});
            if (up != cur.end() && L < up->second) continue;
            bool clash = false;
            if (!L.primed) { // one i per column: scan filled cells above
                for (int rr = r - 1; rr >= 1 && !clash; --rr) {
                    auto it = cur.find({rr, c});
                    if (it != cur.end() && it->second == L) clash = true;
                }
            } else { // one i' per row: scan filled cells to the left
                for (int cc = c - 1; cc >= r && !clash; --cc) {
                    auto it = cur.find({r, cc});
                    if (it != cur.end() && it->second == L) clash = true;
                }
            }
            if (clash) continue;
            cur[{r, c}] = L;
            count[L.value] += 1;
            go(k + 1);
            count[L.value] -= 1;
            cur.erase({r, c});
        }
    };
    go(0);
}

inline std::vector<ShiftedTableau> enumerate_all(const SkewShape& shape, int n) {
    std::vector<ShiftedTableau> out;
    enumerate(shape, n, [&](const ShiftedTableau& T) { out.push_back(T); });
    return out;
}

inline std::vector<ShiftedTableau> enumerate_by_weight(const SkewShape& shape, const std::vector<int>& nu) {
    std::vector<ShiftedTableau> out;
    enumerate(shape, (int)nu.size(), [&](const ShiftedTableau& T) { out.push_back(T); }, &nu);
    return out;
}

inline long long count(const SkewShape& shape, int n) {
    long long c = 0;
    enumerate(shape, n, [&](const ShiftedTableau&) { ++c; });
    return c;
}

// All standard tableaux of a shape (used as rectification orders / fillers).
inline std::vector<ShiftedTableau> standard_tableaux(const SkewShape& shape) {
    std::vector<int> ones(shape.num_cells(), 1);
    return enumerate_by_weight(shape, ones);
}

} // namespace shtab
