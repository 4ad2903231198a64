#pragma once

// Shape chains, the Fomin local rule for shifted shapes, and growth diagrams
// for rectification/infusion, evacuation, evac_k, reversal and eta_{i,j};
// semistandard support goes through std/sstd.

#include "evacuation.hpp"

namespace shtab {

using ShapeChain = std::vector<StrictPartition>;

inline void check_saturated(const ShapeChain& chain) {
    if (chain.empty()) throw std::invalid_argument("ShapeChain: empty chain");
    for (size_t k = 1; k < chain.size(); ++k)
        if (!chain[k].contains(chain[k - 1]) || chain[k].size() != chain[k - 1].size() + 1)
            throw std::invalid_argument("ShapeChain: chain is not saturated");
}

inline std::string chain_str(const ShapeChain& chain) {
    std::string s;
    for (size_t k = 0; k < chain.size(); ++k) s += (k ? " < " : "") + chain[k].str();
    return s;
}

// Chain mu = lambda^(0) ⊆ ... ⊆ lambda^(n) = lambda of a standard tableau.
inline ShapeChain chain_of(const ShiftedTableau& T) {
    if (!T.is_standard()) throw std::invalid_argument("chain_of: tableau is not standard");
    ShapeChain chain{T.shape().inner};
    for (int k = 1; k <= T.n(); ++k) {
        auto cells = T.strip_cells(k);
        if (cells.size() != 1) throw std::logic_error("chain_of: standard strip is not a single cell");
        chain.push_back(chain.back().with_cell(cells[0].first, cells[0].second));
    }
    return chain;
}

inline ShiftedTableau tableau_of(const ShapeChain& chain) {
    check_saturated(chain);
    int n = (int)chain.size() - 1;
    std::map<Cell, Letter> e;
    for (int k = 1; k <= n; ++k) {
        for (int r = 1; r <= chain[k].length(); ++r)
            if (chain[k].part(r) == chain[k - 1].part(r) + 1)
                e[{r, r + chain[k - 1].part(r)}] = Letter(k, false);
    }
    SkewShape shape{chain.back(), chain.front()};
    return ShiftedTableau(Filling(shape, std::move(e)), n);
}

// The local growth rule: with nu ⊆ mu ⊆ lambda a two-step interval, mu' is mu
// when mu is the unique intermediate shape and the other intermediate shape
// otherwise. Self-inverse in mu <-> mu' for fixed (nu, lambda).
inline StrictPartition local_rule(const StrictPartition& nu, const StrictPartition& mu,
                                  const StrictPartition& lambda) {
    if (!mu.contains(nu) || !lambda.contains(mu) || mu.size() != nu.size() + 1 ||
        lambda.size() != mu.size() + 1)
        throw std::invalid_argument("local_rule: need nu ⊂ mu ⊂ lambda, one box per step");
    std::vector<StrictPartition> mids;
    for (auto& [r, c] : nu.addable_cells())
        if (lambda.has_cell(r, c)) mids.push_back(nu.with_cell(r, c));
    if (mids.empty() || mids.size() > 2) throw std::logic_error("local_rule: intermediate count out of range");
    if (std::find(mids.begin(), mids.end(), mu) == mids.end())
        throw std::invalid_argument("local_rule: mu is not intermediate between nu and lambda");
    if (mids.size() == 1) return mu;
    return mids[0] == mu ? mids[1] : mids[0];
}

// A growth diagram: rows of strict partitions (possibly ragged for the
// evacuation triangle) plus named chains for layout segments.
struct GrowthGrid {
    std::vector<std::vector<StrictPartition>> rows;
    std::map<std::string, ShapeChain> segments;
};

// Rectangular rectification diagram. Row 0 is the chain of T (west to east,
// adding boxes); column 0 is the order chain read top-down removing boxes.
// Bottom row encodes rect(T); the east column read bottom-up encodes the
// vacating (recording) tableau.
inline GrowthGrid rectification_grid(const ShapeChain& order, const ShapeChain& Tchain) {
    check_saturated(order);
    check_saturated(Tchain);
    if (!order.front().empty())
        throw std::invalid_argument("rectification_grid: order chain must start at the empty shape");
    if (order.back() != Tchain.front())
        throw std::invalid_argument("rectification_grid: order chain must end at the inner shape of T");
    int m = (int)order.size() - 1, n = (int)Tchain.size() - 1;
    GrowthGrid g;
    g.rows.assign(m + 1, std::vector<StrictPartition>(n + 1));
    g.rows[0] = Tchain;
    for (int i = 1; i <= m; ++i) g.rows[i][0] = order[m - i];
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            g.rows[i][j] = local_rule(g.rows[i][j - 1], g.rows[i - 1][j - 1], g.rows[i - 1][j]);
    g.segments["order"] = order;
    g.segments["input"] = Tchain;
    g.segments["output"] = g.rows[m];
    ShapeChain vac;
    for (int i = m; i >= 0; --i) vac.push_back(g.rows[i][n]);
    g.segments["vacate"] = vac;
    return g;
}

// infusion(S,T) read off the rectification diagram: X from the bottom edge,
// Y from the east edge.
inline std::pair<ShiftedTableau, ShiftedTableau> infusion_grid(const ShiftedTableau& S,
                                                               const ShiftedTableau& T,
                                                               GrowthGrid* grid_out = nullptr) {
    if (!S.shape().is_straight() || S.shape().outer != T.shape().inner)
        throw std::invalid_argument("infusion_grid: S must be straight of T's inner shape");
    GrowthGrid g = rectification_grid(chain_of(S), chain_of(T));
    auto X = tableau_of(g.segments.at("output"));
    auto Y = tableau_of(g.segments.at("vacate"));
    if (grid_out) *grid_out = std::move(g);
    return {X, Y};
}

// Evacuation triangle: row 0 is the chain of T, each lower row starts at the
// empty shape on the main diagonal; the east column read bottom-up encodes
// evac(T).
inline GrowthGrid evac_grid(const ShiftedTableau& T) {
    if (!T.shape().is_straight()) throw std::invalid_argument("evac_grid: tableau must be straight-shaped");
    ShapeChain c = chain_of(T);
    int n = (int)c.size() - 1;
    GrowthGrid g;
    g.rows.assign(n + 1, {});
    g.rows[0] = c;
    for (int i = 1; i <= n; ++i) {
        g.rows[i].assign(n + 1 - i, StrictPartition());
        auto& prev = g.rows[i - 1];
        auto at = [&](int row, int col) -> StrictPartition& { return g.rows[row][col - row]; };
        (void)prev;
        for (int j = i + 1; j <= n; ++j)
            at(i, j) = local_rule(at(i, j - 1), at(i - 1, j - 1), at(i - 1, j));
    }
    g.segments["input"] = c;
    ShapeChain ev;
    for (int i = n; i >= 0; --i) ev.push_back(g.rows[i][n - i]);
    g.segments["evac"] = ev;
    return g;
}

inline ShiftedTableau evac_via_growth(const ShiftedTableau& T) {
    return tableau_of(evac_grid(T).segments.at("evac"));
}

// evac_k via truncation of the triangle: column k read up from the diagonal,
// then the untouched tail of the input chain.
inline ShiftedTableau evac_k_via_growth(const ShiftedTableau& T, int k) {
    if (k < 1 || k > T.n()) throw std::invalid_argument("evac_k_via_growth: k out of range");
    GrowthGrid g = evac_grid(T);
    int n = T.n();
    ShapeChain chain;
    for (int i = k; i >= 0; --i) chain.push_back(g.rows[i][k - i]);
    for (int j = k + 1; j <= n; ++j) chain.push_back(g.rows[0][j]);
    return tableau_of(chain);
}

// Composite reversal layout: rectification of T along the filler S, an
// evacuation triangle on rect(T), then the inverse rectification of the
// vacating tableau along evac(rect T). The final east edge encodes T^e.
inline GrowthGrid reversal_grid(const ShiftedTableau& T, const ShiftedTableau* filler = nullptr) {
    if (!T.is_standard()) throw std::invalid_argument("reversal_grid: tableau is not standard");
    ShiftedTableau S = filler ? *filler : [&] {
        StrictPartition mu = T.shape().inner;
        std::map<Cell, Letter> e;
        int k = 0;
        for (auto& cell : mu.cells()) e[cell] = Letter(++k, false);
        return ShiftedTableau(Filling(SkewShape{mu, StrictPartition()}, std::move(e)), k);
    }();
    GrowthGrid A = rectification_grid(chain_of(S), chain_of(T));
    GrowthGrid B = evac_grid(tableau_of(A.segments.at("output")));
    GrowthGrid C = rectification_grid(B.segments.at("evac"), A.segments.at("vacate"));
    if (C.segments.at("output").back() != T.shape().inner)
        throw std::logic_error("reversal_grid: layout constraint violated (inner shape not restored)");
    GrowthGrid g;
    g.rows = std::move(A.rows);
    for (auto& r : B.rows) g.rows.push_back(std::move(r));
    for (auto& r : C.rows) g.rows.push_back(std::move(r));
    g.segments["order"] = A.segments.at("order");
    g.segments["input"] = A.segments.at("input");
    g.segments["rect"] = A.segments.at("output");
    g.segments["vacate"] = A.segments.at("vacate");
    g.segments["evac"] = B.segments.at("evac");
    g.segments["filler-out"] = C.segments.at("output");
    g.segments["reversal"] = C.segments.at("vacate");
    return g;
}

inline ShiftedTableau reversal_via_growth(const ShiftedTableau& T, const ShiftedTableau* filler = nullptr) {
    return tableau_of(reversal_grid(T, filler).segments.at("reversal"));
}

// eta_{i,j} on a standard tableau: reversal layout on the sub-chain
// [i-1 .. j] of the chain of T, spliced back into the full chain.
inline GrowthGrid eta_grid(const ShiftedTableau& T, int i, int j, const ShiftedTableau* filler = nullptr) {
    if (i < 1 || j > T.n() || i > j) throw std::invalid_argument("eta_grid: bad range");
    ShapeChain c = chain_of(T);
    ShapeChain sub(c.begin() + (i - 1), c.begin() + (j + 1));
    GrowthGrid g = reversal_grid(tableau_of(sub), filler);
    ShapeChain full(c.begin(), c.begin() + (i - 1));
    for (auto& p : g.segments.at("reversal")) full.push_back(p);
    for (size_t k = j + 1; k < c.size(); ++k) full.push_back(c[k]);
    g.segments["result"] = full;
    return g;
}

inline ShiftedTableau eta_via_growth(const ShiftedTableau& T, int i, int j,
                                     const ShiftedTableau* filler = nullptr) {
    return tableau_of(eta_grid(T, i, j, filler).segments.at("result"));
}

// eta_{i,j} on a semistandard tableau of weight nu, via
// sstd_{theta_{i,j}(nu)} ∘ eta_{k,l} ∘ std with k = min P_i(nu), l = max P_j(nu).
inline ShiftedTableau eta_semistandard_via_growth(const ShiftedTableau& T, int i, int j) {
    if (i < 1 || j > T.n() || i > j) throw std::invalid_argument("eta_semistandard_via_growth: bad range");
    std::vector<int> nu = T.wt();
    std::vector<int> pre(nu.size() + 1, 0);
    for (size_t a = 0; a < nu.size(); ++a) pre[a + 1] = pre[a] + nu[a];
    int k = pre[i - 1] + 1, l = pre[j];
    if (k > l) return T;
    std::vector<int> nup = nu;
    std::reverse(nup.begin() + (i - 1), nup.begin() + j);
    ShiftedTableau V = eta_via_growth(standardize(T), k, l);
    auto R = semistandardize(V, nup);
    if (!R) throw std::logic_error("eta_semistandard_via_growth: semistandardization failed");
    return *R;
}

} // namespace shtab
