#pragma once

// Desk-scale enumeration helpers: strict partitions, skew shapes, tableau
// universes, and extension pairs (S straight, T skew on top of S).

#include "tableau.hpp"

namespace shtab {

inline std::vector<StrictPartition> strict_partitions_up_to(int max_cells) {
    std::vector<StrictPartition> out{StrictPartition()};
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            out.push_back(StrictPartition(cur));
            if (remaining - p > 0) self(self, remaining - p, p - 1);
            cur.pop_back();
        }
    };
    if (max_cells > 0) rec(rec, max_cells, max_cells);
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// All skew shapes lambda/mu with |lambda| <= max_outer_cells. Straight shapes
// are the mu = ∅ entries.
inline std::vector<SkewShape> skew_shapes_up_to(int max_outer_cells, bool include_empty_strips = false) {
    std::vector<SkewShape> out;
    for (auto& lam : strict_partitions_up_to(max_outer_cells))
        for (auto& mu : strict_partitions_up_to(lam.size()))
            if (lam.contains(mu) && (include_empty_strips || lam.size() > mu.size()))
                out.push_back(SkewShape{lam, mu});
    return out;
}

// All pairs (S, T): S standard straight of shape mu, T standard of lambda/mu.
inline std::vector<std::pair<ShiftedTableau, ShiftedTableau>>
extension_pairs(const StrictPartition& lambda, const StrictPartition& mu) {
    std::vector<std::pair<ShiftedTableau, ShiftedTableau>> out;
    auto Ss = standard_tableaux(SkewShape{mu, StrictPartition()});
    auto Ts = standard_tableaux(SkewShape{lambda, mu});
    for (auto& S : Ss)
        for (auto& T : Ts) out.push_back({S, T});
    return out;
}

} // namespace shtab
