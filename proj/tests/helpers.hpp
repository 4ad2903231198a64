#pragma once

// Small builders shared by the test binaries.

#include <shtab/shtab.hpp>

namespace th {

// Tableau from the text format of io::from_text ("." west of the diagonal,
// "#" for inner cells, apostrophes for primes).
inline shtab::ShiftedTableau tab(const std::string& text, int n = 0) {
    return shtab::io::from_text(text, n);
}

inline shtab::StrictPartition part(const std::string& s) { return shtab::parse_partition(s); }

inline shtab::ShapeChain chain(const std::vector<std::string>& parts) {
    shtab::ShapeChain c;
    for (auto& s : parts) c.push_back(shtab::parse_partition(s));
    return c;
}

// Row-reading standard filler of a straight shape (1,2,... row by row).
inline shtab::ShiftedTableau row_filler(const shtab::StrictPartition& mu) {
    std::map<shtab::Cell, shtab::Letter> e;
    int k = 0;
    for (auto& cell : mu.cells()) e[cell] = shtab::Letter(++k, false);
    return shtab::ShiftedTableau(
        shtab::Filling(shtab::SkewShape{mu, shtab::StrictPartition()}, std::move(e)), std::max(k, 1));
}

} // namespace th
