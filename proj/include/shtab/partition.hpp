#pragma once

// Strict partitions and shifted skew shapes S(lambda/mu), English notation,
// 1-based rows/columns, row i occupying columns i .. i+lambda_i-1.

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shtab {

using Cell = std::pair<int, int>; // (row, col), 1-based

struct StrictPartition {
    std::vector<int> parts; // strictly decreasing positive integers

    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] <= 0 || (k + 1 < parts.size() && parts[k] <= parts[k + 1]))
                throw std::invalid_argument("StrictPartition: parts must be strictly decreasing and positive");
        }
    }

    int length() const { return (int)parts.size(); }
    int size() const { int s = 0; for (int p : parts) s += p; return s; }
    bool empty() const { return parts.empty(); }
    int part(int i) const { return (i >= 1 && i <= length()) ? parts[i - 1] : 0; } // 1-based, 0 beyond

    bool has_cell(int r, int c) const { return r >= 1 && c >= r && c <= r + part(r) - 1; }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= length(); ++r)
            for (int c = r; c <= r + part(r) - 1; ++c) out.push_back({r, c});
        return out;
    }

    bool contains(const StrictPartition& mu) const {
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    // Rows from which the last box can be removed leaving a strict partition.
    std::vector<Cell> removable_cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= length(); ++r) {
            int p = part(r);
            if (p - 1 > part(r + 1) || (p == 1 && r == length()))
                out.push_back({r, r + p - 1});
        }
        return out;
    }

    // Cells whose addition gives a strict partition.
    std::vector<Cell> addable_cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= length() + 1; ++r) {
            int p = part(r);
            if (r == 1 || part(r - 1) > p + 1)
                if (p > 0 || r == length() + 1) out.push_back({r, r + p});
        }
        return out;
    }

    StrictPartition with_cell(int r, int c) const {
        if (c != r + part(r)) throw std::invalid_argument("with_cell: not the next cell of that row");
        std::vector<int> q = parts;
        if (r == length() + 1) q.push_back(1); else q[r - 1] += 1;
        return StrictPartition(q);
    }

    StrictPartition without_cell(int r, int c) const {
        if (part(r) == 0 || c != r + part(r) - 1)
            throw std::invalid_argument("without_cell: not the last cell of that row");
        std::vector<int> q = parts;
        q[r - 1] -= 1;
        if (r == length() && q[r - 1] == 0) q.pop_back();
        return StrictPartition(q);
    }

    friend bool operator==(const StrictPartition& a, const StrictPartition& b) { return a.parts == b.parts; }
    friend bool operator!=(const StrictPartition& a, const StrictPartition& b) { return !(a == b); }
    friend bool operator<(const StrictPartition& a, const StrictPartition& b) { return a.parts < b.parts; }

    std::string str() const {
        if (parts.empty()) return "-";
        std::ostringstream os;
        for (size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
        return os.str();
    }
};

// lambda^vee: the parts of {w, w-1, ..., 1} not in lambda.
inline StrictPartition complement_shape(const StrictPartition& lambda, int ambient_width) {
    if (ambient_width < lambda.part(1))
        throw std::invalid_argument("complement_shape: ambient_width < largest part");
    std::set<int> in(lambda.parts.begin(), lambda.parts.end());
    std::vector<int> out;
    for (int p = ambient_width; p >= 1; --p)
        if (!in.count(p)) out.push_back(p);
    return StrictPartition(out);
}

struct SkewShape {
    StrictPartition outer, inner;

    SkewShape() = default;
    SkewShape(StrictPartition o, StrictPartition i) : outer(std::move(o)), inner(std::move(i)) {
        if (!outer.contains(inner))
            throw std::invalid_argument("SkewShape: inner not contained in outer");
    }

    int num_cells() const { return outer.size() - inner.size(); }
    bool has_cell(int r, int c) const { return outer.has_cell(r, c) && !inner.has_cell(r, c); }
    bool is_straight() const { return inner.empty(); }

    // First/last content column of row r; first > last when the row is empty.
    int row_begin(int r) const { return r + inner.part(r); }
    int row_end(int r) const { return r + outer.part(r) - 1; }

    std::vector<Cell> cells() const { // row-major
        std::vector<Cell> out;
        for (int r = 1; r <= outer.length(); ++r)
            for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
        return out;
    }

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }
    friend bool operator!=(const SkewShape& a, const SkewShape& b) { return !(a == b); }
    friend bool operator<(const SkewShape& a, const SkewShape& b) {
        if (a.outer != b.outer) return a.outer < b.outer;
        return a.inner < b.inner;
    }

    std::string str() const {
        return inner.empty() ? outer.str() : outer.str() + "/" + inner.str();
    }
};

// Rebuilds the outer partition of inner-cells ∪ extra-cells; throws when the
// union is not a shifted diagram S(gamma) with inner ⊆ gamma.
inline StrictPartition shape_from_cells(const StrictPartition& inner, const std::vector<Cell>& extra) {
    std::set<Cell> all;
    for (auto& c : inner.cells()) all.insert(c);
    for (auto& c : extra) {
        if (!all.insert(c).second)
            throw std::invalid_argument("shape_from_cells: duplicate cell");
    }
    int maxrow = 0;
    for (auto& [r, c] : all) maxrow = std::max(maxrow, r);
    std::vector<int> parts;
    for (int r = 1; r <= maxrow; ++r) {
        int cnt = 0, maxc = r - 1;
        for (auto& [rr, cc] : all)
            if (rr == r) { ++cnt; maxc = std::max(maxc, cc); }
        if (cnt != maxc - r + 1)
            throw std::invalid_argument("shape_from_cells: row not contiguous from the diagonal");
        for (auto& [rr, cc] : all)
            if (rr == r && cc < r) throw std::invalid_argument("shape_from_cells: cell west of diagonal");
        parts.push_back(cnt);
    }
    StrictPartition gamma(parts); // throws if not strictly decreasing
    if (!gamma.contains(inner)) throw std::invalid_argument("shape_from_cells: inner escapes union");
    return gamma;
}

inline StrictPartition parse_partition(const std::string& s) {
    if (s == "-" || s == "0" || s.empty()) return StrictPartition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return StrictPartition(parts);
}

inline SkewShape parse_shape(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(s), StrictPartition());
    return SkewShape(parse_partition(s.substr(0, slash)), parse_partition(s.substr(slash + 1)));
}

} // namespace shtab
