#pragma once

// Text and JSON serialization: tableaux, slide records, growth grids,
// relation reports.

#include <json.hpp>

#include "bender_knuth.hpp"
#include "growth.hpp"

namespace shtab {
namespace io {

using nlohmann::json;

// One line per row, space-separated tokens; cells west of the diagonal are
// ".", inner-shape cells are "#", primes are apostrophes.
inline std::string to_text(const ShiftedTableau& T) {
    auto& sh = T.shape();
    std::ostringstream os;
    for (int r = 1; r <= sh.outer.length(); ++r) {
        for (int c = 1; c <= sh.row_end(r); ++c) {
            if (c > 1) os << ' ';
            if (c < r) os << '.';
            else if (sh.inner.has_cell(r, c)) os << '#';
            else os << T.at(r, c).str();
        }
        os << '\n';
    }
    return os.str();
}

// Inverse of to_text; n = 0 means "largest value present".
inline ShiftedTableau from_text(const std::string& text, int n = 0) {
    std::vector<int> out_parts, in_parts;
    std::map<Cell, Letter> e;
    std::stringstream ss(text);
    std::string line;
    int r = 0, maxv = 0;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++r;
        std::stringstream ls(line);
        std::string tok;
        int c = 0, inner_end = r - 1, outer_end = r - 1;
        while (ls >> tok) {
            ++c;
            if (tok == ".") {
                if (c >= r) throw std::invalid_argument("from_text: '.' east of the diagonal");
                continue;
            }
            if (c < r) throw std::invalid_argument("from_text: entry west of the diagonal");
            outer_end = c;
            if (tok == "#") {
                if (inner_end != c - 1) throw std::invalid_argument("from_text: '#' after an entry");
                inner_end = c;
            } else {
                Letter x = parse_letter(tok);
                maxv = std::max(maxv, x.value);
                e[{r, c}] = x;
            }
        }
        out_parts.push_back(outer_end - r + 1);
        in_parts.push_back(inner_end - r + 1);
    }
    while (!out_parts.empty() && out_parts.back() == 0) { out_parts.pop_back(); in_parts.pop_back(); }
    while (!in_parts.empty() && in_parts.back() == 0) in_parts.pop_back();
    SkewShape shape{StrictPartition(out_parts), StrictPartition(in_parts)};
    return ShiftedTableau(Filling(shape, std::move(e)), n ? n : maxv);
}

inline json to_json(const ShiftedTableau& T) {
    json rows = json::array();
    auto& sh = T.shape();
    for (int r = 1; r <= sh.outer.length(); ++r) {
        json row = json::array();
        for (int c = sh.row_begin(r); c <= sh.row_end(r); ++c) row.push_back(T.at(r, c).str());
        rows.push_back(row);
    }
    return json{{"outer", sh.outer.str()}, {"inner", sh.inner.str()}, {"n", T.n()}, {"rows", rows}};
}

inline ShiftedTableau tableau_from_json(const json& j) {
    SkewShape shape{parse_partition(j.at("outer").get<std::string>()),
                    parse_partition(j.at("inner").get<std::string>())};
    std::vector<Letters> rows;
    for (auto& row : j.at("rows")) {
        Letters r;
        for (auto& tok : row) r.push_back(parse_letter(tok.get<std::string>()));
        rows.push_back(r);
    }
    while ((int)rows.size() < shape.outer.length()) rows.push_back({});
    return ShiftedTableau::build(shape, rows, j.at("n").get<int>());
}

inline json record_to_json(const SlideRecord& rec) {
    json out = json::array();
    for (auto& s : rec)
        out.push_back(json::array({s.cell.first, s.cell.second,
                                   s.kind == SlideStep::Inner ? "inner" : "outer"}));
    return out;
}

inline SlideRecord record_from_json(const json& j) {
    SlideRecord rec;
    for (auto& s : j)
        rec.push_back({{s.at(0).get<int>(), s.at(1).get<int>()},
                       s.at(2).get<std::string>() == "inner" ? SlideStep::Inner : SlideStep::Outer});
    return rec;
}

inline json grid_to_json(const GrowthGrid& g) {
    json rows = json::array();
    for (auto& row : g.rows) {
        json r = json::array();
        for (auto& p : row) r.push_back(p.str());
        rows.push_back(r);
    }
    json segments = json::object();
    for (auto& [name, chain] : g.segments) {
        json c = json::array();
        for (auto& p : chain) c.push_back(p.str());
        segments[name] = c;
    }
    return json{{"rows", rows}, {"segments", segments}};
}

// Partitions as dot-joined tokens ("5.3.1", "0" for the empty shape).
inline std::string grid_to_text(const GrowthGrid& g) {
    auto tok = [](const StrictPartition& p) {
        if (p.empty()) return std::string("0");
        std::string s;
        for (size_t k = 0; k < p.parts.size(); ++k) s += (k ? "." : "") + std::to_string(p.parts[k]);
        return s;
    };
    size_t width = 0;
    for (auto& row : g.rows)
        for (auto& p : row) width = std::max(width, tok(p).size());
    std::ostringstream os;
    for (auto& row : g.rows) {
        for (size_t k = 0; k < row.size(); ++k) {
            std::string s = tok(row[k]);
            os << (k ? "  " : "") << s << std::string(width - s.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

inline json report_to_json(const RelationReport& rep) {
    json failures = json::array();
    for (auto& f : rep.failures)
        failures.push_back(json{{"word", f.relation}, {"tableau", f.shape + " : " + f.word}});
    return json{{"suite", rep.suite},
                {"universe_size", rep.universe_size},
                {"failures", failures},
                {"witnesses", rep.notes}};
}

} // namespace io
} // namespace shtab
