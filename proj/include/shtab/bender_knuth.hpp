#pragma once

// Shifted Bender-Knuth involutions t_i, promotion p_i, q_i, q_{i,j},
// generator-word evaluation, and the relation/counterexample suites.

#include <numeric>
#include <sstream>

#include "evacuation.hpp"

namespace shtab {

// t_i = theta_i ∘ SP_{i,i+1} (equivalently SP_{i+1,i} ∘ theta_i).
inline ShiftedTableau t(const ShiftedTableau& T, int i) {
    if (i < 1 || i + 1 > T.n()) throw std::invalid_argument("t: i out of range");
    Filling raw = sp_ij(T.filling(), i, i + 1);
    return ShiftedTableau(apply_permutation(Permutation::theta(i, T.n()), std::move(raw)), T.n());
}

// The other route of the defining identity, used as a cross-check.
inline ShiftedTableau t_via_theta_first(const ShiftedTableau& T, int i) {
    Filling g = apply_permutation(Permutation::theta(i, T.n()), T.filling());
    return ShiftedTableau(sp_ij(g, i + 1, i), T.n());
}

// p_i = t_i t_{i-1} ... t_1.
inline ShiftedTableau promotion(const ShiftedTableau& T, int i) {
    if (i < 1 || i + 1 > T.n()) throw std::invalid_argument("promotion: i out of range");
    ShiftedTableau cur = T;
    for (int k = 1; k <= i; ++k) cur = t(cur, k);
    return cur;
}

// p_i^{-1} = t_1 t_2 ... t_i.
inline ShiftedTableau promotion_inv(const ShiftedTableau& T, int i) {
    if (i < 1 || i + 1 > T.n()) throw std::invalid_argument("promotion_inv: i out of range");
    ShiftedTableau cur = T;
    for (int k = i; k >= 1; --k) cur = t(cur, k);
    return cur;
}

// p_i = zeta_i ∘ SW_{1|2,...,i+1}; cross-check route.
inline ShiftedTableau promotion_via_sw(const ShiftedTableau& T, int i) {
    std::vector<int> targets;
    for (int b = 2; b <= i + 1; ++b) targets.push_back(b);
    Filling raw = sw_given(T, 1, targets);
    return ShiftedTableau(apply_permutation(Permutation::zeta(i, T.n()), std::move(raw)), T.n());
}

// q_i = t_1 (t_2 t_1) ... (t_i ... t_1) = p_1 p_2 ... p_i.
inline ShiftedTableau q(const ShiftedTableau& T, int i) {
    if (i < 1 || i + 1 > T.n()) throw std::invalid_argument("q: i out of range");
    ShiftedTableau cur = T;
    for (int k = i; k >= 1; --k) cur = promotion(cur, k);
    return cur;
}

// q_{i,j} = q_{j-1} q_{j-i} q_{j-1}.
inline ShiftedTableau q_ij(const ShiftedTableau& T, int i, int j) {
    if (i < 1 || i >= j || j > T.n()) throw std::invalid_argument("q_ij: bad range");
    return q(q(q(T, j - 1), j - i), j - 1);
}

// ---------------------------------------------------------------------------
// Generator words

struct GeneratorToken {
    enum Kind { T, P, Pinv, Q, Qij, Sij, Sigma, Etaij } kind;
    int i = 0, j = 0;
};

struct GeneratorWord {
    std::vector<GeneratorToken> tokens;

    // Tokens: t1, p2, p2^-1, q3, q2,4, s1,3, sigma2, eta1,3 (whitespace-separated).
    static GeneratorWord parse(const std::string& text) {
        GeneratorWord w;
        std::stringstream ss(text);
        std::string tok;
        while (ss >> tok) {
            GeneratorToken g;
            auto number_pair = [&](const std::string& body, bool* has_j) {
                auto comma = body.find(',');
                *has_j = comma != std::string::npos;
                g.i = std::stoi(body.substr(0, comma));
                if (*has_j) g.j = std::stoi(body.substr(comma + 1));
            };
            bool two = false;
            if (tok.rfind("sigma", 0) == 0) {
                g.kind = GeneratorToken::Sigma;
                number_pair(tok.substr(5), &two);
                if (two) throw std::invalid_argument("GeneratorWord: sigma takes one index");
            } else if (tok.rfind("eta", 0) == 0) {
                g.kind = GeneratorToken::Etaij;
                number_pair(tok.substr(3), &two);
                if (!two) throw std::invalid_argument("GeneratorWord: eta takes two indices");
            } else if (tok[0] == 't') {
                g.kind = GeneratorToken::T;
                number_pair(tok.substr(1), &two);
            } else if (tok[0] == 'p') {
                std::string body = tok.substr(1);
                if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
                    g.kind = GeneratorToken::Pinv;
                    body = body.substr(0, body.size() - 3);
                } else {
                    g.kind = GeneratorToken::P;
                }
                number_pair(body, &two);
            } else if (tok[0] == 'q') {
                number_pair(tok.substr(1), &two);
                g.kind = two ? GeneratorToken::Qij : GeneratorToken::Q;
            } else if (tok[0] == 's') {
                g.kind = GeneratorToken::Sij;
                number_pair(tok.substr(1), &two);
                if (!two) throw std::invalid_argument("GeneratorWord: s takes two indices");
            } else {
                throw std::invalid_argument("GeneratorWord: unknown token '" + tok + "'");
            }
            w.tokens.push_back(g);
        }
        return w;
    }
};

// Right-to-left application; cactus tokens s_{i,j} act as eta_{i,j}.
inline ShiftedTableau evaluate(const GeneratorWord& word, const ShiftedTableau& T0) {
    ShiftedTableau cur = T0;
    for (auto it = word.tokens.rbegin(); it != word.tokens.rend(); ++it) {
        switch (it->kind) {
            case GeneratorToken::T: cur = t(cur, it->i); break;
            case GeneratorToken::P: cur = promotion(cur, it->i); break;
            case GeneratorToken::Pinv: cur = promotion_inv(cur, it->i); break;
            case GeneratorToken::Q: cur = q(cur, it->i); break;
            case GeneratorToken::Qij: cur = q_ij(cur, it->i, it->j); break;
            case GeneratorToken::Sij: cur = eta_ij(cur, it->i, it->j); break;
            case GeneratorToken::Sigma: cur = sigma(cur, it->i); break;
            case GeneratorToken::Etaij: cur = eta_ij(cur, it->i, it->j); break;
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Relation suites

struct RelationFailure {
    std::string relation; // e.g. "t1 t1 = id"
    std::string shape;
    std::string word; // reading word of the offending tableau
};

struct RelationReport {
    std::string suite;
    size_t universe_size = 0;
    std::vector<RelationFailure> failures;
    std::vector<std::string> notes; // findings (e.g. braid-search results)
    bool passed() const { return failures.empty(); }
};

namespace detail {

inline void check(RelationReport& rep, bool ok, const std::string& rel, const ShiftedTableau& T) {
    if (!ok) rep.failures.push_back({rel, T.shape().str(), T.reading_word().str()});
}

} // namespace detail

inline RelationReport verify_relations(const std::vector<ShiftedTableau>& universe,
                                       const std::string& suite, int power_bound = 200) {
    RelationReport rep;
    rep.suite = suite;
    rep.universe_size = universe.size();
    if (universe.empty() && suite != "sbk-counterexamples") return rep;
    int n = universe.empty() ? 0 : universe.front().n();

    if (suite == "bk-basic") {
        for (auto& T : universe) {
            for (int i = 1; i < n; ++i)
                detail::check(rep, t(t(T, i), i) == T, "t" + std::to_string(i) + " involution", T);
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j)
                    detail::check(rep, t(t(T, i), j) == t(t(T, j), i),
                                  "t" + std::to_string(i) + " t" + std::to_string(j) + " commute", T);
        }
    } else if (suite == "bk-qjk") {
        for (auto& T : universe)
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j <= n; ++j)
                    for (int k = j + 1; k <= n; ++k) {
                        auto g = [&](const ShiftedTableau& X) { return t(q_ij(X, j, k), i); };
                        detail::check(rep, g(g(T)) == T,
                                      "(t" + std::to_string(i) + " q" + std::to_string(j) + "," +
                                          std::to_string(k) + ")^2 = id", T);
                    }
    } else if (suite == "cactus-eta") {
        for (auto& T : universe) {
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    detail::check(rep, eta_ij(eta_ij(T, i, j), i, j) == T,
                                  "eta" + std::to_string(i) + "," + std::to_string(j) + " involution", T);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = j + 1; k < n; ++k)
                        for (int l = k + 1; l <= n; ++l)
                            detail::check(rep, eta_ij(eta_ij(T, i, j), k, l) == eta_ij(eta_ij(T, k, l), i, j),
                                          "disjoint eta commute", T);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int k = i; k < j; ++k)
                        for (int l = k + 1; l <= j; ++l) {
                            if (k == i && l == j) continue;
                            auto lhs = eta_ij(eta_ij(T, k, l), i, j);
                            auto rhs = eta_ij(eta_ij(T, i, j), i + j - l, i + j - k);
                            detail::check(rep, lhs == rhs, "nested cactus relation", T);
                        }
        }
    } else if (suite == "sbk-counterexamples") {
        // Witness 1 (braid): T = 1 1 1 1 3' / 2 2 3' / 3 on (5,3,1), n=3.
        auto parse_rows = [](const SkewShape& sh, const std::vector<std::string>& rows, int nn) {
            std::vector<Letters> ls;
            for (auto& row : rows) {
                Letters r;
                std::stringstream ss(row);
                std::string tok;
                while (ss >> tok) r.push_back(parse_letter(tok));
                ls.push_back(r);
            }
            return ShiftedTableau::build(sh, ls, nn);
        };
        SkewShape s531{StrictPartition({5, 3, 1}), {}};
        auto Tb = parse_rows(s531, {"1 1 1 1 3'", "2 2 3'", "3"}, 3);
        auto lhs = sigma(sigma(sigma(Tb, 1), 2), 1);
        auto rhs = sigma(sigma(sigma(Tb, 2), 1), 2);
        if (lhs == rhs)
            rep.failures.push_back({"braid witness collapsed", s531.str(), Tb.reading_word().str()});
        else
            rep.notes.push_back("sigma1 sigma2 sigma1 != sigma2 sigma1 sigma2 confirmed on the witness");
        // Witness 2: (t1 t2)^6 != id on T = 1 1 2' 2 3 / 2 3' 3 / 3.
        SkewShape s2{StrictPartition({5, 3, 1}), {}};
        auto Tc = parse_rows(s2, {"1 1 2' 2 3", "2 3' 3", "3"}, 3);
        ShiftedTableau cur = Tc;
        for (int k = 0; k < 6; ++k) cur = t(t(cur, 2), 1);
        if (cur == Tc)
            rep.failures.push_back({"(t1 t2)^6 witness collapsed", s2.str(), Tc.reading_word().str()});
        else
            rep.notes.push_back("(t1 t2)^6 != id confirmed on the witness");
        rep.universe_size = 2;
    } else if (suite == "braid-search") {
        // Order of t1∘t2 on the universe; report the least m with (t1t2)^{2m} = id.
        std::map<ShiftedTableau, size_t> index;
        for (size_t k = 0; k < universe.size(); ++k) index[universe[k]] = k;
        std::vector<size_t> next(universe.size());
        for (size_t k = 0; k < universe.size(); ++k) {
            auto img = t(t(universe[k], 2), 1);
            auto it = index.find(img);
            if (it == index.end()) {
                rep.failures.push_back({"t1 t2 leaves the universe", universe[k].shape().str(),
                                        universe[k].reading_word().str()});
                return rep;
            }
            next[k] = it->second;
        }
        std::vector<char> seen(universe.size(), 0);
        long long order = 1;
        bool overflow = false;
        for (size_t k = 0; k < universe.size(); ++k) {
            if (seen[k]) continue;
            long long len = 0;
            size_t p = k;
            while (!seen[p]) {
                seen[p] = 1;
                p = next[p];
                ++len;
            }
            order = std::lcm(order, len);
            if (order > 2LL * power_bound) { overflow = true; break; }
        }
        if (overflow) {
            rep.notes.push_back("no m <= " + std::to_string(power_bound) +
                                " with (t1t2)^{2m} = id (order exceeds bound)");
        } else {
            long long m = (order % 2 == 0) ? order / 2 : order;
            rep.notes.push_back("least power with (t1t2)^p = id: p = " + std::to_string(order));
            if (m <= power_bound)
                rep.notes.push_back("minimal m with (t1t2)^{2m} = id: m = " + std::to_string(m));
            else
                rep.notes.push_back("no m <= " + std::to_string(power_bound) + " with (t1t2)^{2m} = id");
        }
    } else {
        throw std::invalid_argument("verify_relations: unknown suite '" + suite + "'");
    }
    return rep;
}

} // namespace shtab
