#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace shtab;
using th::tab;
using th::part;
using th::chain;

TEST_CASE("shape chains encode standard tableaux") {
    auto T = tab("# # # 1 3\n. # 2 5\n. . 4", 5);
    auto c = chain({"3,1", "4,1", "4,2", "5,2", "5,2,1", "5,3,1"});
    CHECK(chain_of(T) == c);
    CHECK(tableau_of(c) == T);
    CHECK_NOTHROW(check_saturated(c));
    auto bad = chain({"3,1", "5,1"});
    CHECK_THROWS_AS(check_saturated(bad), std::invalid_argument);
    CHECK(chain_str(c) == "3,1 < 4,1 < 4,2 < 5,2 < 5,2,1 < 5,3,1");
}

TEST_CASE("the local rule is self-inverse and matches the growth conditions") {
    std::mt19937 rng(20240817);
    auto parts = strict_partitions_up_to(7);
    int done = 0;
    while (done < 2000) {
        auto& nu = parts[rng() % parts.size()];
        auto adds = nu.addable_cells();
        if (adds.empty()) continue;
        auto [r1, c1] = adds[rng() % adds.size()];
        auto mu = nu.with_cell(r1, c1);
        auto adds2 = mu.addable_cells();
        if (adds2.empty()) continue;
        auto [r2, c2] = adds2[rng() % adds2.size()];
        auto lambda = mu.with_cell(r2, c2);
        auto mup = local_rule(nu, mu, lambda);
        CHECK(local_rule(nu, mup, lambda) == mu);
        CHECK(mup.contains(nu));
        CHECK(lambda.contains(mup));
        ++done;
    }
}

TEST_CASE("rectification growth diagram reproduces the printed table") {
    auto T = tab("# # # 1 3\n. # 2 5\n. . 4", 5);
    auto order = chain({"-", "1", "2", "3", "3,1"});
    auto g = rectification_grid(order, chain_of(T));
    std::vector<std::vector<std::string>> want{
        {"3,1", "4,1", "4,2", "5,2", "5,2,1", "5,3,1"},
        {"3", "4", "4,1", "5,1", "5,2", "5,3"},
        {"2", "3", "3,1", "4,1", "4,2", "4,3"},
        {"1", "2", "2,1", "3,1", "3,2", "4,2"},
        {"-", "1", "2", "3", "3,1", "4,1"},
    };
    REQUIRE(g.rows.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) {
        REQUIRE(g.rows[i].size() == want[i].size());
        for (size_t j = 0; j < want[i].size(); ++j) CHECK(g.rows[i][j].str() == want[i][j]);
    }
    // bottom row encodes rect(T), east column (bottom-up) the vacating tableau
    CHECK(tableau_of(g.segments.at("output")) == rect(T));
    CHECK(tableau_of(g.segments.at("vacate")).shape() == parse_shape("5,3,1/4,1"));
}

TEST_CASE("infusion via growth equals slide infusion") {
    auto S = tab("1 2 3\n. 4", 4);
    auto T = tab("# # # 1 3\n. # 2 5\n. . 4", 5);
    auto [X, Y] = infusion_grid(S, T);
    auto [Xs, Ys] = infusion(S, T);
    CHECK(X == Xs);
    CHECK(Y == Ys);
    // desk-scale exhaustive
    for (auto& lambda : strict_partitions_up_to(6))
        for (auto& mu : strict_partitions_up_to(lambda.size())) {
            if (!lambda.contains(mu) || mu.empty() || lambda.size() == mu.size()) continue;
            for (auto& [A, B] : extension_pairs(lambda, mu)) {
                auto [X1, Y1] = infusion_grid(A, B);
                auto [X2, Y2] = infusion(A, B);
                CHECK(X1 == X2);
                CHECK(Y1 == Y2);
            }
        }
}

TEST_CASE("evacuation triangle on the worked example") {
    auto T = tab("1 2 3 5\n. 4 6\n. . 7", 7);
    auto g = evac_grid(T);
    CHECK(tableau_of(g.segments.at("evac")) == tab("1 2 3 7\n. 4 5\n. . 6", 7));
    CHECK(evac_via_growth(T) == evac(T));
    CHECK(evac_k_via_growth(T, 4) == tab("1 2 4 5\n. 3 6\n. . 7", 7));
    CHECK(evac_k_via_growth(T, 4) == evac_k(T, 4));
    // triangle rows shrink by one and start at the empty diagonal
    for (size_t i = 1; i < g.rows.size(); ++i) {
        CHECK(g.rows[i].size() == g.rows[i - 1].size() - 1);
        CHECK(g.rows[i].front().empty());
    }
}

TEST_CASE("growth evacuation equals direct evacuation on all small standard tableaux") {
    for (auto& lambda : strict_partitions_up_to(6)) {
        if (lambda.empty()) continue;
        for (auto& T : standard_tableaux(SkewShape{lambda, StrictPartition()})) {
            CHECK(evac_via_growth(T) == evac(T));
            for (int k = 1; k <= T.n(); ++k) CHECK(evac_k_via_growth(T, k) == evac_k(T, k));
        }
    }
}

TEST_CASE("reversal via growth equals direct reversal") {
    auto T = tab("# # # 2' 3'\n. # 1 3'\n. . 2 3'\n. . . 3", 3);
    auto Ts = standardize(T);
    CHECK(reversal_via_growth(Ts) == reversal(Ts));
    for (auto& sh : skew_shapes_up_to(6)) {
        if (sh.is_straight()) continue;
        for (auto& U : standard_tableaux(sh)) {
            CHECK(reversal_via_growth(U) == reversal(U));
            // any filler gives the same answer
            for (auto& F : standard_tableaux(SkewShape{sh.inner, StrictPartition()}))
                CHECK(reversal_via_growth(U, &F) == reversal(U));
        }
    }
}

TEST_CASE("eta_{i,j} via growth equals the direct restriction") {
    for (auto& sh : skew_shapes_up_to(5)) {
        for (auto& T : standard_tableaux(sh)) {
            int n = T.n();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    CHECK(eta_via_growth(T, i, j) == eta_ij(T, i, j));
        }
    }
}

TEST_CASE("semistandard eta_{2,3} pipeline on the worked example") {
    auto T = tab("# # 1 2\n. 1 2 3'\n. . 3 3", 3);
    CHECK(T.wt() == std::vector<int>{2, 2, 3});

    // standardization and rectification with the order S = 1 2
    auto Ts = standardize(T);
    CHECK(Ts == tab("# # 2 4\n. 1 3 5\n. . 6 7", 7));
    auto S = tab("1 2", 2);
    auto [X, Sp] = infusion(S, Ts);
    CHECK(X == tab("1 2 4 7\n. 3 5\n. . 6", 7));
    CHECK(Sp.shape() == parse_shape("4,3,2/4,2,1"));

    // P_2(nu) = {3,4}, P_3(nu) = {5,6,7}: eta_{2,3} standardizes to eta_{3,7}
    auto Tp = eta_ij(X, 3, 7);
    CHECK(Tp == tab("1 2 3 6\n. 4 5\n. . 7", 7));
    CHECK(eta_via_growth(X, 3, 7) == Tp);

    // back through infusion and semistandardization with nu' = (2,3,2)
    auto [Tp2, out] = infusion(Tp, Sp);
    auto back = semistandardize(out, {2, 3, 2});
    REQUIRE(back.has_value());
    auto want = tab("# # 1 2'\n. 1 2' 3'\n. . 2 3", 3);
    CHECK(*back == want);

    // the packaged routes agree
    CHECK(eta_semistandard_via_growth(T, 2, 3) == want);
    CHECK(eta_ij(T, 2, 3) == want);
}

TEST_CASE("semistandard eta via growth equals direct eta on small crystals") {
    for (auto& sh : {parse_shape("3,1"), parse_shape("3,2/1")}) {
        for (auto& T : enumerate_all(sh, 3))
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j)
                    CHECK(eta_semistandard_via_growth(T, i, j) == eta_ij(T, i, j));
    }
}
