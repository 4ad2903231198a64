#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace shtab;
using th::tab;
using th::part;

TEST_CASE("SP on the perforated-pair example, with its switch chain") {
    SkewShape sh = parse_shape("6,4,3/3,1");
    std::map<Cell, Letter> A{{{1, 4}, Letter(1, true)},
                             {{1, 5}, Letter(1, false)},
                             {{2, 3}, Letter(1, true)},
                             {{3, 3}, Letter(1, false)},
                             {{3, 5}, Letter(1, false)}};
    std::map<Cell, Letter> B{{{1, 6}, Letter(2, true)},
                             {{2, 4}, Letter(2, true)},
                             {{2, 5}, Letter(2, false)},
                             {{3, 4}, Letter(2, false)}};
    PerforatedPair P(sh, A, B, 1, 2);
    CHECK_FALSE(P.fully_switched());

    std::vector<std::string> log;
    auto [spB, spA] = sp(P, &log);
    CHECK(log == std::vector<std::string>{"S5", "S1", "S5", "S1", "S5"});

    std::map<Cell, Letter> wantB{{{1, 4}, Letter(2, true)},
                                 {{2, 3}, Letter(2, true)},
                                 {{2, 4}, Letter(2, false)},
                                 {{3, 3}, Letter(2, false)}};
    std::map<Cell, Letter> wantA{{{1, 5}, Letter(1, true)},
                                 {{1, 6}, Letter(1, false)},
                                 {{2, 5}, Letter(1, true)},
                                 {{3, 4}, Letter(1, false)},
                                 {{3, 5}, Letter(1, false)}};
    CHECK(spB == wantB);
    CHECK(spA == wantA);

    // the switched state is a fully switched perforated pair again
    PerforatedPair Q(sh, spA, spB, 1, 2);
    CHECK(Q.fully_switched());
}

TEST_CASE("SW on the worked pair, with its switch chain") {
    auto S = tab("1 1 2'\n. 2", 2);
    auto T = tab("# # # 1 2'\n"
                 ". # 1 2\n"
                 ". . 2 3",
                 3);
    std::vector<std::string> log;
    auto [W1, W2] = sw(S, T, &log);
    CHECK(log == std::vector<std::string>{"S1", "S1", "S6", "S5", "S1", "S7", "S1", "S1", "S1", "S5"});
    CHECK(W1 == tab("1 1 2'\n. 2 2\n. . 3", 3));
    CHECK(W2.shape() == parse_shape("5,3,2/3,2,1"));
    CHECK(W2.at(1, 4) == Letter(1, true));
    CHECK(W2.at(1, 5) == Letter(2, true));
    CHECK(W2.at(2, 4) == Letter(1, false));
    CHECK(W2.at(3, 4) == Letter(2, false));

    // SW1 is Knuth equivalent to T, SW2 to S
    CHECK(rect(W1) == rect(T));
    CHECK(rect(W2) == rect(S));
}

TEST_CASE("infusion on the standard worked pair") {
    auto S = tab("1 2 3\n. 4", 4);
    auto T = tab("# # # 2 3\n"
                 ". # 1 5\n"
                 ". . 4 6",
                 6);
    auto [X, Y] = infusion(S, T);
    CHECK(X == tab("1 2 3\n. 4 5\n. . 6", 6));
    CHECK(Y.shape() == parse_shape("5,3,2/3,2,1"));
    CHECK(Y.at(1, 4) == Letter(1, false));
    CHECK(Y.at(1, 5) == Letter(3, false));
    CHECK(Y.at(2, 4) == Letter(2, false));
    CHECK(Y.at(3, 4) == Letter(4, false));
    // infusion is an involution
    auto [S2, T2] = infusion(X, Y);
    CHECK(S2 == S);
    CHECK(T2 == T);
}

TEST_CASE("infusion on the rectification-sequence pair") {
    auto S = tab("1 2 3\n. 4", 4);
    auto T = tab("# # # 1 3\n"
                 ". # 2 5\n"
                 ". . 4",
                 5);
    auto [X, Y] = infusion(S, T);
    CHECK(X == tab("1 2 3 5\n. 4", 5));
    CHECK(Y.shape() == parse_shape("5,3,1/4,1"));
    CHECK(Y.at(1, 5) == Letter(3, false));
    CHECK(Y.at(2, 3) == Letter(1, false));
    CHECK(Y.at(2, 4) == Letter(2, false));
    CHECK(Y.at(3, 3) == Letter(4, false));
}

TEST_CASE("switching agrees with infusion on standard pairs (desk scale)") {
    for (auto& lambda : strict_partitions_up_to(6)) {
        for (auto& mu : strict_partitions_up_to(lambda.size())) {
            if (!lambda.contains(mu) || mu.empty() || lambda.size() == mu.size()) continue;
            for (auto& [S, T] : extension_pairs(lambda, mu)) {
                auto [A1, A2] = sw(S, T);
                auto [B1, B2] = infusion(S, T);
                CHECK(A1 == B1);
                CHECK(A2 == B2);
                // involution through the switching route as well
                auto [S2, T2] = sw(A1, A2);
                CHECK(S2 == S);
                CHECK(T2 == T);
            }
        }
    }
}

TEST_CASE("semistandard switching factors through standardization") {
    for (auto& lambda : strict_partitions_up_to(5)) {
        for (auto& mu : strict_partitions_up_to(lambda.size())) {
            if (!lambda.contains(mu) || mu.empty() || lambda.size() == mu.size()) continue;
            auto Ss = enumerate_all(SkewShape{mu, StrictPartition()}, 2);
            auto Ts = enumerate_all(SkewShape{lambda, mu}, 2);
            for (auto& S : Ss)
                for (auto& T : Ts) {
                    auto [A1, A2] = sw(S, T);
                    auto [B1, B2] = sw_via_infusion(S, T);
                    CHECK(A1 == B1);
                    CHECK(A2 == B2);
                    CHECK(rect(A1) == rect(T));
                    CHECK(rect(A2) == rect(S));
                }
        }
    }
}

TEST_CASE("sp_ij and sw_given act inside one tableau") {
    // SP_{2,3} on 1 1 2' 2 3 / 2 2 3' / 3
    auto T = tab("1 1 2' 2 3\n. 2 2 3'\n. . 3", 3);
    std::vector<std::string> log;
    Filling raw = sp_ij(T.filling(), 2, 3, &log);
    CHECK(log == std::vector<std::string>{"S6", "S4", "S1", "S1"});
    CHECK(raw.at(1, 3) == Letter(3, true));
    CHECK(raw.at(1, 4) == Letter(3, false));
    CHECK(raw.at(1, 5) == Letter(2, true));
    CHECK(raw.at(2, 2) == Letter(3, false));
    CHECK(raw.at(2, 3) == Letter(2, true));
    CHECK(raw.at(2, 4) == Letter(2, false));
    CHECK(raw.at(3, 3) == Letter(2, false));

    // SW_{1|2,3} = SP_{1,3} SP_{1,2}, with the chains of the worked example
    std::vector<std::string> log12, log13;
    Filling f = sp_ij(T.filling(), 1, 2, &log12);
    CHECK(log12 == std::vector<std::string>{"S5", "S6", "S3"});
    f = sp_ij(f, 1, 3, &log13);
    CHECK(log13 == std::vector<std::string>{"S5", "S3"});
    CHECK(f == sw_given(T, 1, {2, 3}));
    CHECK(f.at(1, 1) == Letter(2, false));
    CHECK(f.at(2, 2) == Letter(3, false));
    CHECK(f.at(2, 4) == Letter(1, false));
    CHECK(f.at(3, 3) == Letter(1, false));
}
