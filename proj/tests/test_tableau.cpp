#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace shtab;
using th::tab;
using th::part;

TEST_CASE("canonical-form running example: reading word and weight") {
    // shape (5,3,1)/(1), n = 3
    auto T = tab("# 1 1 2' 2\n"
                 ". 2 3'\n"
                 ". . 3",
                 3);
    CHECK(T.shape().outer == part("5,2,1"));
    CHECK(T.shape().inner == part("1"));
    CHECK(T.reading_word() == parse_word("323'112'2"));
    CHECK(T.wt() == std::vector<int>{2, 3, 2});
    CHECK_FALSE(T.is_standard());
}

TEST_CASE("construction canonicalizes and validates") {
    // a primed letter in leftmost reading position gets unprimed
    auto sh = parse_shape("2");
    std::map<Cell, Letter> e{{{1, 1}, Letter(1, true)}, {{1, 2}, Letter(1, false)}};
    CHECK_THROWS_AS( // two unprimed 1s in a row is fine, but in a column...
        ShiftedTableau(Filling(parse_shape("2,1"),
                               std::map<Cell, Letter>{{{1, 1}, Letter(1, false)},
                                                      {{1, 2}, Letter(1, false)},
                                                      {{2, 2}, Letter(1, false)}}),
                       2),
        std::invalid_argument);
    ShiftedTableau T(Filling(sh, e), 1);
    CHECK_FALSE(T.at(1, 1).primed);

    // decreasing row rejected
    CHECK_THROWS_AS(tab("2 1", 2), std::invalid_argument);
    // two primed 2s in a row rejected (prime the non-leftmost occurrences)
    CHECK_THROWS_AS(tab("1 2' 2'\n. 2", 2), std::invalid_argument);
    // letter above the alphabet bound
    CHECK_THROWS_AS(tab("1 3", 2), std::invalid_argument);
}

TEST_CASE("standardization example and its inverse") {
    // T = 1 1 2' 2 / 2 2 / 3 on (4,2,1), n = 3
    auto T = tab("1 1 2' 2\n. 2 2\n. . 3", 3);
    CHECK(T.reading_word() == parse_word("322112'2"));
    auto S = standardize(T);
    CHECK(S == tab("1 2 3 6\n. 4 5\n. . 7", 7));
    CHECK(S.is_standard());
    // sstd_nu inverts std for nu = wt(T) = (2,4,1)
    auto back = semistandardize(S, {2, 4, 1});
    REQUIRE(back.has_value());
    CHECK(*back == T);
}

TEST_CASE("standardization respects the primed-before-unprimed order") {
    for (auto& sh : skew_shapes_up_to(5))
        for (auto& T : enumerate_all(sh, 3)) {
            auto S = standardize(T);
            CHECK(S.is_standard());
            CHECK(standardize_word(T.reading_word()) == S.reading_word());
            auto back = semistandardize(S, T.wt());
            REQUIRE(back.has_value());
            CHECK(*back == T);
        }
}

TEST_CASE("semistandardize rejects inadmissible weights") {
    auto S = tab("1 2 3\n. 4", 4);
    // nu = (1,1,1,1) gives back S
    auto same = semistandardize(S, {1, 1, 1, 1});
    REQUIRE(same.has_value());
    CHECK(*same == S);
    CHECK_THROWS_AS(semistandardize(S, {2, 1}), std::invalid_argument); // |nu| mismatch
    // nu = (3,1): entries 1,2,3 would merge; cells (1,1),(1,2),(1,3) row -> fine,
    // but 3 sits at (1,3) and 4 at (2,2): merged letters stay semistandard -> defined
    auto m = semistandardize(S, {3, 1});
    if (m) CHECK(m->wt() == std::vector<int>{3, 1});
}

TEST_CASE("restrict cuts out letter intervals") {
    auto T = tab("1 1 2' 2\n. 2 2\n. . 3", 3);
    auto low = restrict(T, 1, 1);
    CHECK(low.shape().outer == part("2"));
    CHECK(low.shape().inner.empty());
    auto mid = restrict(T, 2, 2);
    CHECK(mid.shape().outer == part("4,2"));
    CHECK(mid.shape().inner == part("2"));
    CHECK(mid.num_cells() == 4);
    auto top = restrict(T, 3, 3);
    CHECK(top.shape().outer == part("4,2,1"));
    CHECK(top.shape().inner == part("4,2"));
    // strips reassemble: every cell belongs to exactly one strip
    int cells = 0;
    for (int v = 1; v <= 3; ++v) cells += (int)T.strip_cells(v).size();
    CHECK(cells == T.num_cells());
}

TEST_CASE("border strips") {
    auto T = tab("1 1 2' 2\n. 2 2\n. . 3", 3);
    CHECK(border_strip(T, 1).num_cells() == 2);
    CHECK(border_strip(T, 2).num_cells() == 4);
    // every strip of a semistandard tableau is a border strip
    for (auto& U : enumerate_all(parse_shape("4,2,1"), 3))
        for (int v = 1; v <= 3; ++v)
            if (!U.strip_cells(v).empty()) CHECK_NOTHROW(border_strip(U, v));
}

TEST_CASE("yamanouchi tableaux are LRS seeds") {
    auto Y = yamanouchi(part("3,1"), 3);
    CHECK(Y == tab("1 1 1\n. 2", 3));
    CHECK(Y.wt() == std::vector<int>{3, 1, 0});
}

TEST_CASE("enumeration: standard counts and weight filters") {
    CHECK(standard_tableaux(parse_shape("3,1")).size() == 2);
    CHECK(standard_tableaux(parse_shape("4,2,1")).size() == 7);
    // enumerate_by_weight partitions enumerate_all by weight
    auto sh = parse_shape("3,1");
    auto all = enumerate_all(sh, 2);
    long long by_wt = 0;
    for (int a = 0; a <= 4; ++a) {
        std::vector<int> nu{a, 4 - a};
        by_wt += (long long)enumerate_by_weight(sh, nu).size();
    }
    CHECK(by_wt == (long long)all.size());
    CHECK(count(sh, 2) == (long long)all.size());
    // all enumerated tableaux are distinct and canonical
    std::set<ShiftedTableau> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
}

TEST_CASE("apply_permutation relabels entries and recanonicalizes the filling") {
    auto T = tab("1 1 2' 2\n. 2 2\n. . 3", 3);
    Filling img = apply_permutation(Permutation::theta_range(1, 3, 3), T.filling());
    // values swapped 1 <-> 3; the raw filling is not a tableau, but the
    // entries are exactly the relabeled ones in canonical reading form
    CHECK(img.at(3, 3).value == 1);
    CHECK(img.at(1, 1).value == 3);
    CHECK(img.at(1, 3) == Letter(2, true));
    // leftmost reading occurrence of each value is unprimed
    CHECK_FALSE(img.at(3, 3).primed);
}
