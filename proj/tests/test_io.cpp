#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace shtab;
using th::tab;
using th::part;

TEST_CASE("text round trip over enumerated tableaux") {
    for (auto& sh : skew_shapes_up_to(5))
        for (auto& T : enumerate_all(sh, 3)) {
            auto back = io::from_text(io::to_text(T), T.n());
            CHECK(back == T);
        }
}

TEST_CASE("text format details") {
    auto T = tab("# 1 1 2' 2\n. 2 3'\n. . 3", 3);
    CHECK(io::to_text(T) == "# 1 1 2' 2\n. 2 3'\n. . 3\n");
    CHECK_THROWS_AS(io::from_text("1 .\n", 1), std::invalid_argument);
    CHECK_THROWS_AS(io::from_text("1 #\n", 1), std::invalid_argument);
    // n defaults to the largest value present
    CHECK(io::from_text("1 2\n").n() == 2);
}

TEST_CASE("json round trip") {
    for (auto& sh : skew_shapes_up_to(4))
        for (auto& T : enumerate_all(sh, 3)) {
            auto j = io::to_json(T);
            CHECK(io::tableau_from_json(j) == T);
        }
    auto T = tab("# 1 1 2' 2\n. 2 3'\n. . 3", 3);
    auto j = io::to_json(T);
    CHECK(j.at("outer") == "5,2,1");
    CHECK(j.at("inner") == "1");
    CHECK(j.at("n") == 3);
}

TEST_CASE("slide records round trip") {
    auto T = tab("# # # 1 3\n. # 2 5\n. . 4", 5);
    auto [R, rec] = rectify(T);
    auto j = io::record_to_json(rec);
    auto back = io::record_from_json(j);
    REQUIRE(back.size() == rec.size());
    for (size_t k = 0; k < rec.size(); ++k) CHECK(back[k] == rec[k]);
}

TEST_CASE("growth grids serialize rows and segments") {
    auto T = tab("# # # 1 3\n. # 2 5\n. . 4", 5);
    auto order = th::chain({"-", "1", "2", "3", "3,1"});
    auto g = rectification_grid(order, chain_of(T));
    auto j = io::grid_to_json(g);
    CHECK(j.at("rows").size() == 5);
    CHECK(j.at("rows")[0][0] == "3,1");
    CHECK(j.at("segments").contains("vacate"));
    CHECK(j.at("segments")["output"].back() == "4,1");

    auto text = io::grid_to_text(g);
    CHECK(text.find("5.3.1") != std::string::npos);
    CHECK(text.find("0") != std::string::npos); // the empty shape token
    // first line spells the input chain
    CHECK(text.substr(0, text.find('\n')).find("4.2") != std::string::npos);
}

TEST_CASE("relation reports serialize suite, failures and notes") {
    auto rep = verify_relations({}, "sbk-counterexamples");
    auto j = io::report_to_json(rep);
    CHECK(j.at("suite") == "sbk-counterexamples");
    CHECK(j.at("failures").empty());
    CHECK(j.at("witnesses").size() == 2);

    RelationReport bad;
    bad.suite = "demo";
    bad.failures.push_back({"t1 t1 = id", "3,1", "211'1"});
    auto jb = io::report_to_json(bad);
    CHECK(jb.at("failures")[0].at("word") == "t1 t1 = id");
    CHECK(jb.at("failures")[0].at("tableau") == "3,1 : 211'1");
}
