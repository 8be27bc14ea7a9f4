#include "doctest.h"

#include <cmath>

#include "vilenkin/io.hpp"
#include "vilenkin/verify.hpp"

using namespace vilenkin;

TEST_CASE("grid function JSON round trip") {
    const auto g = make_group({2, 3}, 4);
    const auto f = random_function(g, 3, 7);
    const auto text = grid_to_json(f);
    CHECK(text.rfind(R"({"m":[2,3,2,3],"resolution":3,"values":[[)", 0) == 0);
    const auto back = grid_from_json(text);
    CHECK(back.group() == g);
    CHECK(back.resolution() == 3);
    CHECK(max_abs_diff(back, f) == 0.0);

    CHECK_THROWS_AS(grid_from_json(R"({"m":[2],"resolution":1,"values":[[1,0]]})"), Error);
    CHECK_THROWS_AS(grid_from_json(R"({"m":[2],"resolution":2,"values":[]})"), Error);
    CHECK_THROWS_AS(grid_from_json(R"({"m":[1],"resolution":0,"values":[[1,0]]})"), Error);
    CHECK_THROWS_AS(grid_from_json(R"({"m":[2],"resolution":0})"), Error);
    CHECK_THROWS_AS(grid_from_json("{not json"), Error);
    const auto one = grid_from_json(R"({"m":[3],"resolution":1,"values":[[1,0],[0,1],["inf",0]]})");
    CHECK(std::isinf(one[2].real()));
}

TEST_CASE("martingale JSON round trip") {
    const auto g = make_group({3}, 3);
    const auto mart = regular_martingale(random_function(g, 3, 11));
    const auto back = martingale_from_json(martingale_to_json(mart));
    REQUIRE(back.size() == mart.size());
    CHECK(back.levels() == mart.levels());
    for (std::size_t i = 0; i < mart.size(); ++i) CHECK(max_abs_diff(back.entries()[i], mart.entries()[i]) == 0.0);
    // Entries that are not conditional expectations of each other are rejected.
    CHECK_THROWS_AS(martingale_from_json(R"({"m":[2],"levels":[0,1],"entries":[
        {"m":[2],"resolution":0,"values":[[1,0]]},{"m":[2],"resolution":1,"values":[[0,0],[0,0]]}]})"),
                    Error);
    CHECK_THROWS_AS(martingale_from_json(R"({"m":[2],"levels":[0],"entries":[]})"), Error);
}

TEST_CASE("report JSON and CSV") {
    std::vector<VerificationRecord> rs;
    rs.push_back(upper_check("s", "var1.upper", {{"m", "2,3"}, {"n", "5"}}, 1.5, 2.0, 1e-10));
    rs.push_back(report("s", "Dn", {{"m", "2"}}, std::numeric_limits<double>::infinity(), "sup, \"quoted\""));
    rs.push_back(trend_record("s", "theorem1T.trend", {}, std::vector<double>{0.1, 0.05}));
    const auto back = records_from_json(records_to_json(rs));
    REQUIRE(back.size() == 3);
    CHECK(back[0].claim == "var1.upper");
    CHECK(back[0].params == rs[0].params);
    CHECK(back[0].margin == 0.5);
    CHECK(std::isinf(back[1].value));
    CHECK(back[1].kind == RecordKind::report);
    CHECK(back[1].note == rs[1].note);
    CHECK_FALSE(back[2].pass);
    CHECK(back[2].kind == RecordKind::trend);
    CHECK(records_to_json(back) == records_to_json(rs));

    const auto csv = records_to_csv(rs);
    CHECK(csv.rfind("suite,claim,params,value,bound,margin,pass,tolerance,kind,note\n", 0) == 0);
    CHECK(csv.find(R"(s,var1.upper,"m=2,3;n=5",1.5,2,0.5,true,1e-10,check,)") != std::string::npos);
    CHECK(csv.find(R"("sup, ""quoted""")") != std::string::npos);
}

TEST_CASE("tables") {
    Table t{{"n", "x", "label"}, {{"1", "0.10000000000000001", "a,b"}, {"2", "inf", "true"}}};
    CHECK(to_csv(t) == "n,x,label\n1,0.10000000000000001,\"a,b\"\n2,inf,true\n");
    const auto j = to_json(t);
    CHECK(j.find("\"n\": 1,") != std::string::npos);
    CHECK(j.find("\"x\": 0.1,") != std::string::npos);
    CHECK(j.find("\"x\": \"inf\"") != std::string::npos);
    CHECK(j.find("\"label\": true") != std::string::npos);
    CHECK(format_number(0.1) == "0.10000000000000001");
}
