#include <catch2/catch_amalgamated.hpp>

#include "octiso/report.hpp"

using namespace octiso;

TEST_CASE("form serialization lists the upper nonzero coefficients", "[report]") {
    auto R = ring::integers();
    ring_ctx c(R);
    auto A = zorn(c);
    auto j = form_json(c, A.norm);
    CHECK(j["rank"] == 8);
    auto& up = j["upper"];
    REQUIRE(up.is_array());
    CHECK(up.size() == 4);
    CHECK(up[0] == json::parse(R"([0,1,"1"])"));
    CHECK(up[1] == json::parse(R"([2,5,"-1"])"));
    CHECK(up[2] == json::parse(R"([3,6,"-1"])"));
    CHECK(up[3] == json::parse(R"([4,7,"-1"])"));
}

TEST_CASE("vectors and matrices serialize as scalar strings", "[report]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto v = parse_vector(c, "1,-2/3,0,0,0,0,0,5", 8);
    auto j = vec_json(c, v);
    CHECK(j[1] == "-2/3");
    // round trip through the literal grammar
    std::string joined;
    for (std::size_t i = 0; i < j.size(); ++i) joined += (i ? "," : "") + j[i].get<std::string>();
    CHECK(vec_eq(c, parse_vector(c, joined, 8), v));
    CHECK_THROWS_AS(parse_vector(c, "1,2,3", 8), parse_error);
    CHECK_THROWS_AS(parse_vector(c, "1,,3", 3), parse_error);
}

TEST_CASE("triple serialization exposes the three components", "[report]") {
    auto R = ring::gf(3);
    fq_ctx c(R);
    auto A = zorn(c);
    auto t = triple_identity(A);
    auto j = triple_json(c, t);
    REQUIRE(j.contains("t1"));
    REQUIRE(j.contains("t2"));
    REQUIRE(j.contains("t3"));
    CHECK(j["t1"].size() == 8);
    CHECK(j["t1"][0].size() == 8);
    CHECK(j["t2"][4][4] == "1");
    CHECK(j["t3"][4][5] == "0");
}

TEST_CASE("csv projection flattens depth first with quoting", "[report]") {
    json j;
    j["name"] = "demo";
    j["counts"] = {1, 2};
    j["nested"] = {{"inner", "a,b"}};
    auto csv = to_csv(j);
    CHECK(csv == "key,value\n"
                 "name,demo\n"
                 "counts[0],1\n"
                 "counts[1],2\n"
                 "nested.inner,\"a,b\"\n");
}

TEST_CASE("ordered json dumps preserve insertion order", "[report]") {
    json j;
    j["zeta"] = 1;
    j["alpha"] = 2;
    CHECK(j.dump() == R"({"zeta":1,"alpha":2})");
}
