#include "doctest.h"

#include "saito/parser.hpp"
#include "saito/report.hpp"

using namespace saito;

TEST_CASE("load_group_spec parses and validates") {
    Json z5 = {{"schema", 1}, {"name", "Z5"}, {"rank", 1}, {"invariants", {"u1^5"}}};
    GroupSpec g = load_group_spec(z5);
    CHECK(g.rank == 1);
    CHECK(g.degrees == std::vector<int>{5});
    CHECK(g.variables == std::vector<std::string>{"u1"});

    Json g312 = {{"rank", 2}, {"invariants", {"u1^3*u2^3", "u1^3 + u2^3"}}};
    GroupSpec h = load_group_spec(g312);
    CHECK(h.degrees == std::vector<int>{6, 3});

    Json dep = {{"rank", 2}, {"invariants", {"u1^2", "u1^2"}}};
    CHECK_THROWS_AS(load_group_spec(dep), std::invalid_argument);

    Json badschema = {{"schema", 2}, {"rank", 1}, {"invariants", {"u1^5"}}};
    CHECK_THROWS_AS(load_group_spec(badschema), std::invalid_argument);

    Json baddeg = {{"rank", 2}, {"invariants", {"u1^3*u2^3", "u1^3 + u2^3"}}, {"degrees", {6, 2}}};
    CHECK_THROWS_AS(load_group_spec(baddeg), std::invalid_argument);
}

TEST_CASE("group spec round-trips through JSON") {
    GroupSpec g = make_group_by_name("G3_1_2");
    Json doc = group_spec_to_json(g);
    GroupSpec h = load_group_spec(doc);
    CHECK(h.rank == g.rank);
    CHECK(h.degrees == g.degrees);
    for (int i = 0; i < g.rank; ++i) CHECK(h.invariants[i] == g.invariants[i]);
}

TEST_CASE("report JSON has the fixed shape and is deterministic") {
    Report r;
    r.group = "Z5";
    r.command = "natural";
    r.add_check("unit", true);
    r.add_check("assoc", false, "witness (1,1,1)");
    r.data["Btilde"] = Json::object();
    r.data["Btilde"]["(1,1,1)"] = "5/u1";

    Json doc = r.to_json();
    CHECK(doc["schema"] == 1);
    CHECK(doc["group"] == "Z5");
    CHECK(doc["checks"][0]["status"] == "pass");
    CHECK(doc["checks"][1]["status"] == "fail");
    CHECK(doc["data"]["Btilde"]["(1,1,1)"] == "5/u1");
    CHECK_FALSE(r.all_pass());
    CHECK(doc.dump() == r.to_json().dump());

    Report empty;
    empty.group = "Z5";
    empty.command = "verify";
    CHECK(empty.to_json()["checks"] == Json::array());
    CHECK(empty.all_pass());
}

TEST_CASE("serialized tensors re-parse to the same values") {
    std::vector<std::string> uv = {"u1", "u2"};
    RatFn zero = RatFn::zero(uv);
    RatFnMatrix b1(2, 2, zero), b2(2, 2, zero);
    b1.at(0, 0) = RatFn(parse_poly("3*u1^2", uv), parse_poly("u1^3 - u2^3", uv)) +
                  RatFn(parse_poly("3", uv), parse_poly("u1", uv));
    b1.at(1, 0) = RatFn(parse_poly("-3*u1*u2", uv), parse_poly("u1^3 - u2^3", uv));
    b1.at(0, 1) = RatFn(parse_poly("-3*u2^2", uv), parse_poly("u1^3 - u2^3", uv));
    Json t = tensor_to_json({b1, b2});
    for (const auto& [key, val] : t.items()) {
        // keys look like "(i,j,k)"; every reported entry must parse back
        int i = key[1] - '1', j = key[3] - '1', k = key[5] - '1';
        CHECK(i == 0);
        CHECK(parse_ratfn(val.get<std::string>(), uv).equals(b1.at(k, j)));
    }
    CHECK(t.size() == 3);  // zeros omitted
}

TEST_CASE("text rendering mentions every check") {
    Report r;
    r.group = "B2";
    r.command = "compare";
    r.add_check("same-structure", true, "difference tensor vanishes");
    std::string text = r.to_text();
    CHECK(text.find("compare B2") != std::string::npos);
    CHECK(text.find("[pass] same-structure") != std::string::npos);
}
