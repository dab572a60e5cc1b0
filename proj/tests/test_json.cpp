#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invint/json_io.hpp"

using namespace invint;

TEST_CASE("polynomial json round trip and documented encoding") {
    Poly det2 = poly_det(2);
    json j = poly_to_json(det2);
    CHECK(j["n"] == 2);
    CHECK(poly_from_json(j) == det2);

    // the documented encoding parses to the expected polynomial
    json doc = json::parse(R"({"n": 2, "terms": [
        {"coeff": "1", "exps": {"x11": 1, "x22": 1}},
        {"coeff": "-1", "exps": {"x12": 1, "x21": 1}}]})");
    CHECK(poly_from_json(doc) == det2);

    // fractional coefficients
    json frac = json::parse(R"({"n": 1, "terms": [{"coeff": "3/6", "exps": {"x11": 2}}]})");
    Poly p = poly_from_json(frac);
    CHECK(p == Rat(Int(1), Int(2)) * (Poly::variable(1, 1, 1) * Poly::variable(1, 1, 1)));
    // zero polynomial
    CHECK(poly_from_json(json::parse(R"({"n": 2, "terms": []})")).is_zero());
}

TEST_CASE("polynomial json errors name the field") {
    CHECK_THROWS_WITH_AS(poly_from_json(json::parse(R"({"terms": []})")),
                         doctest::Contains("missing field \"n\""), error);
    CHECK_THROWS_WITH_AS(
        poly_from_json(json::parse(R"({"n": 2, "terms": [{"coeff": "1", "exps": {"x13": 1}}]})")),
        doctest::Contains("x13"), error);
    CHECK_THROWS_WITH_AS(
        poly_from_json(json::parse(R"({"n": 2, "terms": [{"coeff": "1", "exps": {"y11": 1}}]})")),
        doctest::Contains("y11"), error);
    CHECK_THROWS_WITH_AS(
        poly_from_json(json::parse(R"({"n": 2, "terms": [{"coeff": "x", "exps": {}}]})")),
        doctest::Contains("coeff"), error);
    CHECK_THROWS_AS(
        poly_from_json(json::parse(R"({"n": 2, "terms": [{"coeff": "1", "exps": {"x11": 0}}]})")),
        error);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"({"n": 10, "terms": []})")), error);
}

TEST_CASE("tensor json round trip") {
    Metric met = metric(GroupKind::Symplectic, 2);
    json j = tensor_to_json(met.g);
    CHECK(j["dim"] == 2);
    CHECK(j["axes"] == json::array({"c", "c"}));
    CHECK(j["entries"] == json::array({"0", "-1", "1", "0"}));
    CHECK(tensor_from_json(j) == met.g);

    Tensor s = Tensor::scalar(3, Rat(Int(2), Int(3)));
    CHECK(tensor_from_json(tensor_to_json(s)) == s);

    CHECK_THROWS_WITH_AS(tensor_from_json(json::parse(R"({"dim": 2, "axes": ["x"], "entries": []})")),
                         doctest::Contains("axis tag"), error);
    CHECK_THROWS_WITH_AS(
        tensor_from_json(json::parse(R"({"dim": 2, "axes": ["v"], "entries": ["1"]})")),
        doctest::Contains("entries"), error);
}

TEST_CASE("weingarten table json and csv") {
    WeingartenTable t = weingarten_coefficients(2, 3, GroupKind::Orthogonal);
    json j = table_to_json(t);
    CHECK(j["kind"] == "O");
    CHECK(j["dim"] == 3);
    CHECK(j["degree"] == 2);
    CHECK(j["coeffs"].size() == 2);
    CHECK(j["coeffs"][0]["cycle_type"] == json::array({2}));

    WeingartenTable back = table_from_json(j);
    CHECK(back.kind == t.kind);
    CHECK(back.dim == t.dim);
    for (size_t i = 0; i < t.coeffs.size(); ++i) {
        CHECK(back.coeffs[i].first == t.coeffs[i].first);
        CHECK(back.coeffs[i].second == t.coeffs[i].second);
    }

    std::string csv = table_to_csv(t);
    CHECK(csv.find("kind,dim,degree,cycle_type,coeff\n") == 0);
    CHECK(csv.find("O,3,2,2,") != std::string::npos);
    CHECK(csv.find("O,3,2,1+1,") != std::string::npos);
}

TEST_CASE("all shipped group tables load and validate") {
    for (const char* name : {"s3", "c2", "c2c2", "d4"}) {
        auto g = group_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name +
                                            ".group.json"));
        auto irr = irreps_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name +
                                               ".irreps.json"));
        REQUIRE(irr.rational);
        irr.rat.validate(g);
    }
    for (const char* name : {"c3", "c5"}) {
        auto g = group_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name +
                                            ".group.json"));
        auto irr = irreps_from_json(parse_file(std::string(INVINT_DATA_DIR) + "/groups/" + name +
                                               ".irreps.json"));
        REQUIRE_FALSE(irr.rational);
        irr.cplx.validate(g);
    }
}

TEST_CASE("group json errors") {
    CHECK_THROWS_WITH_AS(group_from_json(json::parse(R"({"mul": []})")),
                         doctest::Contains("order"), error);
    CHECK_THROWS_WITH_AS(group_from_json(json::parse(R"({"order": 2, "mul": [[0, 1]]})")),
                         doctest::Contains("mul"), error);
    // associativity failure detected at load
    CHECK_THROWS_AS(group_from_json(json::parse(
                        R"({"order": 3, "mul": [[0,1,2],[1,0,0],[2,0,1]]})")),
                    error);
    CHECK_THROWS_AS(parse_file("/nonexistent/path.json"), error);
}

TEST_CASE("function value parsing") {
    auto v = rat_values_from_json(json::parse(R"(["1", "-2/3", 4])"));
    REQUIRE(v.size() == 3);
    CHECK(v[1] == Rat(Int(-2), Int(3)));
    CHECK(v[2] == Rat(4));
    auto c = cplx_values_from_json(json::parse(R"([{"re": 1.5, "im": -2}, "1/2"])"));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == fg::Cplx{1.5, -2});
    CHECK(std::abs(c[1] - fg::Cplx{0.5, 0}) < 1e-15);
    CHECK_THROWS_AS(rat_values_from_json(json::parse(R"({"a": 1})")), error);
}
