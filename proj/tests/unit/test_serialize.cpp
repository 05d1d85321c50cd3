#include "support.hpp"

#include "localconst/errors.hpp"
#include "localconst/serialize.hpp"

using namespace localconst;

TEST_CASE("cyclotomic numbers round-trip") {
    auto g = testing::rng(50);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t m = 1 + i % 30;
        const auto x = testing::random_cyclotomic(g, m);
        const json j = to_json(x);
        CHECK(j.at("m") == m);
        CHECK(cyclotomic_from_json(json::parse(j.dump())) == x);
    }
    const auto big = CyclotomicNumber::rational(mpq_class("123456789012345678901234567890/7"));
    const json j = to_json(big);
    CHECK(j.at("num")[0].is_string());
    CHECK(cyclotomic_from_json(j) == big);
}

TEST_CASE("schema") {
    CHECK(to_json(CyclotomicNumber::rational(mpq_class(1, 2))).dump() == R"({"den":2,"m":1,"num":[1]})");
    CHECK(to_json(RootOfUnity(9, 1)).dump() == R"({"k":1,"m":9})");
    CHECK(root_from_json(json::parse(R"({"m":6,"k":3})")) == RootOfUnity(2, 1));
    const auto e = EpsilonValue::from(RootOfUnity(9, 2), 2, "p=3,f=1,N=6");
    const json j = to_json(e);
    CHECK(j.at("display") == "zeta_9^2");
    const auto back = epsilon_from_json(j);
    CHECK(back.value == e.value);
    CHECK(back.root == e.root);
    CHECK(back.field == e.field);
    CHECK_THROWS_AS(cyclotomic_from_json(json::parse(R"({"m":3,"num":[1],"den":0})")), ParseError);
    CHECK_THROWS_AS(root_from_json(json::parse(R"({"m":3})")), ParseError);
}

TEST_CASE("reports") {
    Report r;
    r.identity = "c6";
    r.params = {{"p", "3"}};
    r.lhs = root_of_unity(3, 1);
    r.rhs = root_of_unity(3, 1);
    r.settle();
    const json j = to_json(r);
    CHECK(j.at("equal") == true);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("timing").is_null());
    CHECK(j.at("params").at("p") == "3");
    CHECK(cyclotomic_from_json(j.at("lhs")) == *r.lhs);
}
