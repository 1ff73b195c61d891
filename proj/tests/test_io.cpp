#include "io.hpp"

#include "fpsl/binomial.hpp"

#include <doctest.h>

using namespace fpsl;

TEST_CASE("series JSON layout")
{
    auto f = polynomial_series({0, 1, Rat(-1, 2), rat(4, 6)}, 3);
    CHECK(io::dump(io::to_json(f))
        == R"({"variable":"x","valuation":1,"order":3,"coefficients":["1","-1/2","2/3"]})");
    CHECK(io::dump(io::to_json(RSeries::zero(2))) == R"({"variable":"x","valuation":3,"order":2,"coefficients":[]})");
    CHECK(io::dump(io::to_json(SPoly(std::vector<Rat>{1, Rat(3, 2)}))) == R"({"s_poly":["1","3/2"]})");
    CHECK(io::dump(io::to_json(AlphaPoly::var())) == R"({"alpha_poly":["0","1"]})");
}

TEST_CASE("round trips are byte-identical")
{
    for (unsigned seed = 1; seed <= 6; ++seed) {
        auto f = random_normalized(seed, 10);
        std::string once = io::dump(io::to_json(f));
        CHECK(io::canonical(once) == once);
        CHECK(io::series_from_json(io::Json::parse(once)) == f);

        auto c = continuation_from_f(f, 6);
        std::string ps = io::dump(io::to_json(c.ps));
        CHECK(io::canonical(ps) == ps);
        CHECK(!compare(io::alpha_expr_from_json(io::Json::parse(ps)), c.ps));

        auto s = io::dump(io::to_json(series_pow(lift<SPoly>(exp_linear(1, 4)), SPoly::var())));
        CHECK(io::canonical(s) == s);

        auto fam = family_from_f(f, 5);
        io::Json list = io::Json::array();
        for (const auto& p : fam.p)
            list.push_back(io::to_json(p));
        CHECK(io::canonical(io::dump(list)) == io::dump(list));
    }
    auto log = io::dump(io::to_json(AlphaExpr::ln_alpha(3)));
    CHECK(io::canonical(log) == log);
}

TEST_CASE("malformed documents are rejected")
{
    for (const char* bad : {
             R"({"variable":"y","valuation":1,"order":3,"coefficients":["1"]})",
             R"({"variable":"x","valuation":1,"order":2,"coefficients":["1","2","3"]})",
             R"({"variable":"x","valuation":1,"order":3,"coefficients":[1]})",
             R"({"variable":"x","order":3,"coefficients":["1"]})",
             R"({"s_poly":["1/0"]})",
             "[1,",
         }) {
        CAPTURE(bad);
        CHECK_THROWS_AS(io::canonical(bad), Error);
    }
}
