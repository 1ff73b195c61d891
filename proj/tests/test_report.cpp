#include "fpsl/report.hpp"
#include "fpsl/suites.hpp"

#include <doctest.h>

using namespace fpsl;

namespace {

const Check& only(const Verifier& v)
{
    REQUIRE(v.checks().size() == 1);
    return v.checks().front();
}

} // namespace

TEST_CASE("clean checks pass")
{
    Verifier v;
    auto f = exp_linear(1, 6);
    v.series("s", f, f);
    v.poly("p", AlphaPoly::monomial(3), AlphaPoly::monomial(3));
    v.alpha("a", AlphaExpr::power(0, 1, 4), AlphaExpr::power(0, 1, 4));
    v.value("v", Rat(1, 3), rat(2, 6));
    v.expect("e", true);
    v.basis("b", [](const AlphaPoly& q) { return q; }, [](const AlphaPoly& q) { return q; }, 4);
    for (const auto& c : v.checks())
        CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("fault locations by check kind")
{
    auto f = exp_linear(1, 8);
    {
        Verifier v(Fault{"s", 5});
        v.series("s", f, f);
        CHECK(!only(v).pass);
        CHECK(only(v).location == "x^5");
    }
    {
        Verifier v(Fault{"p", 2});
        v.poly("p", AlphaPoly::monomial(3), AlphaPoly::monomial(3));
        CHECK(only(v).location == "alpha^2");
    }
    {
        Verifier v(Fault{"a", 3});
        v.alpha("a", AlphaExpr::power(0, 1, 5), AlphaExpr::power(0, 1, 5));
        CHECK(!only(v).pass);
        CHECK(only(v).location == "tail 3 s^0");
    }
    {
        Verifier v(Fault{"v"});
        v.value("v", 1, 1);
        CHECK(only(v).location == "value");
    }
    {
        Verifier v(Fault{"b", 2});
        v.basis("b", [](const AlphaPoly& q) { return q; }, [](const AlphaPoly& q) { return q; }, 4);
        CHECK(only(v).location == "basis alpha^0, alpha^2");
    }
    {
        // a fault aimed elsewhere leaves this check alone
        Verifier v(Fault{"other", 1});
        v.series("s", f, f);
        CHECK(only(v).pass);
    }
}

TEST_CASE("comparisons never pass vacuously")
{
    Verifier v;
    v.series("short", RSeries::x(3), RSeries::x(3), 8);
    v.alpha("shallow", AlphaExpr::power(0, 0, 2), AlphaExpr::power(0, 0, 2), 4);
    for (const auto& c : v.checks())
        CHECK_MESSAGE(!c.pass, c.id);
}

TEST_CASE("errors inside a guarded body become failures")
{
    Verifier v;
    v.guarded("g", [] { throw Error(ErrorKind::DivByZero, "boom"); });
    CHECK(!only(v).pass);
    CHECK(only(v).detail.find("boom") != std::string::npos);
}

TEST_CASE("suites are deterministic and reject unknown names")
{
    SuiteOptions serial;
    serial.order = 8;
    SuiteOptions parallel = serial;
    parallel.parallel = true;
    auto a = run_suite("appendix-a", serial);
    auto b = run_suite("appendix-a", parallel);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].id == b.checks[i].id);
        CHECK(a.checks[i].pass == b.checks[i].pass);
    }
    CHECK(a.passed());
    try {
        run_suite("section9", serial);
        FAIL("unknown suite accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        CHECK(std::string(e.what()).find("appendix-b") != std::string::npos);
    }
    CHECK(run_suites("all", serial).size() == suite_names().size());
}
