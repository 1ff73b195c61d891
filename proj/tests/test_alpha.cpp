#include "fpsl/alpha.hpp"

#include <doctest.h>

using namespace fpsl;

namespace {

SPoly s_poly(std::vector<Rat> c)
{
    return SPoly(std::move(c));
}

bool same(const AlphaExpr& a, const AlphaExpr& b)
{
    return !compare(a, b).has_value();
}

} // namespace

TEST_CASE("exponent arithmetic")
{
    int d = 6;
    auto p = alpha_mul(AlphaExpr::power(0, 1, d), AlphaExpr::power(1, -2, d));
    CHECK(p.b() == -1);
    CHECK(same(p, AlphaExpr::power(1, -1, d)));
    auto q = alpha_div(AlphaExpr::power(3, 0, d, SPoly(Rat(2))), AlphaExpr::power(3, 0, d, SPoly(Rat(2))));
    CHECK(same(q, AlphaExpr::power(0, 0, d)));
}

TEST_CASE("logarithm")
{
    int d = 8;
    auto l = alpha_log(AlphaExpr::power(0, 1, d));
    CHECK(l.log_at(0) == s_poly({0, 1}));
    for (int n = 0; n < d; ++n)
        CHECK(l.plain_at(n).is_zero());

    // ln(alpha (1 + c/alpha)) = ln alpha + c/alpha - c^2/(2 alpha^2) + ...
    Rat c(2, 3);
    auto m = alpha_log(AlphaExpr(1, 0, d, {SPoly(Rat(1)), SPoly(c)}));
    CHECK(m.log_at(0) == SPoly(Rat(1)));
    for (int n = 1; n < d; ++n)
        CHECK(m.plain_at(n) == SPoly(pow_int(c, n) / Rat(n) * (n % 2 ? 1 : -1)));
    try {
        alpha_log(AlphaExpr::power(0, 0, d, SPoly(Rat(2))));
        FAIL("non-unit lead accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadLead);
    }
}

TEST_CASE("D acts on powers and logs")
{
    int d = 5;
    auto pw = apply_D(AlphaExpr(0, 1, d, {SPoly(Rat(1))}));
    // D alpha^s = s alpha^{s-1}
    CHECK(same(pw, AlphaExpr(-1, 1, d, {SPoly::var()})));
    // D(alpha^q ln alpha) at q = 3: alpha^2 + 3 alpha^2 ln alpha
    auto lg = apply_D(AlphaExpr(3, 0, d, {}, {SPoly(Rat(1))}));
    CHECK(same(lg, AlphaExpr(2, 0, d, {SPoly(Rat(1))}, {SPoly(Rat(3))})));
}

TEST_CASE("e^{cD} shifts ln alpha")
{
    int d = 8;
    Rat c(-3, 2);
    auto shifted = apply_opseries(exp_linear(c, d), AlphaExpr::ln_alpha(d));
    // ln(alpha + c) = ln alpha + sum (-1)^{n-1} c^n / (n alpha^n)
    std::vector<SPoly> plain(d);
    for (int n = 1; n < d; ++n)
        plain[n] = SPoly(pow_int(c, n) / Rat(n) * (n % 2 ? 1 : -1));
    CHECK(same(truncate_depth(shifted, d), AlphaExpr(0, 0, d, plain, {SPoly(Rat(1))})));
}

TEST_CASE("ln_g")
{
    int d = 7;
    CHECK(same(ln_g(RSeries::x(d), d), AlphaExpr::ln_alpha(d)));
    auto e = ln_g(exp_linear(1, d + 1) - RSeries::one(d + 1), d);
    // Bernoulli numbers -1/2, 1/6, 0, -1/30, 0, 1/42
    std::vector<Rat> bern{0, Rat(-1, 2), Rat(1, 6), 0, Rat(-1, 30), 0, Rat(1, 42)};
    for (int n = 1; n < d; ++n)
        CHECK(e.plain_at(n) == SPoly(bern[n] / Rat(n) * (n % 2 ? 1 : -1)));
    for (unsigned seed = 1; seed <= 3; ++seed) {
        auto g = random_normalized(seed, 11);
        auto lhs = apply_opseries(g, ln_g(g, 10));
        CHECK(same(lhs, AlphaExpr::power(-1, 0, 10)));
    }
}

TEST_CASE("d/ds")
{
    int d = 4;
    auto a = d_ds(AlphaExpr::power(0, 1, d));
    CHECK(same(a, AlphaExpr(0, 1, d, {}, {SPoly(Rat(1))})));
    auto s2 = SPoly(std::vector<Rat>{0, 0, 1});
    auto b = d_ds(AlphaExpr::power(-1, 1, d, s2));
    CHECK(same(b, AlphaExpr(-1, 1, d, {SPoly(std::vector<Rat>{0, 2})}, {s2})));
}

TEST_CASE("error kinds")
{
    int d = 4;
    auto l = AlphaExpr::ln_alpha(d);
    try {
        alpha_mul(l, l);
        FAIL("ln^2 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LogDegreeOverflow);
    }
    try {
        alpha_div(AlphaExpr::power(0, 0, d), l);
        FAIL("division by a log term accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LogDegreeOverflow);
    }
    try {
        alpha_div(AlphaExpr::power(0, 0, d), AlphaExpr(0, 0, d, {SPoly(), SPoly(Rat(1))}));
        FAIL("zero lead divisor accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadLead);
    }
    try {
        alpha_log(l);
        FAIL("log of a log term accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadLead);
    }
    try {
        (void)(AlphaExpr::power(0, 1, d) + AlphaExpr::power(0, 2, d));
        FAIL("mixed families added");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IncompatibleExponents);
    }
}

TEST_CASE("mismatch location")
{
    int d = 5;
    auto a = AlphaExpr::power(2, 1, d);
    auto b = a.with_plain(3, SPoly(std::vector<Rat>{0, 0, 1}));
    auto m = compare(a, b);
    REQUIRE(m);
    CHECK(m->offset == 3);
    CHECK(m->log_power == 0);
    CHECK(m->s_degree == 2);
    CHECK(!compare(a, a.realign(4)));
}

TEST_CASE("polynomial action of g(D)")
{
    // e^{-D} alpha^3 = (alpha - 1)^3
    auto q = apply_opseries(exp_linear(-1, 3), AlphaPoly::monomial(3));
    CHECK(q == AlphaPoly(std::vector<Rat>{-1, 3, -3, 1}));
    try {
        apply_opseries(exp_linear(-1, 2), AlphaPoly::monomial(3));
        FAIL("short operator series accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientOrder);
    }
}
