#include "fpsl/binomial.hpp"
#include "fpsl/transforms.hpp"

#include <doctest.h>

using namespace fpsl;

namespace {

void all_pass(const Verifier& v)
{
    CHECK(!v.checks().empty());
    for (const auto& c : v.checks())
        CHECK_MESSAGE(c.pass, (c.id + " " + c.location + " " + c.detail));
}

RSeries expm1(int ord)
{
    return exp_linear(1, ord) - RSeries::one(ord);
}

} // namespace

TEST_CASE("binomial-type families")
{
    auto fx = family_from_f(RSeries::x(8), 8);
    auto fe = family_from_f(expm1(8), 8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(fx.p[n] == AlphaPoly::monomial(n));
        CHECK(fe.p[n] == falling_factorial<AlphaVar>(n));
        if (n > 0)
            CHECK(apply_opseries(expm1(8), fe.p[n]) == fe.p[n - 1] * AlphaPoly(Rat(n)));
    }
    auto nu = family_from_f(transform_T_inv(shift(exp_linear(-1, 5), 1)), 4);
    CHECK(nu.p[2] == AlphaPoly(std::vector<Rat>{0, -2, 1}));
}

TEST_CASE("family binomial convolution")
{
    auto fam = family_from_f(random_normalized(4, 7), 6);
    Rat a(2, 3), b(-5, 7);
    for (int n = 0; n <= 6; ++n) {
        Rat sum = 0;
        for (int k = 0; k <= n; ++k)
            sum += Rat(binomial(n, k)) * fam.p[k].eval(a) * fam.p[n - k].eval(b);
        CHECK(sum == fam.p[n].eval(a + b));
    }
}

TEST_CASE("canonical continuation")
{
    int d = 6;
    auto cx = continuation_from_f(RSeries::x(d), d);
    CHECK(!compare(cx.ps, AlphaExpr::power(0, 1, d)));
    CHECK(!compare(ps_dot(cx), AlphaExpr(0, 1, d, {}, {SPoly(Rat(1))})));
    for (unsigned seed = 1; seed <= 4; ++seed) {
        auto f = random_normalized(seed, 9);
        auto c = continuation_from_f(f, 8);
        Rat f2 = 2 * f.coeff(2);
        CHECK(continuation_polynomial(c, 2) == AlphaPoly::var() * AlphaPoly(std::vector<Rat>{-f2, 1}));
        auto fam = family_from_f(f, 6);
        for (int m = 0; m <= 6; ++m)
            CHECK(continuation_polynomial(c, m) == fam.p[m]);
    }
    CHECK_THROWS_AS(continuation_from_f(RSeries::x(3), 6), Error);
}

TEST_CASE("derivative in s at s = 0 and s = 1")
{
    for (unsigned seed = 5; seed <= 7; ++seed) {
        Verifier v;
        auto f = random_normalized(seed, 13);
        verify_pdot_endpoints(v, f, 12, "f");
        verify_pdot_operator_images(v, f, 12, "f");
        verify_continuation(v, f, 12, "f");
        verify_family(v, f, 8, "f");
        all_pass(v);
    }
}

TEST_CASE("exponential and reflection families")
{
    Verifier v;
    verify_delta_exp_continuation(v, 1, 0, 10);
    verify_delta_exp_continuation(v, Rat(1, 2), Rat(-1, 3), 10);
    verify_delta_family_reflection(v, 2, Rat(1, 3), 10);
    verify_x_minus_x2_reflection(v, 12);
    all_pass(v);
}

TEST_CASE("reflection solution family and its negative control")
{
    Verifier v;
    verify_reflection_family(v, 1, 1, -1, 10);
    verify_reflection_family(v, 2, Rat(1, 2), Rat(1, 2), 10);
    verify_reflection_control(v, 10);
    all_pass(v);
    auto f = expm1(11);
    CHECK(!reflection_holds(f, RSeries::x(11), 10));
    CHECK(reflection_holds(f, f, 10));
}

TEST_CASE("shift structure and nu")
{
    Verifier v;
    verify_shift_structure(v, 3, 8, 10);
    verify_nu_property(v, 8);
    all_pass(v);
}

TEST_CASE("Delta builders")
{
    CHECK(!first_mismatch(delta_exp(0, 1, 8), shift(exp_linear(-1, 7), 1), 8));
    CHECK(!first_mismatch(delta_exp(1, 0, 8), expm1(8), 8));
    CHECK(!first_mismatch(delta_family(1, 0, 8), expm1(8), 8));
}
