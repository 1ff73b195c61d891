#include "fpsl/opcalc.hpp"
#include "fpsl/eigen.hpp"
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

RSeries x_exp(int ord)
{
    return shift(exp_linear(-1, ord - 1), 1);
}

AlphaPoly apoly(std::vector<Rat> c)
{
    return AlphaPoly(std::move(c));
}

} // namespace

TEST_CASE("shift and derivation operators")
{
    CHECK(apply_Af(RSeries::x(4), AlphaPoly(Rat(1))) == AlphaPoly::var());
    auto f = random_normalized(9, 12);
    auto Af = shift_operator(f);
    auto Df = derivation_operator(f);
    auto comm = Df * Af - Af * Df;
    for (int m = 0; m <= 8; ++m)
        CHECK(comm.apply(AlphaPoly::monomial(m)) == AlphaPoly::monomial(m));
    auto Ae = shift_operator(expm1(10));
    for (int n = 0; n <= 6; ++n)
        CHECK(Ae.power(n).apply(AlphaPoly(Rat(1))) == falling_factorial<AlphaVar>(n));
}

TEST_CASE("polynomial family from a monic seed")
{
    for (int n = 1; n <= 4; ++n)
        CHECK(family_from_monic_seed(RSeries::x(8), AlphaPoly::monomial(n), n) == AlphaPoly::monomial(n));
    auto f = x_exp(10);
    CHECK(family_from_monic_seed(f, AlphaPoly::monomial(2), 2) == apoly({0, -2, 1}));
    auto a = family_from_monic_seed(f, AlphaPoly::monomial(3), 3);
    auto b = family_from_monic_seed(f, falling_factorial<AlphaVar>(3), 3);
    CHECK(a == b);
    CHECK(a == family_from_f(transform_T_inv(f), 3).p[3]);
    try {
        family_from_monic_seed(f, apoly({0, 0, 2}), 2);
        FAIL("non-monic seed accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotMonic);
    }
    try {
        family_from_monic_seed(f, AlphaPoly::monomial(3), 2);
        FAIL("wrong degree accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeMismatch);
    }
}

TEST_CASE("operator identities on the sample series")
{
    Verifier v;
    verify_operator_basics(v, expm1(24), 5, 8, "expm1");
    verify_monic_seed_family(v, x_exp(24), 5, "xexp");
    verify_transform_shift_forms(v, expm1(24), 5, "expm1");
    verify_transform_shift_forms(v, polynomial_series({0, 1, 1}, 24), 5, "xx2");
    all_pass(v);
    // f = x: every ratio f''/f' vanishes
    Verifier w;
    verify_transform_shift_forms(w, RSeries::x(24), 4, "x");
    all_pass(w);
}

TEST_CASE("Stirling numbers of the first kind")
{
    CHECK(stirling_first(3, 2) == -3);
    CHECK(stirling_first(4, 1) == -6);
    for (int n = 0; n <= 12; ++n) {
        CHECK(stirling_first(n, n) == 1);
        auto ff = AlphaPoly(Rat(1));
        for (int j = 0; j < n; ++j)
            ff = ff * apoly({Rat(-j), 1});
        for (int k = 0; k <= n; ++k)
            CHECK(stirling_first(n, k) == ff.coeff(k));
    }
    CHECK_THROWS_AS(stirling_first(3, 4), Error);
    CHECK_THROWS_AS(stirling_first(-1, 0), Error);
}

TEST_CASE("compositions are visited lexicographically")
{
    std::vector<std::vector<int>> seen;
    for_each_composition(2, 2, [&](const std::vector<int>& m) { seen.push_back(m); });
    CHECK(seen == std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});
    int count = 0;
    for_each_composition(5, 3, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 21);
}

TEST_CASE("composition sums for nu_n and a_n")
{
    CHECK(psi_coeff_by_composition_sum(1, AnVariant::MultinomialSum) == 1);
    CHECK(psi_coeff_by_composition_sum(2, AnVariant::MultinomialSum) == -1);
    CHECK(psi_coeff_by_composition_sum(3, AnVariant::ReciprocalSum) == Rat(5, 4));
    CHECK(nu_by_composition_sum(2, NuVariant::MultinomialSum) == apoly({0, -2, 1}));
    auto fam = family_from_f(transform_T_inv(x_exp(12)), 8);
    auto psi = psi_ode(12);
    for (int n = 1; n <= 8; ++n) {
        auto a = nu_by_composition_sum(n, NuVariant::MultinomialSum);
        CHECK(a == nu_by_composition_sum(n, NuVariant::ReciprocalSum));
        CHECK(a == fam.p[n]);
        CHECK(psi_coeff_by_composition_sum(n, AnVariant::MultinomialSum) == psi.coeff(n));
        CHECK(psi_coeff_by_composition_sum(n, AnVariant::ReciprocalSum) == psi.coeff(n));
    }
    for (int n = 1; n <= 6; ++n)
        CHECK(nu_by_enumeration(n, NuVariant::ReciprocalSum) == nu_by_composition_sum(n, NuVariant::ReciprocalSum));
}

TEST_CASE("combinatorial Q T^-1")
{
    CHECK(!first_mismatch(combinatorial_QTinv(RSeries::x(10), 10), RSeries::x(10), 10));
    CHECK(!first_mismatch(combinatorial_QTinv(x_exp(12), 12), psi_series(12), 12));
    for (unsigned seed = 40; seed <= 43; ++seed) {
        auto c = random_normalized(seed, 10);
        CHECK(!first_mismatch(combinatorial_QTinv(c, 10), invert(transform_T_inv(c)), 10));
    }
}

TEST_CASE("inverse powers of A_f")
{
    auto f = random_normalized(17, 12);
    auto q0 = apoly({3, Rat(2, 3), -1});
    auto target = shift_operator(f).power(2).apply(q0);
    CHECK(solve_shift_power(f, 2, target) == q0);
    try {
        solve_shift_power(f, 1, AlphaPoly(Rat(1)));
        FAIL("constant target accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegreeMismatch);
    }
}

TEST_CASE("exponential-family operator identity and quotient recurrence")
{
    Verifier v;
    verify_exp_family_operators(v, 1, Rat(1, 2), 4, 8);
    verify_exp_family_operators_small_p(v, Rat(1, 2), 4, 8);
    verify_inverse_shift_forms(v, 2, Rat(-1, 3), 3, 12);
    all_pass(v);
}
