#include "fpsl/eigen.hpp"
#include "fpsl/transforms.hpp"

#include <doctest.h>

using namespace fpsl;

namespace {

bool agree(const RSeries& a, const RSeries& b, int upto)
{
    return !first_mismatch(a, b, upto);
}

RSeries neg_arg(const RSeries& f)
{
    return scale(f, -1);
}

} // namespace

TEST_CASE("f_1 with A = 1/2 is e^x - 1")
{
    auto sol = solve_fn(1, Rat(1, 2), 12);
    CHECK(agree(sol.f, exp_linear(1, 12) - RSeries::one(12), 12));
    // T f = f(px)/p with p = -1
    CHECK(agree(transform_T(sol.f), -neg_arg(sol.f), 12));
}

TEST_CASE("f_n displayed coefficients")
{
    for (int n = 2; n <= 5; ++n) {
        Rat A(3, 5);
        auto sol = solve_fn(n, A, 3 * n + 1);
        Rat nn(n);
        CHECK(sol.f.coeff(n + 1) == A);
        CHECK(sol.f.coeff(2 * n + 1) == (nn + 1) / (nn + 2) * A * A);
        CHECK(sol.f.coeff(3 * n + 1) == (nn + 1) * (nn * nn - nn - 1) / ((nn + 2) * (nn * nn - 3)) * A * A * A);
        auto r = fn_reciprocal(sol);
        CHECK(r.coeff(n) == -A);
        CHECK(r.coeff(2 * n) == A * A / (nn + 2));
        CHECK(r.coeff(3 * n) == -A * A * A * (nn - 1) / ((nn + 2) * (nn * nn - 3)));
        CHECK(agree(r, fn_reciprocal_recurrence(sol), r.order()));
    }
}

TEST_CASE("x/f_1 at A = 1 is the Bernoulli generating function of (e^{2x}-1)/2")
{
    auto sol = solve_fn(1, 1, 12);
    auto f = (exp_linear(2, 12) - RSeries::one(12)) * Rat(1, 2);
    CHECK(agree(sol.f, f, 12));
    CHECK(agree(fn_reciprocal(sol), series_div(RSeries::x(12), f), 11));
}

TEST_CASE("phi closed forms")
{
    int N = 24;
    CHECK(agree(solve_phi(1, N), log1p_series(1, N), N));
    auto two = series_log(polynomial_series({1, 1, Rat(1, 8)}, N));
    CHECK(agree(solve_phi(2, N), two, N));
    CHECK(agree(solve_phi(4, N), log1p_series(Rat(1, 2), N) * Rat(2), N));
    CHECK(agree(phi_infinity(N), RSeries::x(N), N));
    for (Rat p : {Rat(3), Rat(1, 2), Rat(-1, 3), Rat(7, 5)})
        CHECK(solve_phi(p, 4).coeff(2) == Rat(-3) / (2 * (p + 2)));
}

TEST_CASE("degenerate p is rejected")
{
    try {
        solve_phi(-2, 6);
        FAIL("p = -2 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateParameter);
    }
    // p = -1 gives 1 = n only at n = 1, which the recurrence never divides by
    CHECK_NOTHROW(solve_phi(-1, 8));
}

TEST_CASE("fractional p approaches the p = 0 endpoint")
{
    Rat at0 = phi0_from_psi(3).coeff(2);
    CHECK(at0 == Rat(-3, 4));
    Rat d1 = abs(solve_phi(Rat(1, 10), 3).coeff(2) - at0);
    Rat d2 = abs(solve_phi(Rat(1, 100), 3).coeff(2) - at0);
    CHECK(d2 < d1);
}

TEST_CASE("psi and Lambert W")
{
    int N = 20;
    auto psi = psi_series(N);
    CHECK(agree(psi, psi_ode(N), N));
    CHECK(psi.coeff(1) == 1);
    CHECK(psi.coeff(2) == -1);
    CHECK(psi.coeff(3) == Rat(5, 4));
    auto w = lambert_w(N);
    for (int n = 1; n <= 8; ++n)
        CHECK(w.coeff(n) == Rat(pow_int(Rat(-n), n - 1)) / Rat(factorial(n)));
    CHECK(agree(w * series_exp(w), RSeries::x(N), N));
    auto wm = neg_arg(w);
    CHECK(agree(transform_T(-wm), RSeries::x(N) * (RSeries::one(N) + wm), N));
    CHECK(agree(phi0_from_psi(N), -series_log(shift(psi, -1)), N - 1));
}

TEST_CASE("Theta")
{
    int N = 15;
    auto sine = theta_series(0, N);
    for (int k = 0; 2 * k + 1 <= N; ++k)
        CHECK(sine.coeff(2 * k + 1) == Rat(k % 2 ? -1 : 1) / Rat(factorial(2 * k + 1)));
    auto t = theta_series(1, N);
    auto d = derive(t);
    auto one = RSeries::one(N);
    CHECK(agree(d * d, (one - t * t) * (one - t * t), N - 1));
    for (Rat m : {Rat(1, 4), Rat(9), Rat(-1)})
        CHECK(theta_series(m, 5).coeff(5) == (1 + 14 * m + m * m) / 120);
}

TEST_CASE("Theta doubling, with a corrupted coefficient caught")
{
    Verifier clean;
    verify_theta_doubling(clean, Rat(1, 4), 25);
    for (const auto& c : clean.checks())
        CHECK_MESSAGE(c.pass, c.id);
    Verifier broken(Fault{"theta.m1/4.doubling", 7});
    verify_theta_doubling(broken, Rat(1, 4), 25);
    bool found = false;
    for (const auto& c : broken.checks())
        if (c.id == "theta.m1/4.doubling") {
            found = true;
            CHECK(!c.pass);
            CHECK(c.location == "x^7");
        }
    CHECK(found);
}

TEST_CASE("T(x e^{Mq}) solutions")
{
    int N = 12;
    Rat A(1, 3), M(1, 3);
    auto q = series_log(shift(delta_p(2 * A, N + 1), -1)) * (1 / M);
    Verifier v;
    verify_exp_log_solution(v, q, M, 1, N, "log-solution");
    verify_exp_log_solution(v, RSeries::x(N), 0, 1, N, "log-solution.zero");
    for (const auto& c : v.checks())
        CHECK_MESSAGE(c.pass, c.id);
    try {
        verify_exp_log_solution(v, RSeries::x(N), 1, 1, N, "log-solution.bad");
        FAIL("premise violation not detected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PremiseViolated);
    }
}

TEST_CASE("reflection and Euler sums for several nu")
{
    for (Rat nu : {Rat(1), Rat(2), Rat(3)}) {
        Verifier v;
        verify_phi_reflection(v, nu, 12, 12);
        CHECK(!v.checks().empty());
        for (const auto& c : v.checks())
            CHECK_MESSAGE(c.pass, c.id);
    }
}

TEST_CASE("eigenseries property and conjugation")
{
    Verifier v;
    for (Rat p : {Rat(2), Rat(1, 2)})
        verify_eigen_property(v, p, 12);
    verify_conjugation(v, polynomial_series({0, 1, 1}, 12), 2);
    verify_fn_inverse_forms(v, 21);
    for (int n = 1; n <= 4; ++n)
        verify_fn_exp_phi_integral(v, n, 1);
    for (const auto& c : v.checks())
        CHECK_MESSAGE(c.pass, c.id);
}
