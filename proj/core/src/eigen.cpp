#include "fpsl/eigen.hpp"

#include "fpsl/transforms.hpp"

#include <cstdlib>

namespace fpsl {

namespace {

Rat signed_power(long base, long e)
{
    return pow_int(Rat(base), e);
}

std::string tag(const Rat& r)
{
    return to_string(r);
}

RSeries x_exp(const Rat& c, int ord) // x e^{c x} to order ord
{
    return shift(exp_linear(c, ord - 1), 1);
}

} // namespace

EigenSolution solve_fn(int n, const Rat& A, int order)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "solve_fn needs n >= 1");
    if (order < n + 1)
        throw Error(ErrorKind::OutOfRange, "solve_fn needs order >= n + 1");
    int K = (order - 1) / n;
    std::vector<Rat> a(K + 1);
    a[1] = A;
    for (int k = 2; k <= K; ++k) {
        Rat div = Rat(k) - signed_power(-n, k - 1);
        if (sgn(div) == 0)
            throw Error(ErrorKind::DegenerateDivisor, "zero divisor at k = " + std::to_string(k));
        Rat sum = 0;
        for (int m = 1; m < k; ++m)
            sum += Rat(n * m + 1) * signed_power(-n, k - m - 1) * a[m] * a[k - m];
        a[k] = sum / div;
    }
    std::vector<Rat> c(order + 1);
    c[1] = 1;
    for (int k = 1; k <= K; ++k)
        c[k * n + 1] = a[k];
    return {n, A, RSeries::from_coeffs(c, order)};
}

RSeries fn_reciprocal_recurrence(const EigenSolution& sol)
{
    int n = sol.n;
    int ord = sol.f.order() - 1;
    int K = ord / n;
    std::vector<Rat> b(K + 1);
    b[0] = 1;
    if (K >= 1)
        b[1] = -sol.A;
    for (int k = 2; k <= K; ++k) {
        Rat div = Rat(k) - signed_power(-n, k - 1);
        if (sgn(div) == 0)
            throw Error(ErrorKind::DegenerateDivisor, "zero divisor at k = " + std::to_string(k));
        Rat sum = 0;
        for (int m = 1; m < k; ++m)
            sum += signed_power(-n, m - 1) * b[m] * b[k - m];
        b[k] = sum / div;
    }
    std::vector<Rat> c(ord + 1);
    for (int k = 0; k <= K; ++k)
        c[k * n] = b[k];
    return RSeries::from_coeffs(c, ord);
}

RSeries fn_reciprocal(const EigenSolution& sol)
{
    auto rec = fn_reciprocal_recurrence(sol);
    auto div = series_div(RSeries::x(sol.f.order()), sol.f);
    if (auto k = first_mismatch(rec, div, rec.order()))
        throw Error(ErrorKind::InternalCheck, "x/f recurrence disagrees with division at x^" + std::to_string(*k));
    return rec;
}

RSeries solve_phi(const Rat& p, int order)
{
    std::vector<int> bad;
    for (int n = 2; n <= order; ++n)
        if (pow_int(-p, n - 1) == Rat(n))
            bad.push_back(n);
    if (!bad.empty()) {
        std::string list;
        for (int n : bad)
            list += (list.empty() ? "" : ", ") + std::to_string(n);
        throw Error(ErrorKind::DegenerateParameter, "p = " + to_string(p) + " is degenerate at n = " + list);
    }
    // P[k][m] = [x^m] phi^k, filled one column at a time.
    std::vector<Rat> a(order + 1);
    std::vector<std::vector<Rat>> P(order + 1, std::vector<Rat>(order + 1));
    a[1] = 1;
    P[1][1] = 1;
    for (int n = 2; n <= order; ++n) {
        Rat sum = 0;
        Rat kfact = 1;
        for (int k = 2; k <= n; ++k) {
            Rat pk = 0;
            for (int j = 1; j <= n - k + 1; ++j)
                pk += a[j] * P[k - 1][n - j];
            P[k][n] = pk;
            kfact *= k;
            sum += (pow_int(-p, n - k) - pow_int(Rat(n), k)) / kfact * pk;
        }
        a[n] = sum / (Rat(n) - pow_int(-p, n - 1));
        P[1][n] = a[n];
    }
    return RSeries::from_coeffs(a, order);
}

RSeries phi_infinity(int order)
{
    return RSeries::x(order);
}

RSeries phi0_from_psi(int order)
{
    auto psi = psi_series(order + 1);
    return -series_log(shift(psi, -1));
}

RSeries psi_series(int order)
{
    return invert(transform_T_inv(x_exp(-1, order)));
}

RSeries psi_ode(int order)
{
    // n a_n = [x^n] psi e^{-psi} = a_n + [x^n] psi (e^{-psi} - 1), the last term uses a_{<n} only
    std::vector<Rat> a(order + 1);
    a[1] = 1;
    for (int n = 2; n <= order; ++n) {
        auto known = RSeries::from_coeffs(a, n);
        auto e = known * (series_exp(-known) - RSeries::one(n));
        a[n] = e.coeff(n) / Rat(n - 1);
    }
    return RSeries::from_coeffs(a, order);
}

RSeries lambert_w(int order)
{
    return invert(x_exp(1, order));
}

RSeries theta_series(const Rat& m, int order)
{
    std::vector<Rat> t(order + 1);
    if (order >= 1)
        t[1] = 1;
    std::vector<Rat> sq(order + 1);
    for (int k = 0; k + 2 <= order; ++k) {
        // [x^k] Theta^3 needs t_j for j <= k - 2; squares are refreshed lazily
        for (int j = 0; j <= k; ++j) {
            Rat s = 0;
            for (int i = 0; i <= j; ++i)
                s += t[i] * t[j - i];
            sq[j] = s;
        }
        Rat cube = 0;
        for (int j = 0; j <= k; ++j)
            cube += sq[j] * t[k - j];
        t[k + 2] = (2 * m * cube - (m + 1) * t[k]) / Rat((k + 2) * (k + 1));
    }
    return RSeries::from_coeffs(t, order);
}

void verify_fn_displays(Verifier& v, int n, const Rat& A)
{
    std::string id = "fn.n" + std::to_string(n) + ".A" + tag(A);
    auto sol = solve_fn(n, A, 5 * n + 1);
    Rat N(n);
    Rat n2 = N * N;
    Rat A2 = (N + 1) / (N + 2) * A * A;
    Rat A3 = (N + 1) * (n2 - N - 1) / ((N + 2) * (n2 - 3)) * pow_int(A, 3);
    Rat A4 = (N + 1) * (pow_int(N, 6) - 2 * pow_int(N, 4) + 4 * pow_int(N, 3) - n2 - 6 * N - 2) /
        ((N + 2) * (N + 2) * (n2 - 3) * (pow_int(N, 3) + 4)) * pow_int(A, 4);
    v.value(id + ".A2", sol.f.coeff(2 * n + 1), A2);
    v.value(id + ".A3", sol.f.coeff(3 * n + 1), A3);
    v.value(id + ".A4", sol.f.coeff(4 * n + 1), A4);

    // T f = f(px)/p becomes A_k -> (-n)^k A_k because p^n = -n
    std::vector<Rat> image(sol.f.order() + 1);
    for (int k = 0; k * n + 1 <= sol.f.order(); ++k)
        image[k * n + 1] = sol.f.coeff(k * n + 1) * signed_power(-n, k);
    v.series(id + ".eigen", transform_T(sol.f), RSeries::from_coeffs(image, sol.f.order()), sol.f.order());

    v.guarded(id + ".recip", [&] {
        auto rec = fn_reciprocal_recurrence(sol);
        v.series(id + ".recip", rec, series_div(RSeries::x(sol.f.order()), sol.f), 5 * n);
        Rat n4 = pow_int(N, 4);
        Rat d2 = N + 2, d3 = (N + 2) * (n2 - 3), d4 = (N + 2) * (N + 2) * (n2 - 3) * (pow_int(N, 3) + 4);
        Rat d5 = d4 * (n4 - 5);
        std::vector<Rat> disp(5 * n + 1);
        disp[0] = 1;
        disp[n] = -A;
        disp[2 * n] = pow_int(A, 2) / d2;
        disp[3 * n] = -pow_int(A, 3) * (N - 1) / d3;
        disp[4 * n] = pow_int(A, 4) * (n4 - n2 + 4 * N - 2) / d4;
        disp[5 * n] = -pow_int(A, 5) * (N - 1) * (n2 + 2) * (n4 - n2 + 3 * N - 1) / d5;
        v.series(id + ".recip-display", rec, RSeries::from_coeffs(disp, 5 * n), 5 * n);
    });

    auto inv = invert(truncate(sol.f, 3 * n + 1));
    std::vector<Rat> idisp(3 * n + 2);
    Rat c = A * (N + 1);
    idisp[1] = 1;
    idisp[n + 1] = -A;
    idisp[2 * n + 1] = c * c / (N + 2);
    idisp[3 * n + 1] = pow_int(c, 3) * (2 + 4 * N - 3 * n2) / (2 * (N + 2) * (n2 - 3));
    v.series(id + ".inverse-display", inv, RSeries::from_coeffs(idisp, 3 * n + 1), 3 * n + 1);
}

void verify_fn_inverse_forms(Verifier& v, int order)
{
    auto f2 = invert(solve_fn(2, 1, order).f);
    auto i2 = integrate(series_pow(polynomial_series({1, 0, 6, 0, Rat(9, 2)}, order - 1), Rat(-1, 2)));
    v.series("fn.inverse-integral.n2", f2, i2, order);
    auto f4 = invert(solve_fn(4, 1, order).f);
    auto i4 = integrate(series_pow(polynomial_series({1, 0, 0, 0, 10}, order - 1), Rat(-1, 2)));
    v.series("fn.inverse-integral.n4", f4, i4, order);
}

void verify_fn_exp_phi_integral(Verifier& v, int n, const Rat& A)
{
    int order = 4 * n + 1;
    std::string id = "fn.exp-phi-integral.n" + std::to_string(n) + ".A" + tag(A);
    v.guarded(id, [&] {
        auto lhs = invert(solve_fn(n, A, order).f);
        auto phi = solve_phi(Rat(n), 4);
        auto inner = substitute_power(scale(phi, A * n * (n + 1)), n);
        auto rhs = integrate(series_exp(truncate(inner, order - 1) * rat(-1, n)));
        v.series(id, lhs, rhs, order);
    });
}

void verify_phi_closed_forms(Verifier& v, int order)
{
    v.series("phi.p1.log", solve_phi(1, order), log1p_series(1, order), order);
    v.series("phi.p2.log", solve_phi(2, order),
        series_log(polynomial_series({1, 1, Rat(1, 8)}, order)), order);
    v.series("phi.p4.log", solve_phi(4, order), series_log(polynomial_series({1, Rat(1, 2)}, order)) * Rat(2),
        order);
    for (Rat p : {Rat(3), Rat(1, 2), Rat(-1, 3)})
        v.value("phi.p" + tag(p) + ".second", solve_phi(p, 4).coeff(2), Rat(-3) / (2 * (p + 2)));
}

void verify_theta_doubling(Verifier& v, const Rat& m, int order, const std::string& id_in)
{
    std::string id = id_in.empty() ? "theta.m" + tag(m) : id_in;
    auto th = theta_series(m, order);
    v.series(id + ".doubling", transform_T(transform_T(th)), scale(th, 2) * Rat(1, 2), order);
    auto d = derive(th);
    auto sq = th * th;
    auto one = RSeries::one(order);
    v.series(id + ".ode", d * d, (one - sq) * (one - sq * m), order - 1);
    if (order >= 5)
        v.value(id + ".x5", th.coeff(5), (1 + 14 * m + m * m) / 120);
}

void verify_endpoints(Verifier& v, int order)
{
    auto psi = psi_series(order);
    v.series("endpoint.psi.routes", psi, psi_ode(order), order);
    auto phi0 = solve_phi(0, order);
    v.series("endpoint.phi0.routes", phi0, phi0_from_psi(order), order);
    auto w = lambert_w(order + 1);
    auto wm = -scale(w, -1);
    v.series("endpoint.lambertw", transform_T(wm), RSeries::x(order) * (RSeries::one(order) + scale(w, -1)), order);
    v.series("endpoint.lambertw.roundtrip", w * series_exp(w), RSeries::x(order + 1), order);
    v.series("endpoint.phi0.duality", transform_T(invert(shift(series_exp(-truncate(phi0, order - 1)), 1))),
        x_exp(-1, order), order);
    v.series("endpoint.phi-infinity", phi_infinity(order), RSeries::x(order), order);
    // A_2(p) = -3/(2(p+2)) should approach A_2(0) as p shrinks
    Rat a0 = phi0.coeff(2);
    Rat d1 = abs(solve_phi(Rat(1, 10), 2).coeff(2) - a0);
    Rat d2 = abs(solve_phi(Rat(1, 100), 2).coeff(2) - a0);
    v.expect("endpoint.phi0.sampled-limit", d2 < d1 && sgn(d2) > 0,
        "|A2(1/100) - A2(0)| = " + to_string(d2) + ", |A2(1/10) - A2(0)| = " + to_string(d1));
}

void verify_eigen_property(Verifier& v, const Rat& p, int order)
{
    std::string id = "phi.p" + tag(p) + ".eigen";
    v.guarded(id, [&] {
        auto phi = solve_phi(p, order);
        auto lhs = transform_T(invert(shift(series_exp(-truncate(phi, order - 1)), 1)));
        auto rhs = shift(series_exp(truncate(scale(phi, -p), order - 1) * (Rat(1) / p)), 1);
        v.series(id, lhs, rhs, order);
    });
}

void verify_exp_log_solution(Verifier& v, const RSeries& q, const Rat& M, const Rat& p, int order, const std::string& id)
{
    auto Mq = truncate(q, order - 1) * M;
    auto xe = shift(series_exp(Mq), 1);
    auto premise_rhs = shift(series_exp(scale(Mq, -p) * (Rat(1) / p)), 1);
    if (auto k = first_mismatch(transform_T(xe), premise_rhs, order))
        throw Error(ErrorKind::PremiseViolated, "premise fails at x^" + std::to_string(*k));
    auto S = -series_log(shift(invert(xe), -1));
    auto one = RSeries::one(order - 1);
    auto xdS = shift(derive(S), 1);
    auto lhs_arg = shift(series_pow(one - xdS, p) * series_exp(-S), 1);
    auto lhs = transform_T(invert(lhs_arg));
    auto dS_reflected = shift(scale(derive(S), -p), 1) * p;
    auto rhs = shift(reciprocal(one + dS_reflected) * series_exp(scale(S, -p) * (Rat(1) / p)), 1);
    v.series(id, lhs, rhs, order);
}

void verify_phi_reflection(Verifier& v, const Rat& p, int n_max, int order)
{
    std::string id = "phi.p" + tag(p);
    v.guarded(id + ".reflection", [&] {
        auto phi = solve_phi(p, std::max(n_max, order));
        auto fam = exp_family(phi, n_max);
        std::vector<Rat> lhs(n_max + 1), rhs(n_max + 1);
        for (int n = 0; n <= n_max; ++n) {
            lhs[n] = pow_int(-p, n) * fam[n].eval(Rat(-1) / p);
            rhs[n] = fam[n].eval(Rat(n));
        }
        v.series(id + ".reflection", RSeries::from_coeffs(lhs, n_max), RSeries::from_coeffs(rhs, n_max), n_max);
    });
    v.guarded(id + ".euler-sum", [&] {
        auto phi = solve_phi(p, order);
        auto lhs = series_exp(scale(phi, -p) * (Rat(-1) / p));
        RSeries rhs = RSeries::one(order);
        RSeries power = RSeries::one(order);
        for (int n = 1; n <= order; ++n) {
            power = truncate(power * phi, order);
            rhs = rhs + x_ddx(power, n) * (Rat(1) / Rat(factorial(n)));
        }
        v.series(id + ".euler-sum", lhs, rhs, order);
    });
}

void verify_conjugation(Verifier& v, const RSeries& f, int n)
{
    std::string id = "conjugate.n" + std::to_string(n);
    auto g = conjugate_root(f, n);
    v.series(id + ".T", transform_T(g), shift(substitute_power(transform_T(f), n), 1 - n), g.order());
    v.series(id + ".Q", invert(g), conjugate_root(invert(f), n), g.order());
}

} // namespace fpsl
