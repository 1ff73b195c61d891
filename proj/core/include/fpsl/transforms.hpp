#pragma once

#include "fpsl/series.hpp"

namespace fpsl {

namespace detail {
template <CoeffRing R>
void require_normalized(const Series<R>& f, const char* what)
{
    if (!f.is_normalized())
        throw Error(ErrorKind::NotNormalized, std::string(what) + " needs a series x + x^2 ring[[x]]");
}
} // namespace detail

// Compositional inverse by triangular solve: with g_1..g_{n-1} known,
// [x^n] f(g) = f_1 g_n + sum_{k>=2} f_k [x^n] g^k, and the power table
// P[k][m] = [x^m] g^k is extended one column at a time.
template <CoeffRing R>
Series<R> invert(const Series<R>& f)
{
    if (f.valuation() != 1 || !is_unit(f.lead()))
        throw Error(ErrorKind::NotInvertible, "inversion needs valuation 1 and a unit linear coefficient");
    int N = f.order();
    R inv1 = unit_inverse(f.lead());
    std::vector<R> g(N + 1, R(Rat(0)));
    std::vector<std::vector<R>> P(N + 1, std::vector<R>(N + 1, R(Rat(0))));
    g[1] = inv1;
    P[1][1] = inv1;
    for (int n = 2; n <= N; ++n) {
        R acc(Rat(0));
        for (int k = 2; k <= n; ++k) {
            R pk(Rat(0));
            for (int j = 1; j <= n - k + 1; ++j)
                if (!is_zero(g[j]) && !is_zero(P[k - 1][n - j]))
                    pk = R(pk + g[j] * P[k - 1][n - j]);
            P[k][n] = pk;
            acc = R(acc + f.coeff(k) * pk);
        }
        g[n] = R(-(acc * inv1));
        P[1][n] = g[n];
    }
    Series<R> result(0, N, std::move(g));
    auto check = compose(f, result);
    if (first_mismatch(check, Series<R>::x(N), N))
        throw Error(ErrorKind::InternalCheck, "inversion round-trip failed");
    return result;
}

// f / f'. The division by a unit-lead series keeps the full order N.
template <CoeffRing R>
Series<R> transform_T(const Series<R>& f)
{
    detail::require_normalized(f, "T");
    return series_div(f, derive(f));
}

// x exp(int (1/f - 1/x)); order N is kept: 1/f - 1/x is known to x^{N-2}.
template <CoeffRing R>
Series<R> transform_T_inv(const Series<R>& f)
{
    detail::require_normalized(f, "T^-1");
    int N = f.order();
    auto inv = reciprocal(f);
    auto h = inv - Series<R>::monomial(-1, inv.order());
    auto g = shift(series_exp(integrate(h)), 1);
    if (first_mismatch(transform_T(g), f, N))
        throw Error(ErrorKind::InternalCheck, "T^-1 round-trip failed");
    return g;
}

template <CoeffRing R>
Series<R> transform_QTQ(const Series<R>& f)
{
    detail::require_normalized(f, "QTQ");
    return invert(transform_T(invert(f)));
}

// x (f(x^n)/x^n)^{1/n}, order n*N.
template <CoeffRing R>
Series<R> conjugate_root(const Series<R>& f, int n)
{
    detail::require_normalized(f, "conjugate_root");
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "conjugate_root needs n >= 1");
    auto u = shift(substitute_power(f, n), -n);
    return shift(series_pow(u, R(rat(1, n))), 1);
}

} // namespace fpsl
