#pragma once

#include "fpsl/error.hpp"
#include "fpsl/poly.hpp"
#include "fpsl/rational.hpp"

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <vector>

namespace fpsl {

template <class R>
concept CoeffRing = requires(const R& a, const R& b, const Rat& q) {
    { R(a + b) };
    { R(a - b) };
    { R(a * b) };
    { R(-a) };
    { R(a * q) };
    { R(q) };
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { is_unit(a) } -> std::convertible_to<bool>;
    { unit_inverse(a) } -> std::convertible_to<R>;
};

// Truncated power series sum_{k=val}^{ord} c_k x^k with O(x^{ord+1}) unknown.
// The valuation may go negative for Laurent intermediates (x^-1 terms appear
// while forming 1/f - 1/x, for example); everything exported is a power series.
template <CoeffRing R>
class Series {
public:
    Series() : val_(1), ord_(0) {}

    Series(int val, int ord, std::vector<R> coeffs) : val_(val), ord_(ord), c_(std::move(coeffs))
    {
        c_.resize(std::max(0, ord_ - val_ + 1), R(Rat(0)));
        normalize();
    }

    static Series zero(int ord) { return Series(ord + 1, ord, {}); }
    static Series constant(const R& c, int ord) { return Series(0, ord, {c}); }
    static Series one(int ord) { return constant(R(Rat(1)), ord); }
    static Series monomial(int k, int ord, const R& c = R(Rat(1)))
    {
        return Series(k, ord, {c});
    }
    static Series x(int ord) { return monomial(1, ord); }

    // Coefficient list starting at x^0 (valuation must be non-negative).
    static Series from_coeffs(const std::vector<R>& c, int ord)
    {
        std::vector<R> v(c.begin(), c.begin() + std::min<size_t>(c.size(), std::max(0, ord + 1)));
        return Series(0, ord, std::move(v));
    }

    int valuation() const { return val_; }
    int order() const { return ord_; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    // Coefficient of x^k. Below the valuation it is zero; above the order it is unknown.
    R coeff(int k) const
    {
        if (k > ord_)
            throw Error(ErrorKind::InsufficientOrder,
                "coefficient x^" + std::to_string(k) + " beyond order " + std::to_string(ord_));
        if (k < val_)
            return R(Rat(0));
        return c_[k - val_];
    }
    R lead() const { return c_.empty() ? R(Rat(0)) : c_.front(); }

    // Dense coefficients of x^0..x^ord (requires valuation >= 0).
    std::vector<R> dense() const
    {
        std::vector<R> r(std::max(0, ord_ + 1), R(Rat(0)));
        for (int k = std::max(0, val_); k <= ord_; ++k)
            r[k] = coeff(k);
        return r;
    }

    // x + x^2 ring[[x]]
    bool is_normalized() const
    {
        return ord_ >= 1 && val_ == 1 && lead() == R(Rat(1));
    }

    Series with_coeff(int k, const R& c) const
    {
        if (k > ord_)
            throw Error(ErrorKind::InsufficientOrder, "with_coeff beyond order");
        int lo = std::min(val_, k);
        std::vector<R> v(ord_ - lo + 1, R(Rat(0)));
        for (int j = val_; j <= ord_; ++j)
            v[j - lo] = c_[j - val_];
        v[k - lo] = c;
        return Series(lo, ord_, std::move(v));
    }

    friend bool operator==(const Series& a, const Series& b)
    {
        return a.val_ == b.val_ && a.ord_ == b.ord_ && a.c_ == b.c_;
    }

private:
    void normalize()
    {
        size_t z = 0;
        while (z < c_.size() && fpsl::is_zero(c_[z]))
            ++z;
        if (z == c_.size()) {
            c_.clear();
            val_ = ord_ + 1;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + z);
        val_ += static_cast<int>(z);
    }

    int val_;
    int ord_;
    std::vector<R> c_;
};

using RSeries = Series<Rat>;
using SSeries = Series<SPoly>;

namespace detail {
inline int imin(int a, int b) { return a < b ? a : b; }
}

template <CoeffRing R>
Series<R> truncate(const Series<R>& f, int ord)
{
    ord = detail::imin(ord, f.order());
    std::vector<R> v;
    for (int k = f.valuation(); k <= ord; ++k)
        v.push_back(f.coeff(k));
    return Series<R>(f.valuation(), ord, std::move(v));
}

template <CoeffRing R>
Series<R> operator+(const Series<R>& a, const Series<R>& b)
{
    int ord = detail::imin(a.order(), b.order());
    int lo = detail::imin(a.valuation(), b.valuation());
    std::vector<R> v;
    for (int k = lo; k <= ord; ++k)
        v.push_back(R(a.coeff(k) + b.coeff(k)));
    return Series<R>(lo, ord, std::move(v));
}

template <CoeffRing R>
Series<R> operator-(const Series<R>& a)
{
    std::vector<R> v;
    for (const auto& c : a.coeffs())
        v.push_back(R(-c));
    return Series<R>(a.valuation(), a.order(), std::move(v));
}

template <CoeffRing R>
Series<R> operator-(const Series<R>& a, const Series<R>& b)
{
    return a + (-b);
}

template <CoeffRing R>
Series<R> operator*(const Series<R>& a, const Rat& q)
{
    std::vector<R> v;
    for (const auto& c : a.coeffs())
        v.push_back(R(c * q));
    return Series<R>(a.valuation(), a.order(), std::move(v));
}

template <CoeffRing R>
Series<R> operator*(const Rat& q, const Series<R>& a)
{
    return a * q;
}

template <CoeffRing R>
Series<R> scalar_mul(const Series<R>& a, const R& q)
{
    std::vector<R> v;
    for (const auto& c : a.coeffs())
        v.push_back(R(c * q));
    return Series<R>(a.valuation(), a.order(), std::move(v));
}

template <CoeffRing R>
Series<R> operator*(const Series<R>& a, const Series<R>& b)
{
    int val = a.valuation() + b.valuation();
    int ord = detail::imin(a.order() + b.valuation(), b.order() + a.valuation());
    if (a.is_zero() || b.is_zero() || ord < val)
        return Series<R>::zero(ord);
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<R> v(ord - val + 1, R(Rat(0)));
    for (size_t i = 0; i < ca.size() && static_cast<int>(i) <= ord - val; ++i) {
        if (is_zero(ca[i]))
            continue;
        for (size_t j = 0; j < cb.size() && static_cast<int>(i + j) <= ord - val; ++j)
            v[i + j] = R(v[i + j] + ca[i] * cb[j]);
    }
    return Series<R>(val, ord, std::move(v));
}

template <CoeffRing R>
Series<R> shift(const Series<R>& f, int k)
{
    return Series<R>(f.valuation() + k, f.order() + k, f.coeffs());
}

template <CoeffRing R>
Series<R> series_div(const Series<R>& a, const Series<R>& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::DivByZero, "division by a series that vanishes to its order");
    if (!is_unit(b.lead()))
        throw Error(ErrorKind::NonInvertibleLead, "divisor leading coefficient is not a unit");
    int vb = b.valuation();
    int val = a.valuation() - vb;
    int ord = detail::imin(a.order(), b.order() - vb + a.valuation()) - vb;
    if (a.is_zero() || ord < val)
        return Series<R>::zero(ord);
    const auto& cb = b.coeffs();
    R inv = unit_inverse(b.lead());
    int len = ord - val + 1;
    std::vector<R> q(len, R(Rat(0)));
    for (int n = 0; n < len; ++n) {
        R acc = a.coeff(a.valuation() + n);
        for (int j = 1; j <= n && j < static_cast<int>(cb.size()); ++j)
            acc = R(acc - cb[j] * q[n - j]);
        q[n] = R(acc * inv);
    }
    return Series<R>(val, ord, std::move(q));
}

template <CoeffRing R>
Series<R> operator/(const Series<R>& a, const Series<R>& b)
{
    return series_div(a, b);
}

template <CoeffRing R>
Series<R> reciprocal(const Series<R>& b)
{
    return series_div(Series<R>::one(std::max(0, b.order() - b.valuation())), b);
}

template <CoeffRing R>
Series<R> derive(const Series<R>& f)
{
    std::vector<R> v;
    for (int k = f.valuation(); k <= f.order(); ++k)
        v.push_back(R(f.coeff(k) * Rat(k)));
    return Series<R>(f.valuation() - 1, f.order() - 1, std::move(v));
}

// Antiderivative with zero constant term.
template <CoeffRing R>
Series<R> integrate(const Series<R>& f)
{
    if (f.valuation() <= -1 && f.order() >= -1 && !is_zero(f.coeff(-1)))
        throw Error(ErrorKind::NonIntegrableTerm, "x^-1 term cannot be integrated");
    std::vector<R> v;
    int lo = f.valuation() + 1;
    for (int k = f.valuation(); k <= f.order(); ++k)
        v.push_back(k == -1 ? R(Rat(0)) : R(f.coeff(k) * rat(1, k + 1)));
    return Series<R>(lo, f.order() + 1, std::move(v));
}

// (x d/dx)^n f
template <CoeffRing R>
Series<R> x_ddx(const Series<R>& f, unsigned n)
{
    std::vector<R> v;
    for (int k = f.valuation(); k <= f.order(); ++k)
        v.push_back(R(f.coeff(k) * pow_int(Rat(k), n)));
    return Series<R>(f.valuation(), f.order(), std::move(v));
}

// f(c x)
template <CoeffRing R>
Series<R> scale(const Series<R>& f, const Rat& c)
{
    std::vector<R> v;
    for (int k = f.valuation(); k <= f.order(); ++k)
        v.push_back(R(f.coeff(k) * pow_int(c, k)));
    return Series<R>(f.valuation(), f.order(), std::move(v));
}

// f(x^n)
template <CoeffRing R>
Series<R> substitute_power(const Series<R>& f, int n)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "substitute_power needs n >= 1");
    int ord = (f.order() + 1) * n - 1;
    int val = f.valuation() * n;
    std::vector<R> v(std::max(0, ord - val + 1), R(Rat(0)));
    for (int k = f.valuation(); k <= f.order(); ++k)
        if (k * n <= ord)
            v[k * n - val] = f.coeff(k);
    return Series<R>(val, ord, std::move(v));
}

// outer(inner). Precision: the first unknown outer term contributes at
// x^{(N_out+1) v_in}; an error in inner at x^{N_in+1} reaches
// x^{N_in+1+(k-1) v_in} through the lowest nonconstant outer term k.
template <CoeffRing R>
Series<R> compose(const Series<R>& outer, const Series<R>& inner)
{
    if (outer.valuation() < 0)
        throw Error(ErrorKind::OutOfRange, "compose needs a power series as outer");
    int vin = inner.valuation();
    if (vin < 1)
        throw Error(ErrorKind::InnerConstantTerm, "inner series has a constant term");
    int ord = (outer.order() + 1) * vin - 1;
    int kmin = -1;
    for (int k = std::max(1, outer.valuation()); k <= outer.order(); ++k)
        if (!is_zero(outer.coeff(k))) {
            kmin = k;
            break;
        }
    if (kmin > 0)
        ord = detail::imin(ord, inner.order() + (kmin - 1) * vin);
    if (ord < 0)
        return Series<R>::zero(ord);
    std::vector<R> acc(ord + 1, R(Rat(0)));
    if (outer.valuation() == 0)
        acc[0] = outer.coeff(0);
    Series<R> in = truncate(inner, ord);
    Series<R> power = Series<R>::one(ord);
    for (int k = 1; k <= outer.order() && k * vin <= ord; ++k) {
        power = truncate(power * in, ord);
        R c = outer.coeff(k);
        if (is_zero(c))
            continue;
        for (int j = power.valuation(); j <= power.order(); ++j)
            acc[j] = R(acc[j] + c * power.coeff(j));
    }
    return Series<R>(0, ord, std::move(acc));
}

template <CoeffRing R>
Series<R> series_exp(const Series<R>& f)
{
    if (f.valuation() < 1 && !f.is_zero())
        throw Error(ErrorKind::BadConstantTerm, "exp needs a series without constant term");
    int N = f.order();
    std::vector<R> e(N + 1, R(Rat(0)));
    e[0] = R(Rat(1));
    for (int n = 1; n <= N; ++n) {
        R acc(Rat(0));
        for (int k = std::max(1, f.valuation()); k <= n; ++k)
            acc = R(acc + f.coeff(k) * e[n - k] * Rat(k));
        e[n] = R(acc * rat(1, n));
    }
    return Series<R>(0, N, std::move(e));
}

template <CoeffRing R>
Series<R> series_log(const Series<R>& u)
{
    if (u.valuation() != 0 || !(u.lead() == R(Rat(1))))
        throw Error(ErrorKind::BadConstantTerm, "log needs constant term 1");
    int N = u.order();
    // n l_n = n u_n - sum_{k=1}^{n-1} k l_k u_{n-k}
    std::vector<R> l(N + 1, R(Rat(0)));
    for (int n = 1; n <= N; ++n) {
        R acc = R(u.coeff(n) * Rat(n));
        for (int k = 1; k < n; ++k)
            acc = R(acc - l[k] * u.coeff(n - k) * Rat(k));
        l[n] = R(acc * rat(1, n));
    }
    return Series<R>(0, N, std::move(l));
}

// u^e = exp(e log u)
template <CoeffRing R>
Series<R> series_pow(const Series<R>& u, const R& e)
{
    return series_exp(scalar_mul(series_log(u), e));
}

template <CoeffRing R>
Series<R> series_pow(const Series<R>& u, const Rat& e) requires(!std::same_as<R, Rat>)
{
    return series_pow(u, R(e));
}

inline RSeries series_pow(const RSeries& u, const Rat& e)
{
    return series_exp(series_log(u) * e);
}

// Integer power by repeated multiplication (valid for any valuation).
template <CoeffRing R>
Series<R> series_ipow(const Series<R>& u, unsigned e)
{
    if (e == 0)
        return Series<R>::one(u.order() - u.valuation());
    Series<R> r = u;
    for (unsigned i = 1; i < e; ++i)
        r = r * u;
    return r;
}

// Lift a Rat series into another coefficient ring.
template <CoeffRing R>
Series<R> lift(const RSeries& f)
{
    std::vector<R> v;
    for (const auto& c : f.coeffs())
        v.push_back(R(c));
    return Series<R>(f.valuation(), f.order(), std::move(v));
}

// First exponent in [lo, upto] where a and b differ.
template <CoeffRing R>
std::optional<int> first_mismatch(const Series<R>& a, const Series<R>& b, int upto)
{
    upto = detail::imin(upto, detail::imin(a.order(), b.order()));
    int lo = detail::imin(a.valuation(), b.valuation());
    for (int k = lo; k <= upto; ++k)
        if (!(a.coeff(k) == b.coeff(k)))
            return k;
    return std::nullopt;
}

// Common helpers over Rat.
RSeries exp_linear(const Rat& c, int ord);         // e^{c x}
RSeries delta_p(const Rat& p, int ord);            // (e^{px}-1)/p, x when p = 0
RSeries log1p_series(const Rat& c, int ord);       // log(1 + c x)
RSeries binomial_series(const Rat& c, const Rat& e, int ord); // (1 + c x)^e
RSeries polynomial_series(const std::vector<Rat>& c, int ord);
// x + sum c_k x^k with small rational c_k drawn from a seeded generator.
RSeries random_normalized(unsigned seed, int ord);

} // namespace fpsl
