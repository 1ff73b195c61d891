#pragma once

#include "fpsl/rational.hpp"

#include <algorithm>
#include <vector>

namespace fpsl {

// Dense univariate polynomial over Rat. Tag separates the formal index s
// from the umbral variable alpha so the two cannot be mixed by accident.
template <class Tag>
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(const Rat& c) { if (sgn(c) != 0) c_.push_back(c); }
    RatPoly(long c) : RatPoly(Rat(c)) {}
    explicit RatPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

    static RatPoly var() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static RatPoly monomial(int k, const Rat& c = Rat(1))
    {
        std::vector<Rat> v(k + 1);
        v[k] = c;
        return RatPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Rat(0); }
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const
    {
        Rat r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    RatPoly derivative() const
    {
        if (c_.size() < 2)
            return {};
        std::vector<Rat> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * static_cast<long>(k);
        return RatPoly(std::move(d));
    }

    // p(c0 + c1*x)
    RatPoly substitute_affine(const Rat& c0, const Rat& c1) const
    {
        RatPoly lin(std::vector<Rat>{c0, c1});
        RatPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * lin + RatPoly(*it);
        return r;
    }

    RatPoly compose(const RatPoly& inner) const
    {
        RatPoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * inner + RatPoly(*it);
        return r;
    }

    // Exact division by (x - root); the remainder must vanish.
    RatPoly divide_linear(const Rat& root, Rat* remainder = nullptr) const
    {
        if (c_.empty())
            return {};
        std::vector<Rat> q(c_.size() - 1);
        Rat carry = 0;
        for (size_t i = c_.size(); i-- > 0;) {
            Rat cur = c_[i] + carry * root;
            if (i == 0) {
                if (remainder)
                    *remainder = cur;
            } else {
                q[i - 1] = cur;
            }
            carry = cur;
        }
        return RatPoly(std::move(q));
    }

    RatPoly& operator+=(const RatPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    RatPoly& operator*=(const Rat& q)
    {
        if (sgn(q) == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_)
            x *= q;
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator-(RatPoly a)
    {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }
    friend RatPoly operator*(RatPoly a, const Rat& q) { return a *= q; }
    friend RatPoly operator*(const Rat& q, RatPoly a) { return a *= q; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.c_.empty() || b.c_.empty())
            return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0)
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(r));
    }
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && sgn(c_.back()) == 0)
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

struct SVar {};
struct AlphaVar {};

// Polynomials in the formal index s.
using SPoly = RatPoly<SVar>;
// Polynomials in alpha, the space the shift/derivation operators act on.
using AlphaPoly = RatPoly<AlphaVar>;

template <class Tag>
bool is_zero(const RatPoly<Tag>& p) { return p.is_zero(); }
template <class Tag>
bool is_unit(const RatPoly<Tag>& p) { return p.degree() == 0; }
template <class Tag>
RatPoly<Tag> unit_inverse(const RatPoly<Tag>& p) { return RatPoly<Tag>(Rat(1) / p.coeff(0)); }

template <class Tag>
RatPoly<Tag> pow(const RatPoly<Tag>& p, unsigned e)
{
    RatPoly<Tag> r(Rat(1));
    for (unsigned i = 0; i < e; ++i)
        r *= p;
    return r;
}

// binom(x + shift, n) as an explicit degree-n polynomial in x.
template <class Tag>
RatPoly<Tag> binom_poly(const Rat& shift, unsigned n)
{
    RatPoly<Tag> r(Rat(1));
    for (unsigned j = 0; j < n; ++j)
        r *= RatPoly<Tag>(std::vector<Rat>{shift - Rat(j), Rat(1)});
    return r * (Rat(1) / Rat(factorial(n)));
}

// Falling factorial (c0 + c1*x)_n = prod_{j<n} (c0 + c1*x - j).
template <class Tag>
RatPoly<Tag> falling_factorial(unsigned n, const Rat& c0 = Rat(0), const Rat& c1 = Rat(1))
{
    RatPoly<Tag> r(Rat(1));
    for (unsigned j = 0; j < n; ++j)
        r *= RatPoly<Tag>(std::vector<Rat>{c0 - Rat(j), c1});
    return r;
}

} // namespace fpsl
