#include "fpsl/alpha.hpp"

#include <algorithm>

namespace fpsl {

namespace {

std::vector<SPoly> padded(std::vector<SPoly> v, int depth)
{
    v.resize(std::max(0, depth));
    return v;
}

bool all_zero(const std::vector<SPoly>& v)
{
    return std::all_of(v.begin(), v.end(), [](const SPoly& p) { return p.is_zero(); });
}

// top - n + b s
SPoly exponent(int top, int b, int n)
{
    return SPoly(std::vector<Rat>{Rat(top - n), Rat(b)});
}

} // namespace

AlphaExpr::AlphaExpr(int top, int b, int depth, std::vector<SPoly> plain, std::vector<SPoly> log)
    : top_(top), b_(b), depth_(depth), plain_(padded(std::move(plain), depth)), log_(padded(std::move(log), depth))
{
}

AlphaExpr AlphaExpr::power(int top, int b, int depth, const SPoly& c)
{
    return AlphaExpr(top, b, depth, {c});
}

AlphaExpr AlphaExpr::ln_alpha(int depth)
{
    return AlphaExpr(0, 0, depth, {}, {SPoly(Rat(1))});
}

AlphaExpr AlphaExpr::from_poly(const AlphaPoly& p, int depth)
{
    int d = std::max(0, p.degree());
    std::vector<SPoly> v;
    for (int n = 0; n < depth; ++n)
        v.push_back(SPoly(p.coeff(d - n)));
    return AlphaExpr(d, 0, depth, std::move(v));
}

bool AlphaExpr::has_log() const
{
    return !all_zero(log_);
}

SSeries AlphaExpr::plain_series() const
{
    return SSeries(0, depth_ - 1, plain_);
}

SSeries AlphaExpr::log_series() const
{
    return SSeries(0, depth_ - 1, log_);
}

AlphaExpr AlphaExpr::from_series(int top, int b, const SSeries& plain, const SSeries& log, int depth)
{
    std::vector<SPoly> p(depth), l(depth);
    for (int n = 0; n < depth; ++n) {
        p[n] = plain.coeff(n);
        l[n] = log.coeff(n);
    }
    return AlphaExpr(top, b, depth, std::move(p), std::move(l));
}

AlphaExpr AlphaExpr::with_plain(int n, const SPoly& c) const
{
    AlphaExpr r = *this;
    if (n >= 0 && n < depth_)
        r.plain_[n] = c;
    return r;
}

AlphaExpr AlphaExpr::mul_alpha_power(int k) const
{
    AlphaExpr r = *this;
    r.top_ += k;
    return r;
}

AlphaExpr AlphaExpr::realign(int new_top) const
{
    int off = new_top - top_;
    if (off < 0)
        throw Error(ErrorKind::IncompatibleExponents, "realign can only raise the top exponent");
    std::vector<SPoly> p(off), l(off);
    p.insert(p.end(), plain_.begin(), plain_.end());
    l.insert(l.end(), log_.begin(), log_.end());
    return AlphaExpr(new_top, b_, depth_ + off, std::move(p), std::move(l));
}

AlphaExpr truncate_depth(const AlphaExpr& a, int depth)
{
    depth = std::min(depth, a.depth());
    std::vector<SPoly> p(a.plain().begin(), a.plain().begin() + depth);
    std::vector<SPoly> l(a.log().begin(), a.log().begin() + depth);
    return AlphaExpr(a.top(), a.b(), depth, std::move(p), std::move(l));
}

AlphaExpr operator+(const AlphaExpr& a, const AlphaExpr& b)
{
    if (a.b() != b.b())
        throw Error(ErrorKind::IncompatibleExponents, "exponent families differ in the s coefficient");
    int top = std::max(a.top(), b.top());
    // lowest known exponent of each operand
    int low = std::max(a.top() - a.depth() + 1, b.top() - b.depth() + 1);
    int depth = std::max(0, top - low + 1);
    AlphaExpr x = truncate_depth(a.realign(top), depth);
    AlphaExpr y = truncate_depth(b.realign(top), depth);
    std::vector<SPoly> p(depth), l(depth);
    for (int n = 0; n < depth; ++n) {
        p[n] = x.plain_at(n) + y.plain_at(n);
        l[n] = x.log_at(n) + y.log_at(n);
    }
    return AlphaExpr(top, a.b(), depth, std::move(p), std::move(l));
}

AlphaExpr operator*(const AlphaExpr& a, const SPoly& c)
{
    std::vector<SPoly> p, l;
    for (int n = 0; n < a.depth(); ++n) {
        p.push_back(a.plain_at(n) * c);
        l.push_back(a.log_at(n) * c);
    }
    return AlphaExpr(a.top(), a.b(), a.depth(), std::move(p), std::move(l));
}

AlphaExpr operator-(const AlphaExpr& a)
{
    return a * SPoly(Rat(-1));
}

AlphaExpr operator-(const AlphaExpr& a, const AlphaExpr& b)
{
    return a + (-b);
}

AlphaExpr alpha_mul(const AlphaExpr& a, const AlphaExpr& b)
{
    if (a.has_log() && b.has_log())
        throw Error(ErrorKind::LogDegreeOverflow, "product would contain (ln alpha)^2");
    int depth = std::min(a.depth(), b.depth());
    auto ap = truncate(a.plain_series(), depth - 1);
    auto bp = truncate(b.plain_series(), depth - 1);
    auto plain = ap * bp;
    auto log = ap * truncate(b.log_series(), depth - 1) + truncate(a.log_series(), depth - 1) * bp;
    return AlphaExpr::from_series(a.top() + b.top(), a.b() + b.b(), plain, log, depth);
}

AlphaExpr alpha_div(const AlphaExpr& a, const AlphaExpr& b)
{
    if (b.has_log())
        throw Error(ErrorKind::LogDegreeOverflow, "division by an expression with a ln alpha part");
    if (b.depth() == 0 || !is_unit(b.plain_at(0)))
        throw Error(ErrorKind::BadLead, "divisor needs a unit leading coefficient");
    int depth = std::min(a.depth(), b.depth());
    auto bp = truncate(b.plain_series(), depth - 1);
    auto plain = series_div(truncate(a.plain_series(), depth - 1), bp);
    auto log = series_div(truncate(a.log_series(), depth - 1), bp);
    return AlphaExpr::from_series(a.top() - b.top(), a.b() - b.b(), plain, log, depth);
}

AlphaExpr alpha_log(const AlphaExpr& a)
{
    if (a.has_log())
        throw Error(ErrorKind::BadLead, "log of an expression with a ln alpha part");
    if (a.depth() == 0 || !(a.plain_at(0) == SPoly(Rat(1))))
        throw Error(ErrorKind::BadLead, "log needs leading coefficient 1");
    auto tail = series_log(a.plain_series());
    std::vector<SPoly> l{exponent(a.top(), a.b(), 0)};
    return AlphaExpr::from_series(0, 0, tail, SSeries(0, a.depth() - 1, l), a.depth());
}

// D(c a^q) = q c a^{q-1};  D(c a^q ln a) = c a^{q-1} + q c a^{q-1} ln a
AlphaExpr apply_D(const AlphaExpr& a)
{
    std::vector<SPoly> p(a.depth()), l(a.depth());
    for (int n = 0; n < a.depth(); ++n) {
        SPoly q = exponent(a.top(), a.b(), n);
        p[n] = q * a.plain_at(n) + a.log_at(n);
        l[n] = q * a.log_at(n);
    }
    return AlphaExpr(a.top() - 1, a.b(), a.depth(), std::move(p), std::move(l));
}

// sum_k g_k D^k a. Term alpha^{top - v - j} collects k = v..v+j, so the result
// depth is bounded both by a's depth and by the known coefficients of g.
AlphaExpr apply_opseries(const SSeries& g, const AlphaExpr& a)
{
    if (g.is_zero())
        throw Error(ErrorKind::InsufficientOrder, "operator series vanishes to its order");
    int v = g.valuation();
    if (v < 0)
        throw Error(ErrorKind::OutOfRange, "operator series needs valuation >= 0");
    int depth = std::min(a.depth(), g.order() + 1 - v);
    if (depth <= 0)
        throw Error(ErrorKind::InsufficientOrder, "operator series order too small for any term");
    int top = a.top() - v;
    std::vector<SPoly> p(depth), l(depth);
    AlphaExpr dk = a;
    for (int k = 0; k < v; ++k)
        dk = apply_D(dk);
    for (int k = v; k < v + depth; ++k) {
        SPoly c = g.coeff(k);
        int off = k - v;
        if (!c.is_zero()) {
            for (int n = 0; n + off < depth; ++n) {
                p[n + off] += c * dk.plain_at(n);
                l[n + off] += c * dk.log_at(n);
            }
        }
        dk = apply_D(dk);
    }
    return AlphaExpr(top, a.b(), depth, std::move(p), std::move(l));
}

AlphaExpr apply_opseries(const RSeries& g, const AlphaExpr& a)
{
    return apply_opseries(lift<SPoly>(g), a);
}

AlphaExpr ln_g(const RSeries& g, int depth)
{
    if (!g.is_normalized())
        throw Error(ErrorKind::NotNormalized, "ln_g needs g in x + x^2 Rat[[x]]");
    // x/g = sum A_n x^n / n!  =>  coefficient of alpha^{-n} is (-1)^{n-1} A_n / n
    auto ratio = series_div(RSeries::x(g.order()), g);
    if (ratio.order() < depth - 1)
        throw Error(ErrorKind::InsufficientOrder, "g order too small for ln_g depth");
    std::vector<SPoly> p(depth);
    for (int n = 1; n < depth; ++n) {
        Rat A = ratio.coeff(n) * Rat(factorial(n));
        p[n] = SPoly(A / Rat(n) * (n % 2 ? 1 : -1));
    }
    return AlphaExpr(0, 0, depth, std::move(p), {SPoly(Rat(1))});
}

// d/ds [c a^{q}] = c' a^q + b c a^q ln a
AlphaExpr d_ds(const AlphaExpr& a)
{
    if (a.has_log() && a.b() != 0)
        throw Error(ErrorKind::LogDegreeOverflow, "d/ds would create (ln alpha)^2");
    std::vector<SPoly> p(a.depth()), l(a.depth());
    for (int n = 0; n < a.depth(); ++n) {
        p[n] = a.plain_at(n).derivative();
        l[n] = a.log_at(n).derivative() + a.plain_at(n) * Rat(a.b());
    }
    return AlphaExpr(a.top(), a.b(), a.depth(), std::move(p), std::move(l));
}

AlphaExpr substitute_affine(const AlphaExpr& a, long c0, long c1)
{
    std::vector<SPoly> p(a.depth()), l(a.depth());
    for (int n = 0; n < a.depth(); ++n) {
        p[n] = a.plain_at(n).substitute_affine(Rat(c0), Rat(c1));
        l[n] = a.log_at(n).substitute_affine(Rat(c0), Rat(c1));
    }
    return AlphaExpr(a.top() + static_cast<int>(a.b() * c0), static_cast<int>(a.b() * c1), a.depth(),
        std::move(p), std::move(l));
}

AlphaPoly apply_opseries(const RSeries& g, const AlphaPoly& q)
{
    if (g.valuation() < 0)
        throw Error(ErrorKind::OutOfRange, "operator series needs valuation >= 0");
    if (g.order() < q.degree())
        throw Error(ErrorKind::InsufficientOrder,
            "operator series order " + std::to_string(g.order()) + " below polynomial degree " +
                std::to_string(q.degree()));
    AlphaPoly r;
    AlphaPoly dk = q;
    for (int k = 0; k <= q.degree(); ++k) {
        if (k >= g.valuation())
            r += dk * g.coeff(k);
        dk = dk.derivative();
    }
    return r;
}

std::string AlphaMismatch::describe() const
{
    return std::string(log_power ? "ln-part" : "plain part") + " at tail offset " + std::to_string(offset) +
        ", s-degree " + std::to_string(s_degree);
}

std::optional<AlphaMismatch> compare(const AlphaExpr& a, const AlphaExpr& b)
{
    if (a.b() != b.b())
        return AlphaMismatch{-1, 0, -1};
    int top = std::max(a.top(), b.top());
    int low = std::max(a.top() - a.depth() + 1, b.top() - b.depth() + 1);
    int depth = std::max(0, top - low + 1);
    AlphaExpr x = truncate_depth(a.realign(top), depth);
    AlphaExpr y = truncate_depth(b.realign(top), depth);
    for (int n = 0; n < depth; ++n) {
        for (int j = 0; j < 2; ++j) {
            SPoly u = j ? x.log_at(n) : x.plain_at(n);
            SPoly w = j ? y.log_at(n) : y.plain_at(n);
            if (u == w)
                continue;
            int deg = std::max(u.degree(), w.degree());
            for (int d = 0; d <= deg; ++d)
                if (u.coeff(d) != w.coeff(d))
                    return AlphaMismatch{n, j, d};
        }
    }
    return std::nullopt;
}

} // namespace fpsl
