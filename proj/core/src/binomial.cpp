#include "fpsl/binomial.hpp"

#include "fpsl/opcalc.hpp"
#include "fpsl/transforms.hpp"

namespace fpsl {

namespace {

std::string tag(const Rat& r)
{
    return to_string(r);
}

// sum f_k (c0 + c1 s)^k x^k
SSeries rescaled_operator(const RSeries& f, long c0, long c1)
{
    SPoly lin(std::vector<Rat>{Rat(c0), Rat(c1)});
    std::vector<SPoly> v(f.order() + 1);
    for (int k = std::max(0, f.valuation()); k <= f.order(); ++k)
        v[k] = pow(lin, k) * f.coeff(k);
    return SSeries(0, f.order(), std::move(v));
}

// sum c_n w_n(s) alpha^{-1-n}
AlphaExpr weighted_inverse_powers(const AlphaExpr& p_minus_one, const std::vector<SPoly>& w)
{
    std::vector<SPoly> tail;
    for (size_t n = 0; n < w.size(); ++n)
        tail.push_back(p_minus_one.plain_at(static_cast<int>(n)) * w[n]);
    return AlphaExpr(-1, 0, static_cast<int>(w.size()), std::move(tail));
}

AlphaExpr ratio_dot(const AlphaExpr& dot, const AlphaExpr& ps)
{
    return alpha_div(dot, ps);
}

} // namespace

std::vector<AlphaPoly> exp_family(const RSeries& h, int n_max)
{
    if (h.order() < n_max)
        throw Error(ErrorKind::InsufficientOrder, "generating series order below n_max");
    auto gen = series_exp(scalar_mul(lift<AlphaPoly>(truncate(h, n_max)), AlphaPoly::var()));
    std::vector<AlphaPoly> p;
    for (int n = 0; n <= n_max; ++n)
        p.push_back(gen.coeff(n) * Rat(factorial(n)));
    return p;
}

BinomialFamily family_from_f(const RSeries& f, int n_max)
{
    detail::require_normalized(f, "family_from_f");
    if (f.order() < n_max)
        throw Error(ErrorKind::InsufficientOrder, "f order below n_max");
    return {f, exp_family(invert(f), n_max)};
}

CanonicalContinuation continuation_from_f(const RSeries& f, int depth)
{
    detail::require_normalized(f, "continuation_from_f");
    if (f.order() < depth)
        throw Error(ErrorKind::InsufficientOrder, "f order below continuation depth");
    auto ratio = truncate(series_div(RSeries::x(f.order()), f), depth - 1);
    auto powered = series_pow(lift<SPoly>(ratio), SPoly::var());
    CanonicalContinuation c;
    c.f = f;
    std::vector<SPoly> tail;
    for (int n = 0; n < depth; ++n) {
        c.q.push_back(powered.coeff(n) * Rat(factorial(n)));
        tail.push_back(binom_poly<SVar>(-1, n) * c.q.back());
    }
    c.ps = AlphaExpr(0, 1, depth, std::move(tail));
    return c;
}

AlphaExpr ps_dot(const CanonicalContinuation& c)
{
    auto d = d_ds(c.ps);
    if (d.log() != c.ps.plain())
        throw Error(ErrorKind::InternalCheck, "ln-part of d/ds p_s differs from p_s");
    return d;
}

AlphaExpr continuation_at(const AlphaExpr& ps, long c0, long c1)
{
    return substitute_affine(ps, c0, c1);
}

AlphaPoly continuation_polynomial(const CanonicalContinuation& c, int m)
{
    if (m < 0 || c.ps.depth() <= m)
        throw Error(ErrorKind::OutOfRange, "continuation depth must exceed m");
    auto e = continuation_at(c.ps, m);
    std::vector<Rat> coeffs(m + 1);
    for (int n = 0; n < e.depth(); ++n) {
        Rat v = e.plain_at(n).coeff(0);
        if (n <= m)
            coeffs[m - n] = v;
        else if (sgn(v) != 0)
            throw Error(ErrorKind::InternalCheck, "continuation at integer s does not terminate");
    }
    return AlphaPoly(std::move(coeffs));
}

RSeries delta_exp(const Rat& p, const Rat& A, int order)
{
    return delta_p(p, order) * exp_linear(-A, order);
}

RSeries delta_family(const Rat& p, const Rat& A, int order)
{
    return delta_p(p, order) * (RSeries::one(order) + delta_p(-p, order) * A);
}

void verify_family(Verifier& v, const RSeries& f, int n_max, const std::string& id)
{
    auto fam = family_from_f(f, n_max);
    for (int n = 1; n <= n_max; ++n)
        v.poly(id + ".ladder.n" + std::to_string(n), apply_opseries(f, fam.p[n]), fam.p[n - 1] * Rat(n));
    // Both sides have degree <= n in beta, so n+1 sample points decide the identity.
    std::string bad;
    for (int n = 0; n <= n_max && bad.empty(); ++n) {
        for (int j = 0; j <= n; ++j) {
            Rat beta = rat(2 * j - n, 3);
            AlphaPoly rhs;
            for (int k = 0; k <= n; ++k)
                rhs += fam.p[k] * (Rat(binomial(n, k)) * fam.p[n - k].eval(beta));
            if (!(fam.p[n].substitute_affine(beta, 1) == rhs)) {
                bad = "n = " + std::to_string(n) + ", beta = " + tag(beta);
                break;
            }
        }
    }
    v.expect(id + ".convolution", bad.empty(), bad);
}

void verify_continuation(Verifier& v, const RSeries& f, int depth, const std::string& id)
{
    auto c = continuation_from_f(f, depth);
    auto fam = family_from_f(f, std::min(depth - 1, 6));
    for (int m = 0; m < static_cast<int>(fam.p.size()); ++m)
        v.poly(id + ".integer.m" + std::to_string(m), continuation_polynomial(c, m), fam.p[m]);
    if (depth > 2)
        v.poly(id + ".p2", continuation_polynomial(c, 2),
            AlphaPoly(std::vector<Rat>{0, -2 * f.coeff(2), 1}));
    auto down = apply_opseries(f, c.ps);
    v.alpha(id + ".ladder.down", down, continuation_at(c.ps, -1, 1) * SPoly::var(), depth - 1);
    auto up = apply_opseries(reciprocal(derive(f)), c.ps).mul_alpha_power(1);
    v.alpha(id + ".ladder.up", up, continuation_at(c.ps, 1, 1), depth - 1);
}

void verify_pdot_endpoints(Verifier& v, const RSeries& f, int depth, const std::string& id)
{
    auto c = continuation_from_f(f, depth);
    auto dot = ps_dot(c);
    v.alpha(id + ".pdot0", continuation_at(dot, 0), ln_g(transform_T(f), depth), depth);
    v.alpha(id + ".pdot1", continuation_at(dot, 1), ln_g(f, depth).mul_alpha_power(1), depth);
}

void verify_pdot_operator_images(Verifier& v, const RSeries& f, int depth, const std::string& id)
{
    auto c = continuation_from_f(f, depth);
    auto dot = ps_dot(c);
    auto lhs0 = apply_opseries(f, continuation_at(dot, 0));
    v.alpha(id + ".f-pdot0", lhs0, apply_opseries(derive(f), AlphaExpr::power(-1, 0, depth)), depth - 1);
    auto lhs1 = apply_opseries(f, continuation_at(dot, 1));
    v.alpha(id + ".f-pdot1", lhs1, AlphaExpr::power(0, 0, depth) + ln_g(transform_T(f), depth), depth - 1);
    auto lg = ln_g(f, depth);
    v.alpha(id + ".lng-defining", apply_opseries(f, lg), AlphaExpr::power(-1, 0, depth), depth - 1);
}

void verify_delta_exp_continuation(Verifier& v, const Rat& p, const Rat& A, int depth)
{
    std::string id = "cont.exp.p" + tag(p) + ".A" + tag(A);
    auto f = delta_exp(p, A, depth + 1);
    auto c = continuation_from_f(f, depth);
    auto ln_ratio = alpha_log(c.ps.mul_alpha_power(-1));
    auto rhs5 = -apply_opseries(rescaled_operator(f, 1, -1), AlphaExpr::ln_alpha(depth));
    v.alpha(id + ".log-ratio", apply_opseries(f, ln_ratio), rhs5, depth);

    auto p_minus_one = continuation_at(c.ps, -1);
    v.alpha(id + ".p-minus-one", p_minus_one, apply_opseries(derive(f), AlphaExpr::power(-1, 0, depth)), depth);
    auto lhs6 = apply_opseries(f, ratio_dot(ps_dot(c), c.ps));
    std::vector<SPoly> w;
    SPoly one_minus_s(std::vector<Rat>{1, -1});
    for (int n = 0; n < depth; ++n)
        w.push_back(pow(one_minus_s, n));
    v.alpha(id + ".pdot-ratio", lhs6, weighted_inverse_powers(p_minus_one, w), depth);
    v.alpha(id + ".pdot-ratio.s1", continuation_at(lhs6, 1), AlphaExpr::power(-1, 0, depth), depth);
}

void verify_delta_family_reflection(Verifier& v, const Rat& p, const Rat& A, int depth)
{
    std::string id = "cont.refl.p" + tag(p) + ".A" + tag(A);
    auto f = delta_family(p, -A, depth + 1);
    auto c = continuation_from_f(f, depth);
    auto p1s = continuation_at(c.ps, 1, -1);

    auto lhs7 = apply_opseries(f, alpha_log(alpha_div(c.ps, p1s)));
    auto op = rescaled_operator(f, 0, 1) - rescaled_operator(f, 1, -1);
    v.alpha(id + ".log-quotient", lhs7, apply_opseries(op, AlphaExpr::ln_alpha(depth)), depth);

    auto dot = ps_dot(c);
    auto sum = ratio_dot(dot, c.ps) + ratio_dot(continuation_at(dot, 1, -1), p1s);
    auto p_minus_one = continuation_at(c.ps, -1);
    std::vector<SPoly> w;
    SPoly s = SPoly::var(), one_minus_s(std::vector<Rat>{1, -1});
    for (int n = 0; n < depth; ++n)
        w.push_back(pow(s, n) + pow(one_minus_s, n));
    v.alpha(id + ".pdot-sum", apply_opseries(f, sum), weighted_inverse_powers(p_minus_one, w), depth);

    auto d = continuation_from_f(delta_p(p, depth + 1), depth);
    auto d1s = continuation_at(d.ps, 1, -1);
    v.alpha(id + ".cross", alpha_mul(d.ps, p1s), alpha_mul(d1s, c.ps), depth);
    auto dm = continuation_from_f(delta_p(-p, depth + 1), depth);
    v.alpha(id + ".delta-pair", alpha_mul(d.ps, continuation_at(dm.ps, 1, -1)), AlphaExpr::power(1, 0, depth),
        depth);
}

void verify_x_minus_x2_reflection(Verifier& v, int depth)
{
    auto f = polynomial_series({0, 1, -1}, depth + 1);
    auto c = continuation_from_f(f, depth);
    v.alpha("cont.x-minus-x2.reflection", continuation_at(c.ps, 1, -1),
        alpha_mul(AlphaExpr::power(1, -2, depth), c.ps), depth);
}

bool reflection_holds(const RSeries& f, const RSeries& g, int depth)
{
    auto cf = continuation_from_f(f, depth);
    auto cg = continuation_from_f(g, depth);
    auto lhs = alpha_mul(cf.ps, continuation_at(cg.ps, 1, -1));
    auto rhs = alpha_mul(cg.ps, continuation_at(cf.ps, 1, -1));
    return !compare(lhs, rhs);
}

void verify_reflection_family(Verifier& v, const Rat& p, const Rat& A, const Rat& B, int depth)
{
    std::string id = "reflection-family.p" + tag(p) + ".A" + tag(A) + ".B" + tag(B);
    auto f = delta_family(p, A, depth + 1);
    auto g = delta_family(p, B, depth + 1);
    auto cf = continuation_from_f(f, depth);
    auto cg = continuation_from_f(g, depth);
    v.alpha(id + ".reflection", alpha_mul(cf.ps, continuation_at(cg.ps, 1, -1)),
        alpha_mul(cg.ps, continuation_at(cf.ps, 1, -1)), depth);
    v.series(id + ".tinv-product", f * transform_T_inv(f), g * transform_T_inv(g), depth);
    auto lhs = derive(f) + f * (2 * g.coeff(2));
    auto rhs = derive(g) + g * (2 * f.coeff(2));
    v.series(id + ".linear-relation", lhs, rhs, depth);
}

void verify_reflection_control(Verifier& v, int depth)
{
    auto f = exp_linear(1, depth + 1) - RSeries::one(depth + 1);
    auto g = RSeries::x(depth + 1);
    v.expect("reflection-family.control.fails", !reflection_holds(f, g, depth),
        "reflection unexpectedly holds for e^x - 1 against x");
}

void verify_shift_structure(Verifier& v, int n_max, int degree, int depth)
{
    int ord = std::max(depth, degree + n_max) + 1;
    auto f = exp_linear(1, ord) - RSeries::one(ord);
    // A_f = alpha e^{-D} here; A_f^n q(alpha) = (alpha)_n q(alpha - n)
    auto shift = shift_operator(f);
    for (int n = 0; n <= n_max; ++n) {
        AlphaPoly pn = falling_factorial<AlphaVar>(n);
        auto op = shift.power(n);
        for (int m = 0; m <= degree; ++m) {
            AlphaPoly lhs = op.apply(AlphaPoly::monomial(m));
            AlphaPoly rhs = pn * AlphaPoly::monomial(m).substitute_affine(-n, 1);
            v.poly("shift.op.n" + std::to_string(n) + ".m" + std::to_string(m), lhs, rhs);
        }
    }
    auto c = continuation_from_f(truncate(f, depth), depth);
    auto dot = ps_dot(c);
    auto dot0 = continuation_at(dot, 0);
    for (int n = 1; n <= n_max; ++n) {
        auto ratio = alpha_div(continuation_at(dot, n), continuation_at(c.ps, n));
        v.alpha("shift.pdot.n" + std::to_string(n), ratio, apply_opseries(exp_linear(-n, depth), dot0), depth);
    }
}

void verify_nu_property(Verifier& v, int n_max)
{
    auto f = transform_T_inv(shift(exp_linear(-1, n_max), 1));
    auto fam = family_from_f(truncate(f, n_max), n_max);
    v.poly("nu.n2", fam.p[2], AlphaPoly(std::vector<Rat>{0, -2, 1}));
    for (int n = 1; n <= n_max; ++n)
        v.poly("nu.shift-derivative.n" + std::to_string(n), fam.p[n] * Rat(n),
            AlphaPoly::var() * fam.p[n].derivative().substitute_affine(-1, 1));
}

} // namespace fpsl
