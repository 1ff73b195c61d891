#include "fpsl/opcalc.hpp"

#include "fpsl/eigen.hpp"
#include "fpsl/transforms.hpp"

#include <mutex>

namespace fpsl {

struct PolyOperator::Node {
    enum Kind { Identity, MulAlpha, OfD, Multiply, Compose, Sum, Difference } kind;
    RSeries series;
    AlphaPoly poly;
    std::shared_ptr<const Node> left, right;
};

PolyOperator PolyOperator::identity()
{
    return PolyOperator(std::make_shared<const Node>(Node{Node::Identity, {}, {}, {}, {}}));
}

PolyOperator PolyOperator::mul_alpha()
{
    return PolyOperator(std::make_shared<const Node>(Node{Node::MulAlpha, {}, {}, {}, {}}));
}

PolyOperator PolyOperator::of_D(RSeries g)
{
    return PolyOperator(std::make_shared<const Node>(Node{Node::OfD, std::move(g), {}, {}, {}}));
}

PolyOperator PolyOperator::scalar(const Rat& c)
{
    return multiply(AlphaPoly(c));
}

PolyOperator PolyOperator::multiply(const AlphaPoly& p)
{
    return PolyOperator(std::make_shared<const Node>(Node{Node::Multiply, {}, p, {}, {}}));
}

AlphaPoly PolyOperator::apply(const AlphaPoly& q) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case Node::Identity:
        return q;
    case Node::MulAlpha:
        return AlphaPoly::var() * q;
    case Node::OfD:
        return apply_opseries(n.series, q);
    case Node::Multiply:
        return n.poly * q;
    case Node::Compose:
        return PolyOperator(n.left).apply(PolyOperator(n.right).apply(q));
    case Node::Sum:
        return PolyOperator(n.left).apply(q) + PolyOperator(n.right).apply(q);
    case Node::Difference:
        return PolyOperator(n.left).apply(q) - PolyOperator(n.right).apply(q);
    }
    return q;
}

PolyOperator operator*(const PolyOperator& a, const PolyOperator& b)
{
    using Node = PolyOperator::Node;
    return PolyOperator(std::make_shared<const Node>(Node{Node::Compose, {}, {}, a.node_, b.node_}));
}

PolyOperator operator+(const PolyOperator& a, const PolyOperator& b)
{
    using Node = PolyOperator::Node;
    return PolyOperator(std::make_shared<const Node>(Node{Node::Sum, {}, {}, a.node_, b.node_}));
}

PolyOperator operator-(const PolyOperator& a, const PolyOperator& b)
{
    using Node = PolyOperator::Node;
    return PolyOperator(std::make_shared<const Node>(Node{Node::Difference, {}, {}, a.node_, b.node_}));
}

PolyOperator PolyOperator::power(unsigned n) const
{
    PolyOperator r = identity();
    for (unsigned i = 0; i < n; ++i)
        r = *this * r;
    return r;
}

PolyOperator shift_operator(const RSeries& f)
{
    detail::require_normalized(f, "A_f");
    return PolyOperator::mul_alpha() * PolyOperator::of_D(reciprocal(derive(f)));
}

PolyOperator derivation_operator(const RSeries& f)
{
    detail::require_normalized(f, "D_f");
    return PolyOperator::of_D(f);
}

AlphaPoly apply_Af(const RSeries& f, const AlphaPoly& q)
{
    return shift_operator(f).apply(q);
}

AlphaPoly apply_Df(const RSeries& f, const AlphaPoly& q)
{
    return derivation_operator(f).apply(q);
}

namespace {

// (X)_n = prod_{j<n} (X - j), rightmost factor j = 0
PolyOperator falling(const PolyOperator& X, int n)
{
    PolyOperator r = PolyOperator::identity();
    for (int j = 0; j < n; ++j)
        r = (X - PolyOperator::scalar(Rat(j))) * r;
    return r;
}

AlphaPoly divide_by_alpha(const AlphaPoly& p)
{
    if (sgn(p.coeff(0)) != 0)
        throw Error(ErrorKind::InternalCheck, "polynomial is not divisible by alpha");
    return AlphaPoly(std::vector<Rat>(p.coeffs().begin() + std::min<size_t>(1, p.coeffs().size()),
        p.coeffs().end()));
}

std::string tag(const Rat& r)
{
    return to_string(r);
}

RSeries psi_generator(int order) // T^-1(x e^-x)
{
    return transform_T_inv(shift(exp_linear(-1, order - 1), 1));
}

} // namespace

AlphaPoly family_from_monic_seed(const RSeries& f, const AlphaPoly& q, int n)
{
    if (q.degree() != n)
        throw Error(ErrorKind::DegreeMismatch, "q must have degree " + std::to_string(n));
    if (q.lead() != 1)
        throw Error(ErrorKind::NotMonic, "q must be monic");
    detail::require_normalized(f, "family_from_monic_seed");
    auto op = falling(PolyOperator::mul_alpha() * PolyOperator::of_D(f), n);
    return op.apply(q) * (Rat(1) / Rat(factorial(n)));
}

const std::vector<Int>& stirling_row(int n)
{
    if (n < 0)
        throw Error(ErrorKind::OutOfRange, "Stirling row index must be >= 0");
    static std::mutex mu;
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        int m = static_cast<int>(rows.size()) - 1;
        // s(m+1, k) = s(m, k-1) - m s(m, k)
        std::vector<Int> next(m + 2);
        for (int k = 0; k <= m + 1; ++k) {
            Int a = k >= 1 ? prev[k - 1] : Int(0);
            Int b = k <= m ? prev[k] : Int(0);
            next[k] = a - m * b;
        }
        rows.push_back(std::move(next));
    }
    return rows[n];
}

Rat stirling_first(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        throw Error(ErrorKind::OutOfRange,
            "stirling_first needs 0 <= k <= n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    return Rat(stirling_row(n)[k]);
}

namespace {

AlphaPoly one_minus_alpha_power(int m)
{
    return pow(AlphaPoly(std::vector<Rat>{1, -1}), m);
}

// binom(m - alpha, m)
AlphaPoly binom_m_minus_alpha(int m)
{
    return binom_poly<AlphaVar>(Rat(m), m).substitute_affine(0, -1);
}

AlphaPoly tail_weight(int m, NuVariant v)
{
    return v == NuVariant::MultinomialSum ? one_minus_alpha_power(m) * (Rat(1) / Rat(factorial(m)))
                                          : binom_m_minus_alpha(m);
}

// Right-hand sum of the nu formulas for fixed n, as a polynomial in alpha.
// MultinomialSum: weights 1/m! per part, factor (n - S_j) after parts 1..k-1, times (n-1)!.
// ReciprocalSum: factor (n - S_{j-1})/(m_j + 1) for parts 1..k, then the (k+1)-th part.
AlphaPoly nu_rhs_dp(int n, NuVariant variant)
{
    int total = n - 1;
    const auto& srow = stirling_row(n);
    AlphaPoly result;
    std::vector<Rat> W(total + 1);
    W[0] = 1;
    for (int k = 1; k <= n; ++k) {
        // W holds the weight of the first k-1 parts (MultinomialSum) or k parts (ReciprocalSum).
        if (variant == NuVariant::ReciprocalSum) {
            std::vector<Rat> next(total + 1);
            for (int S = 0; S <= total; ++S) {
                if (sgn(W[S]) == 0)
                    continue;
                for (int m = 0; S + m <= total; ++m)
                    next[S + m] += W[S] * Rat(n - S) / Rat(m + 1);
            }
            W = std::move(next);
        }
        AlphaPoly inner;
        for (int S = 0; S <= total; ++S)
            if (sgn(W[S]) != 0)
                inner += tail_weight(total - S, variant) * W[S];
        result += inner * Rat(srow[k]);
        if (variant == NuVariant::MultinomialSum) {
            std::vector<Rat> next(total + 1);
            for (int S = 0; S <= total; ++S) {
                if (sgn(W[S]) == 0)
                    continue;
                for (int m = 0; S + m <= total; ++m)
                    next[S + m] += W[S] / Rat(factorial(m)) * Rat(n - S - m);
            }
            W = std::move(next);
        }
    }
    if (variant == NuVariant::MultinomialSum)
        result *= Rat(factorial(total));
    return result;
}

// nu_n from the right-hand side: multiply by alpha and undo the left prefactor.
AlphaPoly nu_from_rhs(int n, const AlphaPoly& rhs, NuVariant variant)
{
    Rat sign = (n - 1) % 2 ? -1 : 1;
    Rat pre = variant == NuVariant::MultinomialSum ? sign * Rat(factorial(n - 1)) : sign * Rat(n);
    return AlphaPoly::var() * rhs * (Rat(1) / pre);
}

} // namespace

AlphaPoly nu_by_composition_sum(int n, NuVariant variant)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "nu_by_composition_sum needs n >= 1");
    return nu_from_rhs(n, nu_rhs_dp(n, variant), variant);
}

Rat psi_coeff_by_composition_sum(int n, AnVariant variant)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "psi_coeff_by_composition_sum needs n >= 1");
    // The a_n sums are the nu sums at alpha = 0.
    Rat rhs = nu_rhs_dp(n, variant == AnVariant::MultinomialSum ? NuVariant::MultinomialSum
                                                                : NuVariant::ReciprocalSum)
                  .eval(0);
    Rat sign = (n - 1) % 2 ? -1 : 1;
    Rat pre = variant == AnVariant::MultinomialSum ? Rat(factorial(n) * factorial(n - 1)) : Rat(n * factorial(n));
    return rhs / (sign * pre);
}

void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit)
{
    if (parts <= 0) {
        if (total == 0)
            visit({});
        return;
    }
    std::vector<int> m(parts);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == parts - 1) {
            m[i] = left;
            visit(m);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            m[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, total);
}

AlphaPoly nu_by_enumeration(int n, NuVariant variant)
{
    if (n < 1)
        throw Error(ErrorKind::OutOfRange, "nu_by_enumeration needs n >= 1");
    int total = n - 1;
    std::vector<Int> fact(n + 1);
    for (int j = 0; j <= n; ++j)
        fact[j] = factorial(j);
    AlphaPoly rhs;
    for (int k = 1; k <= n; ++k) {
        // Scalar weights bucketed by the last part, which alone carries the alpha dependence.
        std::vector<Rat> bucket(total + 1);
        if (variant == NuVariant::MultinomialSum) {
            for_each_composition(total, k, [&](const std::vector<int>& m) {
                Int denom = 1, prod = 1;
                int S = 0;
                for (int j = 0; j < k; ++j) {
                    denom *= fact[m[j]];
                    S += m[j];
                    if (j < k - 1)
                        prod *= n - S;
                }
                bucket[m[k - 1]] += Rat(Int(fact[total] / denom * prod));
            });
        } else {
            for_each_composition(total, k + 1, [&](const std::vector<int>& m) {
                Int num = 1, den = 1;
                int S = 0;
                for (int j = 0; j < k; ++j) {
                    num *= n - S;
                    den *= m[j] + 1;
                    S += m[j];
                }
                bucket[m[k]] += rat(num, den);
            });
        }
        AlphaPoly inner;
        for (int last = 0; last <= total; ++last)
            if (sgn(bucket[last]) != 0)
                inner += (variant == NuVariant::MultinomialSum ? one_minus_alpha_power(last) : binom_m_minus_alpha(last))
                    * bucket[last];
        rhs += inner * stirling_first(n, k);
    }
    return nu_from_rhs(n, rhs, variant);
}

RSeries combinatorial_QTinv(const RSeries& c, int order)
{
    detail::require_normalized(c, "combinatorial_QTinv");
    if (c.order() < order)
        throw Error(ErrorKind::InsufficientOrder, "c order below requested order");
    std::vector<Rat> out(order + 1);
    for (int n = 1; n <= order; ++n) {
        int total = n - 1;
        const auto& srow = stirling_row(n);
        // U[S] = sum over the first j parts with partial sum S of prod c_{1+m_i} (n - S_i).
        // Every part carries its factor; the last one is n - (n - 1) = 1.
        std::vector<Rat> U(total + 1);
        U[0] = 1;
        Rat acc = 0;
        for (int k = 1; k <= n; ++k) {
            std::vector<Rat> next(total + 1);
            for (int S = 0; S <= total; ++S) {
                if (sgn(U[S]) == 0)
                    continue;
                for (int m = 0; S + m <= total; ++m)
                    next[S + m] += U[S] * c.coeff(1 + m) * Rat(n - S - m);
            }
            U = std::move(next);
            acc += Rat(srow[k]) * U[total];
        }
        out[n] = acc / Rat(factorial(n));
    }
    return RSeries::from_coeffs(out, order);
}

AlphaPoly solve_shift_power(const RSeries& f, int n, const AlphaPoly& target)
{
    auto A = shift_operator(f).power(n);
    AlphaPoly rest = target;
    AlphaPoly x;
    while (!rest.is_zero()) {
        int d = rest.degree() - n;
        if (d < 0)
            throw Error(ErrorKind::DegreeMismatch, "target is not in the image of A_f^" + std::to_string(n));
        // A_f^n alpha^d = alpha^{d+n} + lower terms
        AlphaPoly term = AlphaPoly::monomial(d, rest.lead());
        x += term;
        rest -= A.apply(term);
    }
    return x;
}

void verify_operator_basics(Verifier& v, const RSeries& f, int n_max, int degree, const std::string& id)
{
    auto Af = shift_operator(f);
    auto Df = derivation_operator(f);
    v.basis(id + ".commutator", [&](const AlphaPoly& q) { return (Df * Af - Af * Df).apply(q); },
        [](const AlphaPoly& q) { return q; }, degree);
    for (int n = 1; n <= n_max; ++n)
        v.basis(id + ".normal-order.n" + std::to_string(n),
            [&](const AlphaPoly& q) { return (Af.power(n) * Df.power(n)).apply(q); },
            [&](const AlphaPoly& q) { return falling(Af * Df, n).apply(q); }, degree);
    auto fam = family_from_f(f, n_max + 1);
    auto famT = family_from_f(transform_T(f), n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        v.poly(id + ".fprime-power.n" + std::to_string(n),
            PolyOperator::of_D(derive(f)).power(n).apply(fam.p[n]), divide_by_alpha(famT.p[n + 1]));
    for (int n = 0; n <= n_max; ++n)
        v.poly(id + ".shift-power.n" + std::to_string(n), Af.power(n).apply(AlphaPoly(Rat(1))), fam.p[n]);
}

void verify_monic_seed_family(Verifier& v, const RSeries& f, int n_max, const std::string& id)
{
    auto fam = family_from_f(transform_T_inv(f), n_max);
    for (int n = 1; n <= n_max; ++n) {
        std::string k = ".n" + std::to_string(n);
        v.poly(id + ".monic-seed.power" + k, family_from_monic_seed(f, AlphaPoly::monomial(n), n), fam.p[n]);
        v.poly(id + ".monic-seed.falling" + k, family_from_monic_seed(f, falling_factorial<AlphaVar>(n), n), fam.p[n]);
    }
}

void verify_transform_shift_forms(Verifier& v, const RSeries& f, int n_max, const std::string& id)
{
    auto R = series_div(derive(derive(f)), derive(f));
    auto S = series_div(derive(f) - RSeries::one(f.order()), f);
    auto a = PolyOperator::mul_alpha();
    auto famf = family_from_f(f, n_max + 1);
    auto famT = family_from_f(transform_T(f), n_max + 1);
    auto famTi = family_from_f(transform_T_inv(f), n_max + 1);
    auto one = AlphaPoly(Rat(1));
    for (int n = 1; n <= n_max; ++n) {
        std::string k = ".n" + std::to_string(n);
        // factors listed left to right; the rightmost acts first
        PolyOperator e33 = PolyOperator::identity(), e34 = PolyOperator::identity(),
                     e35 = PolyOperator::identity();
        for (int j = 1; j <= n; ++j) {
            e33 = e33 * (a - PolyOperator::of_D(R * Rat(j)));
            e34 = e34 * (a + PolyOperator::of_D(R * Rat(n + 1 - j)));
            e35 = e35 * (a + PolyOperator::of_D(S * Rat(j)));
        }
        v.poly(id + ".shift-forms.f" + k, e33.apply(one), divide_by_alpha(famf.p[n + 1]));
        v.poly(id + ".shift-forms.Tf" + k, e34.apply(one), divide_by_alpha(famT.p[n + 1]));
        v.poly(id + ".shift-forms.Tinvf" + k, e35.apply(one), divide_by_alpha(famTi.p[n + 1]));
    }
}

void verify_composition_sums(Verifier& v, int n_nu, int n_an, int n_enumerated)
{
    int top = std::max(n_nu, n_an);
    auto gen = psi_generator(top);
    auto fam = family_from_f(gen, n_nu);
    for (int n = 1; n <= n_nu; ++n) {
        std::string k = ".n" + std::to_string(n);
        v.poly("composition.nu.multinomial" + k, nu_by_composition_sum(n, NuVariant::MultinomialSum), fam.p[n]);
        v.poly("composition.nu.reciprocal" + k, nu_by_composition_sum(n, NuVariant::ReciprocalSum), fam.p[n]);
    }
    for (int n = 1; n <= n_enumerated; ++n) {
        std::string k = ".n" + std::to_string(n);
        v.poly("composition.nu.enumerated.multinomial" + k, nu_by_enumeration(n, NuVariant::MultinomialSum),
            nu_by_composition_sum(n, NuVariant::MultinomialSum));
        v.poly("composition.nu.enumerated.reciprocal" + k, nu_by_enumeration(n, NuVariant::ReciprocalSum),
            nu_by_composition_sum(n, NuVariant::ReciprocalSum));
    }
    auto psi = invert(gen);
    std::vector<Rat> a8(n_an + 1), a9(n_an + 1);
    for (int n = 1; n <= n_an; ++n) {
        a8[n] = psi_coeff_by_composition_sum(n, AnVariant::MultinomialSum);
        a9[n] = psi_coeff_by_composition_sum(n, AnVariant::ReciprocalSum);
    }
    v.series("composition.an.multinomial", RSeries::from_coeffs(a8, n_an), psi, n_an);
    v.series("composition.an.reciprocal", RSeries::from_coeffs(a9, n_an), psi, n_an);
    v.series("composition.an.psi-ode", psi_ode(n_an), psi, n_an);
}

void verify_combinatorial_QTinv(Verifier& v, int order)
{
    auto check = [&](const std::string& id, const RSeries& c) {
        v.series(id, combinatorial_QTinv(c, order), invert(transform_T_inv(c)), order);
    };
    check("qtinv.identity", RSeries::x(order));
    check("qtinv.xexp", shift(exp_linear(-1, order - 1), 1));
    check("qtinv.log1p", log1p_series(1, order));
    for (unsigned seed = 11; seed <= 13; ++seed)
        check("qtinv.random" + std::to_string(seed), random_normalized(seed, order));
    auto psi = invert(psi_generator(order));
    auto viaLog = x_ddx(combinatorial_QTinv(log1p_series(1, order), order), 1);
    v.series("qtinv.psi-from-log", viaLog, psi, order);
}

namespace {

AlphaPoly centered_product(const Rat& p, int n) // prod_{j=-n}^{n} (alpha + j p)
{
    AlphaPoly r(Rat(1));
    for (int j = -n; j <= n; ++j)
        r *= AlphaPoly(std::vector<Rat>{Rat(j) * p, 1});
    return r;
}

void exp_family_operator_cases(Verifier& v, const RSeries& f, const Rat& p, int n_max, int degree, const std::string& id,
    bool quotient_only)
{
    auto Af = shift_operator(f);
    auto fp = PolyOperator::of_D(derive(f));
    auto g = [&](int n) { return Af.power(n + 1) * fp.power(2 * n + 1) * Af.power(n); };
    for (int n = 0; n <= n_max; ++n) {
        std::string k = ".n" + std::to_string(n);
        auto gn = g(n);
        if (!quotient_only)
            v.basis(id + ".operator" + k, [&](const AlphaPoly& q) { return gn.apply(q); },
                [&](const AlphaPoly& q) { return centered_product(p, n) * q; }, degree);
        if (n >= 1) {
            auto prev = g(n - 1);
            AlphaPoly factor(std::vector<Rat>{-Rat(n * n) * p * p, 0, 1});
            v.basis(id + ".quotient" + k, [&](const AlphaPoly& q) { return gn.apply(q); },
                [&](const AlphaPoly& q) { return factor * prev.apply(q); }, degree);
        }
    }
}

} // namespace

void verify_exp_family_operators(Verifier& v, const Rat& p, const Rat& A, int n_max, int degree)
{
    auto f = delta_family(p, A, degree + 2 * n_max + 3);
    exp_family_operator_cases(v, f, p, n_max, degree, "expfam.p" + tag(p) + ".A" + tag(A), false);
}

void verify_exp_family_operators_small_p(Verifier& v, const Rat& A, int n_max, int degree)
{
    int ord = degree + 2 * n_max + 3;
    auto f = polynomial_series({0, 1, A}, ord);
    exp_family_operator_cases(v, f, 0, n_max, degree, "expfam.p0.A" + tag(A), false);
    for (Rat p : {Rat(1, 10), Rat(1, 100)})
        exp_family_operator_cases(v, delta_family(p, A, ord), p, n_max, degree, "expfam.p" + tag(p) + ".A" + tag(A), true);
}

void verify_inverse_shift_forms(Verifier& v, const Rat& p, const Rat& A, int n_max, int depth)
{
    std::string id = "expfam.inverse-shift.p" + tag(p) + ".A" + tag(A);
    int ord = std::max(depth, 3 * n_max + 3) + 1;
    auto f = delta_family(p, A, ord);
    auto c = continuation_from_f(f, depth);
    auto fam = family_from_f(f, n_max + 1);
    auto Af = shift_operator(f);
    auto fp = PolyOperator::of_D(derive(f));
    for (int n = 1; n <= n_max; ++n) {
        std::string k = ".n" + std::to_string(n);
        // A_f^{-n} realized by the triangular solve on images A_f^n alpha^m
        v.basis(id + ".inverse-shift" + k,
            [&](const AlphaPoly& q) {
                AlphaPoly r = solve_shift_power(f, n, Af.power(n).apply(q));
                return centered_product(p, n) * r;
            },
            [&](const AlphaPoly& q) { return (Af.power(n + 1) * fp.power(2 * n + 1)).apply(Af.power(n).apply(q)); },
            3);
        // on 1: A_f^{-n} 1 is the continuation at s = -n
        auto lhs = alpha_mul(AlphaExpr::from_poly(centered_product(p, n), depth), continuation_at(c.ps, -n));
        v.alpha(id + ".on-one" + k, lhs, AlphaExpr::from_poly(fam.p[n + 1], depth), depth - 2 * n - 1);
        auto d = continuation_from_f(delta_p(p, ord), depth);
        v.alpha(id + ".reflection" + k, alpha_mul(continuation_at(d.ps, n), continuation_at(c.ps, 1 - n)),
            alpha_mul(continuation_at(d.ps, 1 - n), continuation_at(c.ps, n)), depth - 2 * n);
    }
}

} // namespace fpsl
