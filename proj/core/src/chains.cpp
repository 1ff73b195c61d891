#include "fpsl/chains.hpp"

#include "fpsl/binomial.hpp"
#include "fpsl/transforms.hpp"

namespace fpsl {

RSeries gamma_p(const Rat& p, int order)
{
    return invert(delta_exp(p, 1, order));
}

namespace {

// g(c t^n) known to t^ord
RSeries at_power(const RSeries& g, const Rat& c, int n, int ord)
{
    return truncate(substitute_power(scale(g, c), n), ord);
}

RSeries one(int ord)
{
    return RSeries::one(ord);
}

RSeries linear(const Rat& a, const Rat& b, int ord) // a + b t
{
    return polynomial_series({a, b}, ord);
}

// 1 + 2(p-2)t + p^2 t^2
RSeries radicand(const Rat& p, int ord)
{
    return polynomial_series({1, 2 * (p - 2), p * p}, ord);
}

RSeries exp_of(const RSeries& g, const Rat& c)
{
    return series_exp(g * c);
}

struct Gamma {
    RSeries g, dg;
};

Gamma gamma_pair(const Rat& p, int ord)
{
    auto g = gamma_p(p, ord + 1);
    return {truncate(g, ord), truncate(derive(g), ord)};
}

std::vector<RSeries> integrands(const ChainCase& c, ChainReading reading)
{
    int K = c.order - 1;
    switch (c.id) {
    case 1: {
        int n = *c.n;
        Rat N(n);
        auto gm = gamma_pair(1 / N, K);
        auto i1 = series_pow(one(K) - RSeries::monomial(n, K), -1 / N);
        auto i2 = reciprocal(one(K) + RSeries::monomial(n, K));
        auto g_in = at_power(gm.g, N, n, K);
        auto i3 = at_power(gm.dg, N, n, K) * exp_of(g_in, (1 - N) / N);
        auto G = at_power(gm.dg, N * (1 - N), n, K);
        auto X = reading == ChainReading::Corrected ? RSeries::monomial(n, K) * G : G;
        auto num = one(K) + X * (N * (1 - N));
        auto i4 = num * num * reciprocal(one(K) + X * (N * (2 - N)));
        return {i1, i2, i3, i4};
    }
    case 2: {
        int n = *c.n;
        Rat N(n);
        auto gm = gamma_pair(2 / N, K);
        auto i1 = series_pow(one(K) - RSeries::monomial(n, K), -2 / N);
        auto i2 = series_pow(one(K) + RSeries::monomial(n, K, 4), Rat(-1, 2));
        auto i3 = at_power(gm.dg, 2 * N, n, K) * exp_of(at_power(gm.g, 2 * N, n, K), (2 - N) / N);
        return {i1, i2, i3};
    }
    case 3: {
        Rat p = *c.p;
        auto gm = gamma_pair(p, K);
        auto i1 = series_exp(gm.g);
        auto i2 = linear(1, p - 1, K) * reciprocal(linear(1, p, K));
        auto root = series_pow(radicand(p, K), Rat(1, 2));
        auto i3 = (linear(1, p, K) + root) * reciprocal(root * Rat(2));
        return {i1, i2, i3};
    }
    case 4: {
        Rat p = *c.p;
        auto gm = gamma_pair(p, K);
        auto i1 = series_pow(linear(1, 1, K), -1 / p) * series_pow(linear(1, 1 - p, K), 1 / p - 1);
        auto i2 = gm.dg * gm.dg * exp_of(gm.g, p - 2);
        return {i1, i2};
    }
    case 5: {
        Rat p = *c.p;
        auto gm = gamma_pair(p, K);
        auto gi = gamma_pair(1 / p, K);
        auto i1 = series_pow(gm.dg, 1 - p) * exp_of(gm.g, p * (1 - p));
        auto d = scale(gi.dg, p);
        auto i2 = d * d * exp_of(scale(gi.g, p), -2);
        return {i1, i2};
    }
    case 6: {
        Rat p = *c.p, a = *c.alpha;
        auto gm = gamma_pair(p, K);
        auto ga = gamma_pair(a, K);
        auto i1 = series_pow(gm.dg, 1 - 1 / a) * exp_of(gm.g, (1 - p) / a);
        auto g = scale(ga.g, 1 / a);
        auto den = one(K) + RSeries::x(K) * exp_of(g, 1) * (1 - p);
        auto i2 = scale(ga.dg, 1 / a) * exp_of(g, -1) * reciprocal(den);
        return {i1, i2};
    }
    case 7: {
        Rat p = *c.p;
        auto gm = gamma_pair(p, K);
        auto i1 = reciprocal(gm.dg) * exp_of(gm.g, 2 - p);
        auto root = series_pow(radicand(p, K), Rat(1, 2));
        auto i2 = (linear(1, p - 2, K) + root) * reciprocal(root * Rat(2));
        return {i1, i2};
    }
    case 8: {
        Rat p = *c.p, a = *c.alpha;
        auto gm = gamma_pair(p, K);
        auto gq = gamma_pair(p / (1 - a), K);
        auto i1 = exp_of(gm.g, a);
        auto g = scale(gq.g, 1 - a);
        auto first = reading == ChainReading::Corrected ? scale(gq.dg, 1 - a) : g;
        auto i2 = first * (RSeries::x(K) * (p - 1) + exp_of(g, -1));
        return {i1, i2};
    }
    }
    throw Error(ErrorKind::OutOfRange, "chain id must be 1..8");
}

} // namespace

std::string chain_label(const ChainCase& c)
{
    std::string s = "chain" + std::to_string(c.id);
    if (c.n)
        s += ".n" + std::to_string(*c.n);
    if (c.p)
        s += ".p" + to_string(*c.p);
    if (c.alpha)
        s += ".a" + to_string(*c.alpha);
    return s;
}

std::vector<RSeries> chain_links(const ChainCase& c, ChainReading reading)
{
    std::vector<RSeries> out;
    for (const auto& i : integrands(c, reading))
        out.push_back(integrate(i));
    return out;
}

void verify_chain(Verifier& v, const ChainCase& c, ChainReading reading)
{
    std::string id = chain_label(c);
    v.guarded(id, [&] {
        auto links = chain_links(c, reading);
        for (size_t i = 0; i + 1 < links.size(); ++i)
            v.series(id + ".arrow" + std::to_string(i + 1), transform_QTQ(links[i]), links[i + 1], c.order);
    });
}

std::vector<ChainCase> chain_grid(int order)
{
    std::vector<ChainCase> g;
    std::vector<Rat> ps{Rat(-1), Rat(1, 2), Rat(1), Rat(2), Rat(3)};
    std::vector<Rat> alphas{Rat(1, 2), Rat(2)};
    for (int id : {1, 2})
        for (int n = 1; n <= 4; ++n)
            g.push_back({id, n, {}, {}, order});
    for (int id : {3, 4, 5, 7})
        for (const auto& p : ps)
            g.push_back({id, {}, p, {}, order});
    for (int id : {6, 8})
        for (const auto& p : ps)
            for (const auto& a : alphas)
                g.push_back({id, {}, p, a, order});
    return g;
}

} // namespace fpsl
