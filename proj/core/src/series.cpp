#include "fpsl/series.hpp"

#include <random>

namespace fpsl {

RSeries exp_linear(const Rat& c, int ord)
{
    std::vector<Rat> v(ord + 1);
    Rat term = 1;
    for (int k = 0; k <= ord; ++k) {
        v[k] = term;
        term = term * c / Rat(k + 1);
    }
    return RSeries(0, ord, std::move(v));
}

RSeries delta_p(const Rat& p, int ord)
{
    if (sgn(p) == 0)
        return RSeries::x(ord);
    // (e^{px}-1)/p = sum p^{k-1} x^k / k!
    std::vector<Rat> v(ord + 1);
    Rat term = 1;
    for (int k = 1; k <= ord; ++k) {
        term = term / Rat(k);
        v[k] = term * pow_int(p, k - 1);
    }
    return RSeries(0, ord, std::move(v));
}

RSeries log1p_series(const Rat& c, int ord)
{
    std::vector<Rat> v(ord + 1);
    for (int k = 1; k <= ord; ++k)
        v[k] = pow_int(c, k) / Rat(k) * (k % 2 ? 1 : -1);
    return RSeries(0, ord, std::move(v));
}

RSeries binomial_series(const Rat& c, const Rat& e, int ord)
{
    // (1 + c x)^e = sum binom(e, k) c^k x^k
    std::vector<Rat> v(ord + 1);
    Rat b = 1;
    for (int k = 0; k <= ord; ++k) {
        v[k] = b * pow_int(c, k);
        b = b * (e - Rat(k)) / Rat(k + 1);
    }
    return RSeries(0, ord, std::move(v));
}

RSeries polynomial_series(const std::vector<Rat>& c, int ord)
{
    return RSeries::from_coeffs(c, ord);
}

RSeries random_normalized(unsigned seed, int ord)
{
    std::mt19937 gen(seed);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    std::vector<Rat> v(ord + 1);
    if (ord >= 1)
        v[1] = 1;
    for (int k = 2; k <= ord; ++k) {
        long a = num(gen);
        long b = den(gen);
        v[k] = rat(a, b);
    }
    return RSeries(0, ord, std::move(v));
}

} // namespace fpsl
