#include "fpsl/binomial.hpp"
#include "fpsl/chains.hpp"
#include "fpsl/transforms.hpp"

#include <doctest.h>

#include <set>

using namespace fpsl;

namespace {

std::vector<Check> run(const ChainCase& c, ChainReading reading = ChainReading::Corrected)
{
    Verifier v;
    verify_chain(v, c, reading);
    return v.take();
}

ChainCase with_n(int id, int n)
{
    return ChainCase{id, n, std::nullopt, std::nullopt, 12};
}

ChainCase with_p(int id, Rat p, std::optional<Rat> alpha = std::nullopt)
{
    return ChainCase{id, std::nullopt, p, alpha, 12};
}

} // namespace

TEST_CASE("gamma_p")
{
    int N = 12;
    CHECK(!first_mismatch(gamma_p(1, N), -log1p_series(-1, N), N));
    CHECK(!first_mismatch(compose(shift(exp_linear(-1, N - 1), 1), gamma_p(0, N)), RSeries::x(N), N));
    for (Rat p : {Rat(-1), Rat(1, 2), Rat(3)})
        CHECK(!first_mismatch(compose(delta_exp(p, 1, N), gamma_p(p, N)), RSeries::x(N), N));
}

TEST_CASE("arcsin maps to arctan in the first chain")
{
    auto links = chain_links(with_n(1, 2));
    REQUIRE(links.size() >= 2);
    auto arcsin = integrate(series_pow(polynomial_series({1, 0, -1}, 11), Rat(-1, 2)));
    auto arctan = integrate(reciprocal(polynomial_series({1, 0, 1}, 11)));
    CHECK(!first_mismatch(links[0], arcsin, 12));
    CHECK(!first_mismatch(links[1], arctan, 12));
}

TEST_CASE("sample cases pass")
{
    for (const auto& c : run(with_p(3, 2)))
        CHECK_MESSAGE(c.pass, c.id);
    auto eight = run(with_p(8, 1, Rat(1, 2)));
    REQUIRE(!eight.empty());
    for (const auto& c : eight)
        CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("full grid covers all eight chains and passes")
{
    std::set<int> ids;
    int arrows = 0;
    for (const auto& c : chain_grid(12)) {
        ids.insert(c.id);
        for (const auto& ch : run(c)) {
            ++arrows;
            CHECK_MESSAGE(ch.pass, ch.id);
        }
    }
    CHECK(ids.size() == 8);
    CHECK(arrows == 65);
}

TEST_CASE("uncorrected chain 1 arrow 3 and chain 8 fail")
{
    for (int n = 1; n <= 4; ++n) {
        auto checks = run(with_n(1, n), ChainReading::Uncorrected);
        REQUIRE(checks.size() == 3);
        CHECK(checks[0].pass);
        CHECK(checks[1].pass);
        CHECK(!checks[2].pass);
    }
    for (Rat p : {Rat(1), Rat(2)})
        for (const auto& c : run(with_p(8, p, Rat(1, 2)), ChainReading::Uncorrected))
            CHECK_MESSAGE(!c.pass, c.id);
}

TEST_CASE("perturbing any input coefficient breaks the arrow")
{
    auto links = chain_links(with_p(3, 2));
    for (int k = 2; k <= 12; ++k) {
        auto bent = links[0].with_coeff(k, links[0].coeff(k) + 1);
        auto m = first_mismatch(transform_QTQ(bent), links[1], 12);
        REQUIRE(m);
        CHECK(*m == k);
    }
}
