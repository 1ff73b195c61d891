#pragma once

#include "fpsl/report.hpp"

#include <optional>

namespace fpsl {

// gamma_p = Q(Delta_p e^{-x})
RSeries gamma_p(const Rat& p, int order);

struct ChainCase {
    int id = 1; // 1..8
    std::optional<int> n;
    std::optional<Rat> p;
    std::optional<Rat> alpha;
    int order = 12;
};

// Corrected: chain 1's last integrand carries the t^n factor and chain 8's image
// integrand uses gamma' in its first factor. Uncorrected omits both fixes; those arrows then fail.
enum class ChainReading { Corrected, Uncorrected };

std::string chain_label(const ChainCase& c);
// Integrals along the chain; QTQ maps each entry to the next.
std::vector<RSeries> chain_links(const ChainCase& c, ChainReading reading = ChainReading::Corrected);
void verify_chain(Verifier& v, const ChainCase& c, ChainReading reading = ChainReading::Corrected);

// n in {1,2,3,4}, p in {-1, 1/2, 1, 2, 3}, alpha in {1/2, 2}.
std::vector<ChainCase> chain_grid(int order);

} // namespace fpsl
