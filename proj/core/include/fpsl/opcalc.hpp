#pragma once

#include "fpsl/binomial.hpp"
#include "fpsl/report.hpp"

#include <functional>
#include <memory>

namespace fpsl {

// Finite expression over multiplication by alpha and g(D), acting on exact polynomials.
class PolyOperator {
public:
    static PolyOperator identity();
    static PolyOperator mul_alpha();
    static PolyOperator of_D(RSeries g);
    static PolyOperator scalar(const Rat& c);
    static PolyOperator multiply(const AlphaPoly& p);

    AlphaPoly apply(const AlphaPoly& q) const;

    // (a * b)(q) = a(b(q))
    friend PolyOperator operator*(const PolyOperator& a, const PolyOperator& b);
    friend PolyOperator operator+(const PolyOperator& a, const PolyOperator& b);
    friend PolyOperator operator-(const PolyOperator& a, const PolyOperator& b);
    PolyOperator power(unsigned n) const;

private:
    struct Node;
    explicit PolyOperator(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// A_f = alpha / f'(D) and D_f = f(D). f must be known at least to the degree acted on.
PolyOperator shift_operator(const RSeries& f);
PolyOperator derivation_operator(const RSeries& f);
AlphaPoly apply_Af(const RSeries& f, const AlphaPoly& q);
AlphaPoly apply_Df(const RSeries& f, const AlphaPoly& q);

// (1/n!) (alpha f(D))_n q for monic q of degree n, which is p_n of T^-1 f.
AlphaPoly family_from_monic_seed(const RSeries& f, const AlphaPoly& q, int n);

// Signed Stirling numbers of the first kind, [x^k] (x)_n; rows are cached.
Rat stirling_first(int n, int k);
const std::vector<Int>& stirling_row(int n);

enum class NuVariant { MultinomialSum, ReciprocalSum };
enum class AnVariant { MultinomialSum, ReciprocalSum };

// nu_n(alpha) from the Stirling/composition sums (dynamic programming over partial sums).
AlphaPoly nu_by_composition_sum(int n, NuVariant variant);
Rat psi_coeff_by_composition_sum(int n, AnVariant variant);
// Same sums by literal lexicographic enumeration of compositions (small n only).
AlphaPoly nu_by_enumeration(int n, NuVariant variant);

// Visits every tuple (m_1..m_parts), m_i >= 0, sum = total, in lexicographic order.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit);

// x^n coefficient (1/n!) sum_k s(n,k) sum c_{1+m_1}..c_{1+m_k} (n-m_1)..(n-m_1-..-m_k).
RSeries combinatorial_QTinv(const RSeries& c, int order);

// Solves A_f^n x = target; DegreeMismatch when target is not in the image.
AlphaPoly solve_shift_power(const RSeries& f, int n, const AlphaPoly& target);

void verify_operator_basics(Verifier& v, const RSeries& f, int n_max, int degree, const std::string& id);
void verify_monic_seed_family(Verifier& v, const RSeries& f, int n_max, const std::string& id);
void verify_transform_shift_forms(Verifier& v, const RSeries& f, int n_max, const std::string& id);
void verify_composition_sums(Verifier& v, int n_nu, int n_an, int n_enumerated);
void verify_combinatorial_QTinv(Verifier& v, int order);
void verify_exp_family_operators(Verifier& v, const Rat& p, const Rat& A, int n_max, int degree);
void verify_exp_family_operators_small_p(Verifier& v, const Rat& A, int n_max, int degree);
void verify_inverse_shift_forms(Verifier& v, const Rat& p, const Rat& A, int n_max, int depth);

} // namespace fpsl
