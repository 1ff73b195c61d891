#pragma once

#include "fpsl/alpha.hpp"
#include "fpsl/report.hpp"

namespace fpsl {

struct BinomialFamily {
    RSeries f;
    std::vector<AlphaPoly> p; // p_0..p_{n_max}
};

// sum_n p_n(alpha) x^n / n! = exp(alpha h(x)); p_n for n <= n_max.
std::vector<AlphaPoly> exp_family(const RSeries& h, int n_max);

// p_n = n! [x^n] exp(alpha Q(f))
BinomialFamily family_from_f(const RSeries& f, int n_max);

struct CanonicalContinuation {
    RSeries f;
    std::vector<SPoly> q; // (x/f)^s = sum q_n(s) x^n / n!
    AlphaExpr ps;         // sum binom(s-1, n) q_n(s) alpha^{s-n}
};

CanonicalContinuation continuation_from_f(const RSeries& f, int depth);
// d/ds p_s; its ln-part is p_s itself (InternalCheck otherwise).
AlphaExpr ps_dot(const CanonicalContinuation& c);
// Expression at s -> c0 + c1 s.
AlphaExpr continuation_at(const AlphaExpr& ps, long c0, long c1 = 0);
// p_m recovered from the continuation at s = m (m >= 0); needs depth > m.
AlphaPoly continuation_polynomial(const CanonicalContinuation& c, int m);

RSeries delta_exp(const Rat& p, const Rat& A, int order);        // Delta_p e^{-Ax}
RSeries delta_family(const Rat& p, const Rat& A, int order);     // Delta_p (1 + A Delta_{-p})

void verify_family(Verifier& v, const RSeries& f, int n_max, const std::string& id);
void verify_continuation(Verifier& v, const RSeries& f, int depth, const std::string& id);
void verify_pdot_endpoints(Verifier& v, const RSeries& f, int depth, const std::string& id);
void verify_pdot_operator_images(Verifier& v, const RSeries& f, int depth, const std::string& id);
void verify_delta_exp_continuation(Verifier& v, const Rat& p, const Rat& A, int depth);
void verify_delta_family_reflection(Verifier& v, const Rat& p, const Rat& A, int depth);
void verify_x_minus_x2_reflection(Verifier& v, int depth);
// Reflection p_s^f p_{1-s}^g = p_s^g p_{1-s}^f; returns whether it held.
bool reflection_holds(const RSeries& f, const RSeries& g, int depth);
void verify_reflection_family(Verifier& v, const Rat& p, const Rat& A, const Rat& B, int depth);
void verify_reflection_control(Verifier& v, int depth);
void verify_shift_structure(Verifier& v, int n_max, int degree, int depth);
void verify_nu_property(Verifier& v, int n_max);

} // namespace fpsl
