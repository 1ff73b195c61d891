#pragma once

#include "fpsl/binomial.hpp"
#include "fpsl/report.hpp"
#include "fpsl/series.hpp"

namespace fpsl {

// Solution of T f = f(px)/p with p^n = -n, leading term x + A x^{n+1}.
struct EigenSolution {
    int n = 1;
    Rat A;
    RSeries f;
};

// Coefficients of x^{kn+1} from
// (k - (-n)^{k-1}) A_k = sum_{m=1}^{k-1} (nm+1)(-n)^{k-m-1} A_m A_{k-m}.
EigenSolution solve_fn(int n, const Rat& A, int order);

// x/f by its own recurrence on B_k (coefficient of x^{kn}), B_0 = 1, B_1 = -A.
RSeries fn_reciprocal_recurrence(const EigenSolution& sol);
// Recurrence result, cross-checked against series division (InternalCheck on mismatch).
RSeries fn_reciprocal(const EigenSolution& sol);

// phi_p with A_1 = 1; DegenerateParameter when (-p)^{n-1} = n for some 2 <= n <= order.
RSeries solve_phi(const Rat& p, int order);
RSeries phi_infinity(int order);
RSeries phi0_from_psi(int order);

RSeries psi_series(int order);  // Q(T^-1(x e^-x))
RSeries psi_ode(int order);     // from x psi' = psi e^{-psi}
RSeries lambert_w(int order);   // Q(x e^x)

// Odd series with Theta'' = 2m Theta^3 - (m+1) Theta, Theta = x + ...
RSeries theta_series(const Rat& m, int order);

// Verification drivers; each appends named checks.
void verify_fn_displays(Verifier& v, int n, const Rat& A);
void verify_fn_inverse_forms(Verifier& v, int order);
void verify_fn_exp_phi_integral(Verifier& v, int n, const Rat& A);
void verify_phi_closed_forms(Verifier& v, int order);
void verify_theta_doubling(Verifier& v, const Rat& m, int order, const std::string& id = {});
void verify_endpoints(Verifier& v, int order);
void verify_eigen_property(Verifier& v, const Rat& p, int order);
void verify_exp_log_solution(Verifier& v, const RSeries& q, const Rat& M, const Rat& p, int order, const std::string& id);
void verify_phi_reflection(Verifier& v, const Rat& p, int n_max, int order);
void verify_conjugation(Verifier& v, const RSeries& f, int n);

} // namespace fpsl
