#include "fpsl/suites.hpp"

#include "fpsl/chains.hpp"
#include "fpsl/eigen.hpp"
#include "fpsl/opcalc.hpp"
#include "fpsl/transforms.hpp"

#include <future>

namespace fpsl {

namespace {

using Task = std::pair<std::string, std::function<void(Verifier&)>>;

std::vector<Task> eigen_cases(int N)
{
    std::vector<Task> t;
    t.push_back({"phi.closed-forms", [N](Verifier& v) { verify_phi_closed_forms(v, std::max(N, 24)); }});
    for (Rat m : {Rat(0), Rat(1), Rat(-1), Rat(1, 4), Rat(9)})
        t.push_back({"theta", [N, m](Verifier& v) { verify_theta_doubling(v, m, std::max(N, 25)); }});
    for (int n = 1; n <= 5; ++n)
        for (Rat A : {Rat(1), Rat(1, 2)})
            t.push_back({"fn.displays", [n, A](Verifier& v) { verify_fn_displays(v, n, A); }});
    t.push_back({"fn.inverse-forms", [N](Verifier& v) { verify_fn_inverse_forms(v, std::max(N, 21)); }});
    for (int n = 1; n <= 4; ++n)
        t.push_back({"fn.exp-phi", [n](Verifier& v) {
            verify_fn_exp_phi_integral(v, n, Rat(1));
            verify_fn_exp_phi_integral(v, n, Rat(2, 3));
        }});
    t.push_back({"endpoints", [N](Verifier& v) { verify_endpoints(v, std::max(N, 20)); }});
    for (Rat p : {Rat(1), Rat(2), Rat(3), Rat(4), Rat(1, 2), Rat(-1, 3)})
        t.push_back({"phi.eigen", [N, p](Verifier& v) { verify_eigen_property(v, p, N); }});
    t.push_back({"log-solution", [N](Verifier& v) {
        Rat A(1, 3), M(1, 3);
        auto f = delta_p(2 * A, N + 1);
        auto q = series_log(shift(f, -1)) * (1 / M);
        verify_exp_log_solution(v, q, M, 1, N, "log-solution.delta");
        verify_exp_log_solution(v, RSeries::x(N), 0, 1, N, "log-solution.trivial");
        bool rejected = false;
        try {
            verify_exp_log_solution(v, RSeries::x(N), 1, 1, N, "log-solution.violated");
        } catch (const Error& e) {
            rejected = e.kind() == ErrorKind::PremiseViolated;
        }
        v.expect("log-solution.premise-rejected", rejected, "premise violation not detected");
    }});
    for (int nu = 1; nu <= 4; ++nu)
        t.push_back({"phi.reflection", [N, nu](Verifier& v) { verify_phi_reflection(v, Rat(nu), std::max(N, 12), std::max(N, 16)); }});
    t.push_back({"conjugate", [N](Verifier& v) {
        verify_conjugation(v, polynomial_series({0, 1, 1}, N), 2);
        verify_conjugation(v, random_normalized(7, N / 2), 3);
    }});
    t.push_back({"qtq-integrals", [N](Verifier& v) {
        for (unsigned seed = 21; seed <= 23; ++seed) {
            auto f = random_normalized(seed, N + 1);
            std::string id = "qtq-integrals.random" + std::to_string(seed);
            // int f^inv(t)/t and int t/Tf(t)
            auto lhs = integrate(shift(invert(f), -1));
            auto rhs = integrate(series_div(RSeries::x(N + 1), transform_T(f)));
            v.series(id, transform_QTQ(lhs), rhs, N);
        }
        v.series("qtq-integrals.arcsin-arctan",
            transform_QTQ(integrate(series_pow(polynomial_series({1, 0, -1}, N), Rat(-1, 2)))),
            integrate(reciprocal(polynomial_series({1, 0, 1}, N))), N);
    }});
    t.push_back({"qtq-exp-phi", [N](Verifier& v) {
        // QTQ(int e^{alpha phi}) has coefficients p_n(-n alpha)/n! at t^n in the integrand
        for (Rat a : {Rat(1, 2), Rat(-2)}) {
            auto phi = solve_phi(2, N);
            auto fam = exp_family(phi, N);
            std::vector<Rat> c(N + 1);
            for (int n = 0; n <= N; ++n)
                c[n] = fam[n].eval(-n * a) / Rat(factorial(n));
            auto lhs = transform_QTQ(integrate(series_exp(truncate(phi, N - 1) * a)));
            v.series("qtq-exp-phi.alpha" + to_string(a), lhs, integrate(RSeries::from_coeffs(c, N - 1)), N);
        }
    }});
    t.push_back({"lagrange", [N](Verifier& v) {
        auto f = random_normalized(31, N);
        auto q = invert(f);
        std::vector<Rat> c(N + 1);
        auto ratio = series_div(RSeries::x(N), f);
        for (int n = 1; n <= N; ++n)
            c[n] = series_ipow(truncate(ratio, n - 1), n).coeff(n - 1) / Rat(n);
        v.series("lagrange.random31", q, RSeries::from_coeffs(c, N), N);
    }});
    return t;
}

std::vector<Task> continuation_cases(int N)
{
    std::vector<Task> t;
    for (unsigned seed = 1; seed <= 5; ++seed)
        t.push_back({"cont.random", [N, seed](Verifier& v) {
            auto f = random_normalized(seed, N + 1);
            std::string id = "cont.random" + std::to_string(seed);
            verify_pdot_endpoints(v, f, N, id);
            verify_pdot_operator_images(v, f, N, id);
            verify_continuation(v, f, N, id);
            verify_family(v, f, std::min(N, 8), id);
        }});
    std::vector<std::pair<Rat, Rat>> grid{{1, 0}, {2, 1}, {Rat(1, 2), Rat(-1, 3)}};
    for (auto [p, A] : grid) {
        t.push_back({"cont.exp", [N, p, A](Verifier& v) { verify_delta_exp_continuation(v, p, A, std::max(10, N - 2)); }});
        t.push_back({"cont.refl", [N, p, A](Verifier& v) { verify_delta_family_reflection(v, p, A, std::max(10, N - 2)); }});
    }
    t.push_back({"cont.x-minus-x2", [N](Verifier& v) { verify_x_minus_x2_reflection(v, N); }});
    std::vector<std::tuple<Rat, Rat, Rat>> thm{{1, 1, -1}, {2, Rat(1, 3), Rat(-1, 2)}, {Rat(1, 2), 0, 2}, {1, 1, 1}};
    for (auto [p, A, B] : thm)
        t.push_back({"reflection-family", [N, p, A, B](Verifier& v) { verify_reflection_family(v, p, A, B, N); }});
    t.push_back({"reflection-family.control", [N](Verifier& v) { verify_reflection_control(v, N); }});
    t.push_back({"shift", [N](Verifier& v) { verify_shift_structure(v, 6, 8, N); }});
    t.push_back({"nu", [N](Verifier& v) { verify_nu_property(v, N); }});
    t.push_back({"families", [](Verifier& v) {
        auto fx = family_from_f(RSeries::x(6), 6);
        auto fe = family_from_f(exp_linear(1, 6) - RSeries::one(6), 6);
        for (int n = 0; n <= 6; ++n) {
            v.poly("family.x.n" + std::to_string(n), fx.p[n], AlphaPoly::monomial(n));
            v.poly("family.expm1.n" + std::to_string(n), fe.p[n], falling_factorial<AlphaVar>(n));
        }
    }});
    return t;
}

std::vector<Task> operator_cases(int N)
{
    std::vector<Task> t;
    int ord = 24;
    std::vector<std::pair<std::string, RSeries>> fs{
        {"expm1", exp_linear(1, ord) - RSeries::one(ord)},
        {"x-plus-x2", polynomial_series({0, 1, 1}, ord)},
        {"x-exp", shift(exp_linear(-1, ord - 1), 1)},
    };
    for (const auto& [name, f] : fs) {
        std::string id = "ops." + name;
        t.push_back({id, [id, f](Verifier& v) {
            verify_operator_basics(v, f, 5, 8, id);
            verify_monic_seed_family(v, f, 5, id);
            verify_transform_shift_forms(v, f, 5, id);
        }});
    }
    t.push_back({"stirling", [](Verifier& v) {
        v.value("stirling.3.2", stirling_first(3, 2), -3);
        v.value("stirling.4.1", stirling_first(4, 1), -6);
        for (int n = 0; n <= 12; ++n) {
            auto ff = falling_factorial<AlphaVar>(n);
            std::vector<Rat> row;
            for (int k = 0; k <= n; ++k)
                row.push_back(stirling_first(n, k));
            v.poly("stirling.row" + std::to_string(n), AlphaPoly(row), ff);
        }
    }});
    t.push_back({"composition", [N](Verifier& v) { verify_composition_sums(v, std::max(N, 12), std::max(N + 2, 14), 9); }});
    t.push_back({"qtinv", [N](Verifier& v) { verify_combinatorial_QTinv(v, N); }});
    return t;
}

std::vector<Task> chain_cases(int N)
{
    std::vector<Task> t;
    for (auto c : chain_grid(N))
        t.push_back({chain_label(c), [c](Verifier& v) { verify_chain(v, c); }});
    return t;
}

std::vector<Task> exp_family_cases(int N)
{
    std::vector<Task> t;
    std::vector<std::pair<Rat, Rat>> grid{{1, Rat(1, 2)}, {2, Rat(-1, 3)}};
    for (auto [p, A] : grid) {
        t.push_back({"expfam", [p, A](Verifier& v) { verify_exp_family_operators(v, p, A, 4, 10); }});
        t.push_back({"expfam.inverse-shift", [N, p, A](Verifier& v) { verify_inverse_shift_forms(v, p, A, 4, std::max(N, 12) + 2); }});
    }
    t.push_back({"expfam.p0", [](Verifier& v) { verify_exp_family_operators_small_p(v, Rat(1, 2), 4, 10); }});
    return t;
}

std::vector<Task> tasks_for(const std::string& name, int N)
{
    if (name == "section1")
        return eigen_cases(N);
    if (name == "section2")
        return continuation_cases(N);
    if (name == "section3")
        return operator_cases(N);
    if (name == "appendix-a")
        return chain_cases(N);
    if (name == "appendix-b")
        return exp_family_cases(N);
    std::string valid;
    for (const auto& s : suite_names())
        valid += s + ", ";
    throw Error(ErrorKind::Config, "unknown suite '" + name + "'; valid: " + valid + "all");
}

std::vector<Check> run_task(const Task& task, const std::optional<Fault>& fault)
{
    Verifier v(fault);
    v.guarded(task.first, [&] { task.second(v); });
    return v.take();
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"section1", "section2", "section3", "appendix-a", "appendix-b"};
    return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options)
{
    if (options.order < 4)
        throw Error(ErrorKind::Config, "verification order must be at least 4");
    auto tasks = tasks_for(name, options.order);
    Report r;
    r.suite = name;
    std::vector<std::vector<Check>> parts(tasks.size());
    if (options.parallel) {
        std::vector<std::future<std::vector<Check>>> futures;
        for (const auto& task : tasks)
            futures.push_back(std::async(std::launch::async, run_task, std::cref(task), std::cref(options.fault)));
        for (size_t i = 0; i < tasks.size(); ++i)
            parts[i] = futures[i].get();
    } else {
        for (size_t i = 0; i < tasks.size(); ++i)
            parts[i] = run_task(tasks[i], options.fault);
    }
    for (auto& p : parts)
        for (auto& c : p)
            r.checks.push_back(std::move(c));
    return r;
}

std::vector<Report> run_suites(const std::string& name, const SuiteOptions& options)
{
    std::vector<Report> out;
    if (name == "all") {
        for (const auto& s : suite_names())
            out.push_back(run_suite(s, options));
    } else {
        out.push_back(run_suite(name, options));
    }
    return out;
}

} // namespace fpsl
