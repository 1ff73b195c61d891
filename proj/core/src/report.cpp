#include "fpsl/report.hpp"

#include <algorithm>

namespace fpsl {

bool Report::passed() const
{
    return failures() == 0;
}

int Report::failures() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

const Check* Report::find(const std::string& id) const
{
    for (const auto& c : checks)
        if (c.id == id)
            return &c;
    return nullptr;
}

void Verifier::pass(const std::string& id)
{
    checks_.push_back({id, true, {}, {}});
}

void Verifier::fail(const std::string& id, std::string location, std::string detail)
{
    checks_.push_back({id, false, std::move(location), std::move(detail)});
}

namespace {

std::string show(const Rat& r)
{
    return to_string(r);
}

std::string show(const SPoly& p)
{
    std::string s = "[";
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        s += (i ? "," : "") + to_string(p.coeffs()[i]);
    return s + "]";
}

template <CoeffRing R>
void compare_series(const Series<R>& lhs, const Series<R>& rhs, int upto,
    const std::function<void(std::string, std::string)>& fail, const std::function<void()>& pass)
{
    int known = std::min(lhs.order(), rhs.order());
    if (upto != INT_MAX && known < upto) {
        fail("", "operands known only to x^" + std::to_string(known) + ", need x^" + std::to_string(upto));
        return;
    }
    if (auto k = first_mismatch(lhs, rhs, std::min(upto, known))) {
        fail("x^" + std::to_string(*k), "lhs " + show(lhs.coeff(*k)) + " != rhs " + show(rhs.coeff(*k)));
        return;
    }
    pass();
}

} // namespace

void Verifier::series(const std::string& id, RSeries lhs, const RSeries& rhs, int upto)
{
    if (faulted(id))
        lhs = lhs.with_coeff(fault_->index, lhs.coeff(fault_->index) + 1);
    compare_series<Rat>(lhs, rhs, upto,
        [&](std::string loc, std::string det) { fail(id, std::move(loc), std::move(det)); }, [&] { pass(id); });
}

void Verifier::series(const std::string& id, SSeries lhs, const SSeries& rhs, int upto)
{
    if (faulted(id))
        lhs = lhs.with_coeff(fault_->index, lhs.coeff(fault_->index) + SPoly(Rat(1)));
    compare_series<SPoly>(lhs, rhs, upto,
        [&](std::string loc, std::string det) { fail(id, std::move(loc), std::move(det)); }, [&] { pass(id); });
}

void Verifier::poly(const std::string& id, AlphaPoly lhs, const AlphaPoly& rhs)
{
    if (faulted(id))
        lhs += AlphaPoly::monomial(fault_->index);
    int deg = std::max(lhs.degree(), rhs.degree());
    for (int k = 0; k <= deg; ++k)
        if (lhs.coeff(k) != rhs.coeff(k)) {
            fail(id, "alpha^" + std::to_string(k), "lhs " + show(lhs.coeff(k)) + " != rhs " + show(rhs.coeff(k)));
            return;
        }
    pass(id);
}

void Verifier::alpha(const std::string& id, AlphaExpr lhs, const AlphaExpr& rhs, int min_depth)
{
    if (faulted(id))
        lhs = lhs.with_plain(fault_->index, lhs.plain_at(fault_->index) + SPoly(Rat(1)));
    if (lhs.b() != rhs.b()) {
        fail(id, "exponent", "s-coefficients of the exponents differ");
        return;
    }
    int low = std::max(lhs.top() - lhs.depth() + 1, rhs.top() - rhs.depth() + 1);
    int common = std::max(lhs.top(), rhs.top()) - low + 1;
    if (common < min_depth) {
        fail(id, "", "operands share only " + std::to_string(common) + " known terms, need " +
                std::to_string(min_depth));
        return;
    }
    if (auto m = compare(lhs, rhs)) {
        fail(id, "tail " + std::to_string(m->offset) + (m->log_power ? " ln" : "") + " s^" +
                std::to_string(m->s_degree), m->describe());
        return;
    }
    pass(id);
}

void Verifier::value(const std::string& id, Rat lhs, const Rat& rhs)
{
    if (faulted(id))
        lhs += 1;
    if (lhs != rhs)
        fail(id, "value", "lhs " + show(lhs) + " != rhs " + show(rhs));
    else
        pass(id);
}

void Verifier::expect(const std::string& id, bool ok, const std::string& detail)
{
    if (ok)
        pass(id);
    else
        fail(id, "", detail);
}

void Verifier::basis(const std::string& id, const std::function<AlphaPoly(const AlphaPoly&)>& lhs,
    const std::function<AlphaPoly(const AlphaPoly&)>& rhs, int degree)
{
    for (int m = 0; m <= degree; ++m) {
        AlphaPoly q = AlphaPoly::monomial(m);
        AlphaPoly l = lhs(q);
        AlphaPoly r = rhs(q);
        if (m == 0 && faulted(id))
            l += AlphaPoly::monomial(fault_->index);
        int deg = std::max(l.degree(), r.degree());
        for (int k = 0; k <= deg; ++k)
            if (l.coeff(k) != r.coeff(k)) {
                fail(id, "basis alpha^" + std::to_string(m) + ", alpha^" + std::to_string(k),
                    "lhs " + show(l.coeff(k)) + " != rhs " + show(r.coeff(k)));
                return;
            }
    }
    pass(id);
}

void Verifier::guarded(const std::string& id, const std::function<void()>& body)
{
    try {
        body();
    } catch (const Error& e) {
        fail(id, "", std::string(to_string(e.kind())) + ": " + e.what());
    }
}

} // namespace fpsl
