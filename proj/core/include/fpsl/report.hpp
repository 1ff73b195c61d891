#pragma once

#include "fpsl/alpha.hpp"
#include "fpsl/series.hpp"

#include <climits>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fpsl {

struct Check {
    std::string id;
    bool pass = false;
    std::string location; // first mismatch, e.g. "x^7"; empty when not applicable
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    int failures() const;
    const Check* find(const std::string& id) const;
};

// Adds 1 to one left-hand coefficient of the named check before comparing.
struct Fault {
    std::string check_id;
    int index = 2;
};

class Verifier {
public:
    explicit Verifier(std::optional<Fault> fault = std::nullopt) : fault_(std::move(fault)) {}

    // Compares x^lo..x^upto; both operands must be known that far.
    void series(const std::string& id, RSeries lhs, const RSeries& rhs, int upto = INT_MAX);
    void series(const std::string& id, SSeries lhs, const SSeries& rhs, int upto = INT_MAX);
    void poly(const std::string& id, AlphaPoly lhs, const AlphaPoly& rhs);
    void alpha(const std::string& id, AlphaExpr lhs, const AlphaExpr& rhs, int min_depth = 1);
    void value(const std::string& id, Rat lhs, const Rat& rhs);
    void expect(const std::string& id, bool ok, const std::string& detail = {});
    // Extensional operator equality on alpha^0..alpha^degree; a fault perturbs the image of alpha^0.
    void basis(const std::string& id, const std::function<AlphaPoly(const AlphaPoly&)>& lhs,
        const std::function<AlphaPoly(const AlphaPoly&)>& rhs, int degree);

    // Runs body; an Error thrown inside becomes a failing check named id.
    void guarded(const std::string& id, const std::function<void()>& body);

    const std::vector<Check>& checks() const { return checks_; }
    std::vector<Check> take() { return std::move(checks_); }

private:
    bool faulted(const std::string& id) const { return fault_ && fault_->check_id == id; }
    void pass(const std::string& id);
    void fail(const std::string& id, std::string location, std::string detail);

    std::optional<Fault> fault_;
    std::vector<Check> checks_;
};

} // namespace fpsl
