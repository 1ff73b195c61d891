#pragma once

#include "fpsl/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpsl {

// sum_{n<depth} (plain[n] + log[n] ln a) a^{top - n + b s}
// Both parts share one exponent family; coefficients are polynomials in s.
class AlphaExpr {
public:
    AlphaExpr() = default;
    AlphaExpr(int top, int b, int depth, std::vector<SPoly> plain, std::vector<SPoly> log = {});

    static AlphaExpr power(int top, int b, int depth, const SPoly& c = SPoly(Rat(1)));
    static AlphaExpr ln_alpha(int depth);
    // Polynomial in alpha viewed as an expansion in alpha^{-1}.
    static AlphaExpr from_poly(const AlphaPoly& p, int depth);

    int top() const { return top_; }
    int b() const { return b_; }
    int depth() const { return depth_; }
    const std::vector<SPoly>& plain() const { return plain_; }
    const std::vector<SPoly>& log() const { return log_; }
    bool has_log() const;
    SPoly plain_at(int n) const { return n < static_cast<int>(plain_.size()) ? plain_[n] : SPoly(); }
    SPoly log_at(int n) const { return n < static_cast<int>(log_.size()) ? log_[n] : SPoly(); }

    // Tail as a series in u = 1/alpha.
    SSeries plain_series() const;
    SSeries log_series() const;
    static AlphaExpr from_series(int top, int b, const SSeries& plain, const SSeries& log, int depth);

    AlphaExpr with_plain(int n, const SPoly& c) const;
    AlphaExpr mul_alpha_power(int k) const; // times alpha^k
    AlphaExpr realign(int new_top) const;   // same value, larger top, zero padding

private:
    int top_ = 0;
    int b_ = 0;
    int depth_ = 0;
    std::vector<SPoly> plain_;
    std::vector<SPoly> log_;
};

AlphaExpr operator+(const AlphaExpr& a, const AlphaExpr& b);
AlphaExpr operator-(const AlphaExpr& a);
AlphaExpr operator-(const AlphaExpr& a, const AlphaExpr& b);
AlphaExpr operator*(const AlphaExpr& a, const SPoly& c);
AlphaExpr alpha_mul(const AlphaExpr& a, const AlphaExpr& b);
AlphaExpr alpha_div(const AlphaExpr& a, const AlphaExpr& b);
AlphaExpr alpha_log(const AlphaExpr& a);
AlphaExpr apply_D(const AlphaExpr& a);
AlphaExpr apply_opseries(const SSeries& g, const AlphaExpr& a);
AlphaExpr apply_opseries(const RSeries& g, const AlphaExpr& a);
AlphaExpr ln_g(const RSeries& g, int depth);
AlphaExpr d_ds(const AlphaExpr& a);
// s -> c0 + c1 s with integer c0, c1 so exponents stay in the a + b s family.
AlphaExpr substitute_affine(const AlphaExpr& a, long c0, long c1);
AlphaExpr truncate_depth(const AlphaExpr& a, int depth);

// g(D) on an exact polynomial; D is nilpotent so only g_0..g_deg are needed.
AlphaPoly apply_opseries(const RSeries& g, const AlphaPoly& q);

struct AlphaMismatch {
    int offset;     // tail index relative to the common top
    int log_power;  // 0 plain, 1 ln alpha
    int s_degree;
    std::string describe() const;
};

// Compares on the common known range; exponent families must match.
std::optional<AlphaMismatch> compare(const AlphaExpr& a, const AlphaExpr& b);

} // namespace fpsl
