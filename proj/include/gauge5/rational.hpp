#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gauge5/decomp.hpp"
#include "gauge5/group_model.hpp"

namespace gauge5::rational {

/// Betti numbers b_0 = 1, b_1, ..., b_N of a connected space of finite type.
class HilbertSeries {
public:
    HilbertSeries() : b_{1} {}
    explicit HilbertSeries(std::vector<int> betti);

    /// (1, 0, m-1, m-1, 0, 1): the 5-manifolds with pi_1 = Z/c, read rationally.
    static HilbertSeries manifold(int m);
    /// "1,0,0,0,1" (an optional "b=" prefix is accepted).
    static HilbertSeries parse(std::string_view text);

    int operator[](int i) const { return i >= 0 && i < static_cast<int>(b_.size()) ? b_[i] : 0; }
    int top_degree() const { return static_cast<int>(b_.size()) - 1; }
    const std::vector<int>& betti() const noexcept { return b_; }
    /// Throws HypothesisError when b_1 != 0.
    void require_simply_connected() const;
    std::string serialize() const;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

private:
    std::vector<int> b_;  // trailing zeros trimmed
};

/// G(X) ≃_Q ∏_i ∏_{b_i} Ω^i G (from i = 1 when based).
decomp::SpaceExpr rational_gauge(const HilbertSeries& X, const RationalGroupModel& G, bool based = false);
/// B*(P) ≃_Q ∏_{i>=1} ∏_{b_i} Ω^(i-1) G; G must have finite dimensional rational homology.
decomp::SpaceExpr rational_B_star(const HilbertSeries& M, const RationalGroupModel& G);

/// Spheres and rational Eilenberg-MacLane factors. Every generator of degree d
/// and every b_i contribute K(Q, d - i), written S^(d-i) for odd d - i.
/// Factors of degree <= 1 are dropped (points, and S^1 = K(Q,1) which is
/// discarded under the simply connected convention).
decomp::SpaceExpr em_expansion(const HilbertSeries& X, const RationalGroupModel& G, bool based = false);

/// Σ_r b_r rank pi_(r+q)(G) ⊗ Q (r >= 1 when based).
int rational_rank_formula(const HilbertSeries& X, const RationalGroupModel& G, int q, bool based = false);

struct Generator {
    enum class Kind { Exterior, Polynomial };
    int degree = 1;
    Kind kind = Kind::Exterior;
    friend bool operator==(const Generator&, const Generator&) = default;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};
using GeneratorLedger = std::vector<Generator>;  // sorted

enum class RingTarget { Gauge, BStar };

/// Generators of H*(G(X); Q) or H*(B*(P); Q); non-positive degrees dropped.
GeneratorLedger rational_cohomology_ring(RingTarget target, const HilbertSeries& X, const RationalGroupModel& G);
/// "Λ(x₃) ⊗ Q[y₄]", "Q" for the empty ledger.
std::string to_string(const GeneratorLedger& ledger);
/// Line-delimited JSON, one record per generator.
std::string serialize(const GeneratorLedger& ledger);
GeneratorLedger parse_ledger(std::string_view text);

}  // namespace gauge5::rational
