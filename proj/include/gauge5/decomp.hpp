#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gauge5/arith.hpp"
#include "gauge5/group_model.hpp"
#include "gauge5/lie.hpp"
#include "gauge5/localization.hpp"
#include "gauge5/spaces.hpp"

namespace gauge5::decomp {

/// Factor of a product decomposition. `j` is the number of loops, except for
/// MooreMap (j = n in Ω^n(G;c)), Sphere and EM (j = degree).
struct SpaceAtom {
    enum class Kind {
        GroupItself,  // G
        MooreGauge,   // Ω^j G_k(P^4(c))
        LoopsMapCP2,  // Ω^j Map*_0(CP^2, G)
        LoopsGFiber,  // Ω^j G{c}
        MooreMap,     // Ω^j(G; c) = Map*(P^(j+1)(c), G)
        LoopsG,       // Ω^j G
        Sphere,       // S^j
        EM,           // K(Q, j)
    };
    Kind kind = Kind::LoopsG;
    int j = 0;
    arith::Int k = 0;  // MooreGauge only

    static SpaceAtom group();
    static SpaceAtom moore_gauge(int j, arith::Int k);
    static SpaceAtom loops_map_cp2(int j);
    static SpaceAtom loops_fiber(int j);
    static SpaceAtom moore_map(int n);
    /// Ω^0 G is returned as GroupItself.
    static SpaceAtom loops(int j);
    static SpaceAtom sphere(int n);
    static SpaceAtom em(int n);

    friend bool operator==(const SpaceAtom&, const SpaceAtom&) = default;
    friend auto operator<=>(const SpaceAtom&, const SpaceAtom&) = default;
};

std::string to_string(SpaceAtom::Kind kind);
SpaceAtom::Kind parse_kind(std::string_view text);

struct Term {
    SpaceAtom atom;
    int mult = 1;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Formal product of factors over one group G and one c, read in a
/// localization. Terms keep their presentation order; equality compares the
/// multiset of factors.
class SpaceExpr {
public:
    SpaceExpr() = default;
    SpaceExpr(std::string group_label, rational::RationalGroupModel model, arith::Int c, Localization ctx);

    const std::string& group_label() const noexcept { return group_label_; }
    const rational::RationalGroupModel& model() const noexcept { return model_; }
    arith::Int c() const noexcept { return c_; }
    const Localization& ctx() const noexcept { return ctx_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Adds copies of an atom, merging with an equal atom already present.
    /// MooreGauge labels are reduced mod c.
    void add(SpaceAtom atom, int mult = 1);
    void set_ctx(Localization ctx) { ctx_ = std::move(ctx); }
    void clear_terms() { terms_.clear(); }
    int total_factors() const;

    /// "Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁷G", "*" for the empty product.
    std::string to_string() const;
    /// Line-delimited JSON: one header record, then one record per term.
    std::string serialize() const;
    static SpaceExpr parse(std::string_view text);

    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

private:
    std::string group_label_;
    rational::RationalGroupModel model_;
    arith::Int c_ = 0;
    Localization ctx_;
    std::vector<Term> terms_;
};

enum class Rule {
    MooreMapToFiber,   // Ω^j(G;c) -> Ω^(j-1) G{c}
    InvertC,           // drop G{c} and Moore factors once every prime of c is inverted
    SplitCP2,          // Ω^j Map*_0(CP^2,G) -> Ω^(j+2)G × Ω^(j+4)G once 2 is inverted
};

/// One rewrite pass; returns the input unchanged where the rule does not apply.
SpaceExpr apply_rule(const SpaceExpr& e, Rule rule);
/// All rules, then factors sorted by kind (stable within a kind).
SpaceExpr normalize(const SpaceExpr& e);

/// Ω²G_k(M), 6∤c.
SpaceExpr loops2_gauge(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, arith::Int k,
                       const Localization& ctx = Localization::integral());
/// Ω³G_k(M), 2∤c, M stably parallelizable with a single top cell.
SpaceExpr loops3_gauge(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, arith::Int k,
                       const Localization& ctx = Localization::integral());
/// G_k(M) away from c (and from the primes of `extra_inverted`).
SpaceExpr gauge_away_from_c(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, arith::Int k,
                            const std::vector<arith::Int>& extra_inverted = {});

/// rank of pi_q(e) ⊗ Q.
int rational_rank(const SpaceExpr& e, int q);

}  // namespace gauge5::decomp
