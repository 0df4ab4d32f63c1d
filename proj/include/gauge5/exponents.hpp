#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gauge5/arith.hpp"
#include "gauge5/catalog.hpp"
#include "gauge5/lie.hpp"
#include "gauge5/spaces.hpp"

namespace gauge5::exponents {

enum class Route { Regular, Theriault, ClosedForm, MooreFiber };
std::string to_string(Route r);

/// exp_p <= p^exponent.
struct ExponentBound {
    arith::Int p = 3;
    int exponent = 0;
    Route route = Route::Regular;
    std::vector<std::string> assumptions;

    std::string to_string() const;
};

/// Throws HypothesisError unless 6∤c, or 2∤c and M is stably parallelizable.
void check_manifold(const spaces::ManifoldSpec& M);

// Each bound has a form taking M (hypotheses are checked, nu = nu_p(c)) and a
// core form taking nu directly.
ExponentBound exp_bound_regular(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, arith::Int p,
                                arith::Int k, const lie::Catalog& cat = lie::Catalog::builtin());
ExponentBound exp_bound_regular_nu(const lie::LieGroupSpec& G, arith::Int p, int nu,
                                   const lie::Catalog& cat = lie::Catalog::builtin());

ExponentBound exp_bound_theriault(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, arith::Int p,
                                  arith::Int k, const lie::Catalog& cat = lie::Catalog::builtin());
ExponentBound exp_bound_theriault_nu(const lie::LieGroupSpec& G, arith::Int p, int nu,
                                     const lie::Catalog& cat = lie::Catalog::builtin());

/// The closed-form expression alone, without the range check:
/// SU(n): max(n+2p-5, nu+p-1); Sp(n), Spin(2n+1): max(2n+2p-6, nu+p-2);
/// Spin(2n): max(2n+2p-8, nu+p-2).
int closed_form_value(const lie::LieGroupSpec& G, arith::Int p, int nu);
/// Closed forms for SU(n), Sp(n), Spin(2n+1), Spin(2n) in the low rank range.
ExponentBound exp_bound_closed_form(const lie::LieGroupSpec& G, arith::Int p, arith::Int c,
                                    const lie::Catalog& cat = lie::Catalog::builtin());
ExponentBound exp_bound_closed_form_nu(const lie::LieGroupSpec& G, arith::Int p, int nu,
                                       const lie::Catalog& cat = lie::Catalog::builtin());

/// exp_p(Ω²G{c}) <= p^(nu_p(c)).
ExponentBound exp_moore_fiber(arith::Int c, arith::Int p);

/// Every applicable route (regular, theriault) and the smallest of them.
struct CombinedBound {
    ExponentBound best;
    std::vector<ExponentBound> routes;
};
CombinedBound exp_bound(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, arith::Int p, arith::Int k,
                        const lie::Catalog& cat = lie::Catalog::builtin());
CombinedBound exp_bound_nu(const lie::LieGroupSpec& G, arith::Int p, int nu,
                           const lie::Catalog& cat = lie::Catalog::builtin());

/// Row of the exceptional exponent table: exponent = max(constant, nu_p(c) + shift)
/// at p (or for all primes >= p when `tail`).
struct ExceptionalRow {
    lie::LieGroupSpec group;
    arith::Int p = 5;
    bool tail = false;
    int constant = 0;
    int shift = 0;

    bool covers(arith::Int prime) const { return tail ? prime >= p : prime == p; }
    int evaluate(int nu) const { return std::max(constant, nu + shift); }
    std::string prime_text() const;       // "p=5", "p≥11"
    std::string expression_text() const;  // "max(7, ν_p(c)+1)"
};

/// Rows for G2, F4, E6, E7, E8, derived from the catalog. With a prime only the
/// rows covering it are returned.
std::vector<ExceptionalRow> exceptional_table(std::optional<arith::Int> p = std::nullopt,
                                              const lie::Catalog& cat = lie::Catalog::builtin());
std::string render_exceptional_table(const std::vector<ExceptionalRow>& rows);

}  // namespace gauge5::exponents
