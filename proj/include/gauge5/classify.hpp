#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gauge5/arith.hpp"
#include "gauge5/catalog.hpp"
#include "gauge5/lie.hpp"
#include "gauge5/localization.hpp"
#include "gauge5/spaces.hpp"

namespace gauge5::classify {

enum class OrderSource { Exact, UpperBoundFromS4 };
std::string to_string(OrderSource s);

struct GcdClass {
    arith::Int gcd = 1;             // common value of gcd_class(k, d)
    arith::Int representative = 0;  // smallest k in [0, c)
    arith::Int size = 0;            // number of k in Z/c
    friend bool operator==(const GcdClass&, const GcdClass&) = default;
};

struct ClassificationReport {
    std::string group;
    arith::Int c = 0;
    arith::Int ord = 0;
    arith::Int d = 1;
    std::vector<GcdClass> classes;           // ascending gcd
    arith::Int count_integral = 1;
    std::map<arith::Int, int> count_at_p;    // primes dividing c
    OrderSource order_source = OrderSource::UpperBoundFromS4;
    bool trivial = false;                    // d == 1: a single homotopy type
    std::vector<std::string> notes;

    /// One row per gcd class plus the count lines.
    std::string to_table() const;
    /// Line-delimited JSON records.
    std::string serialize() const;
};

/// The S^4 order used for (G, c): an integral catalog row, or rows valid at
/// every prime dividing c. Throws CatalogGap otherwise.
arith::Int moore_order(const lie::LieGroupSpec& G, arith::Int c, const lie::Catalog& cat = lie::Catalog::builtin());

/// Sufficient condition for G_k(P^4(c)) ≃ G_l(P^4(c)): gcd_class(k, d) == gcd_class(l, d).
bool same_type_moore(arith::Int k, arith::Int l, const lie::LieGroupSpec& G, arith::Int c,
                     const lie::Catalog& cat = lie::Catalog::builtin());

ClassificationReport classify_moore(const lie::LieGroupSpec& G, arith::Int c,
                                    const lie::Catalog& cat = lie::Catalog::builtin());

/// Looped gauge groups Ω^i G_k(M), i = 2 (6∤c) or i = 3 (2∤c, stably
/// parallelizable, single top cell).
ClassificationReport classify_looped_manifold(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, int i,
                                              const Localization& ctx = Localization::integral(),
                                              const lie::Catalog& cat = lie::Catalog::builtin());

/// The listed (G, p, c) for which every G_k(P^4(c)) splits at p. False for p = 2.
bool trivial_case(const lie::LieGroupSpec& G, arith::Int p, arith::Int c,
                  const lie::Catalog& cat = lie::Catalog::builtin());

/// { gcd(ord, k + c*i) : 0 <= i <= N }, optionally split across worker threads.
std::set<arith::Int> dirichlet_oracle(arith::Int k, arith::Int ord, arith::Int c, arith::Int N, unsigned workers = 1);
/// min of dirichlet_oracle, stopping once the lower bound gcd(k, ord, c) is reached.
arith::Int dirichlet_min(arith::Int k, arith::Int ord, arith::Int c, arith::Int N);

}  // namespace gauge5::classify
