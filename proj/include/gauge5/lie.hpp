#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gauge5/abelian_group.hpp"
#include "gauge5/arith.hpp"
#include "gauge5/catalog.hpp"
#include "gauge5/localization.hpp"

namespace gauge5::lie {

enum class Family { SU, Sp, Spin, G2, F4, E6, E7, E8 };

/// A simply connected compact simple Lie group. SU(n) needs n >= 2, Sp(n)
/// n >= 1, Spin(n) n >= 5; exceptional groups carry n = 0.
class LieGroupSpec {
public:
    LieGroupSpec() = default;
    LieGroupSpec(Family family, int n = 0);

    /// "SU:4", "Sp:2", "Spin:8", "G2", "E8" (also "SU(4)").
    static LieGroupSpec parse(std::string_view text);

    Family family() const noexcept { return family_; }
    int n() const noexcept { return n_; }
    bool is_exceptional() const noexcept;
    bool is_matrix() const noexcept { return !is_exceptional(); }

    /// "SU(4)", "Spin(8)", "G2".
    std::string label() const;
    /// "SU:4", "G2"; inverse of parse().
    std::string serialize() const;
    /// Catalog family name and parameter: Spin(2n+1) is ("SpinOdd", n), Spin(2n) is ("SpinEven", n).
    std::pair<std::string, int> catalog_key() const;

    friend bool operator==(const LieGroupSpec&, const LieGroupSpec&) = default;

private:
    Family family_ = Family::SU;
    int n_ = 2;
};

/// The type {n_1 <= ... <= n_l}: G is rationally a product of S^(2n_i+1).
std::vector<int> type_of(const LieGroupSpec& g);
/// max of the type.
int l_of(const LieGroupSpec& g);
int rank_of(const LieGroupSpec& g);
/// Degrees 2n_i+1 of the rational exterior generators, ascending.
std::vector<int> rational_degrees(const LieGroupSpec& g);
/// Number of i with 2n_i + 1 == d.
int rational_rank_pi(const LieGroupSpec& g, int d);

/// pi_4(G) vanishes in the localization. Only SU(2) = Sp(1), Sp(n) and
/// Spin(5) have pi_4 = Z/2.
bool pi4_is_trivial(const LieGroupSpec& g, const Localization& ctx);

/// Table value of the order of the connecting map over S^4. Without a prime
/// only integral rows are used. Throws CatalogGap when no row applies.
arith::Int ord_partial1_tilde(const LieGroupSpec& g, std::optional<arith::Int> p,
                              const Catalog& cat = Catalog::builtin());

/// True for p odd, p >= l(G)+1 and no p-torsion in H*(G; Z).
bool is_p_regular(const LieGroupSpec& g, arith::Int p, const Catalog& cat = Catalog::builtin());
bool in_theriault_range(const LieGroupSpec& g, arith::Int p, const Catalog& cat = Catalog::builtin());
int r_of(const LieGroupSpec& g, arith::Int p, const Catalog& cat = Catalog::builtin());
int epsilon(const LieGroupSpec& g, arith::Int p);

enum class StableFamily { SU, Spin };
/// pi_r of the stable group: SU gives Z for r odd, 0 for r even; Spin follows
/// the 8-periodic pattern Z/2, Z/2, 0, Z, 0, 0, 0, Z for r = 0..7 mod 8.
FGAbelianGroup stable_pi(StableFamily family, int r);
StableFamily parse_stable_family(std::string_view text);
std::string to_string(StableFamily family);

}  // namespace gauge5::lie
