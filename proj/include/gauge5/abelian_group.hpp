#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gauge5/arith.hpp"
#include "gauge5/localization.hpp"

namespace gauge5 {

/// Finitely generated abelian group Z^r ⊕ (⊕ Z/p^e), kept in primary form.
/// Torsion summands are sorted by prime, then exponent.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;
    FGAbelianGroup(int free_rank, std::vector<arith::PrimePower> torsion);

    static FGAbelianGroup free(int rank);
    /// Z/n for n >= 2, 0 for n == 1, Z for n == 0.
    static FGAbelianGroup cyclic(arith::Int n);
    /// ⊕ Z/n_i (each n_i >= 1).
    static FGAbelianGroup from_cyclics(const std::vector<arith::Int>& orders);

    int free_rank() const noexcept { return free_rank_; }
    const std::vector<arith::PrimePower>& torsion() const noexcept { return torsion_; }
    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    bool is_torsion_free() const noexcept { return torsion_.empty(); }
    arith::Int torsion_order() const;
    /// Invariant factors d_1 | d_2 | ... of the torsion part.
    std::vector<arith::Int> invariant_factors() const;

    FGAbelianGroup operator+(const FGAbelianGroup& other) const;
    FGAbelianGroup& operator+=(const FGAbelianGroup& other);
    FGAbelianGroup times(int copies) const;
    /// Drops torsion at primes the localization inverts; rationally only Z^r survives.
    FGAbelianGroup localized(const Localization& ctx) const;

    /// "0", "Z", "Z^2 ⊕ Z/3 ⊕ (Z/2)^4".
    std::string to_string() const;
    /// "free=R;torsion=p^e,p^e" (torsion list may be empty).
    std::string serialize() const;
    /// Accepts both serialize() and to_string() output ('+' works in place of '⊕').
    static FGAbelianGroup parse(std::string_view text);

    friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

private:
    void canonicalize();

    int free_rank_ = 0;
    std::vector<arith::PrimePower> torsion_;
};

}  // namespace gauge5
