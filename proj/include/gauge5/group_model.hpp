#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gauge5/lie.hpp"

namespace gauge5::rational {

/// H*(G; Q) = Λ(odd exterior generators) ⊗ Q[even polynomial generators].
/// Degree lists are kept sorted.
struct RationalGroupModel {
    std::vector<int> exterior;    // odd, >= 3
    std::vector<int> polynomial;  // even, >= 2

    RationalGroupModel() = default;
    RationalGroupModel(std::vector<int> exterior, std::vector<int> polynomial);
    static RationalGroupModel of(const lie::LieGroupSpec& g);

    /// rank of pi_d(G) ⊗ Q.
    int rank_pi(int d) const;
    bool exterior_only() const noexcept { return polynomial.empty(); }
    int max_degree() const;

    /// "exterior=3,5,7;polynomial=" and back.
    std::string serialize() const;
    static RationalGroupModel parse(std::string_view text);

    friend bool operator==(const RationalGroupModel&, const RationalGroupModel&) = default;
};

}  // namespace gauge5::rational
