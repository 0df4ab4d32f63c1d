#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gauge5/abelian_group.hpp"
#include "gauge5/decomp.hpp"
#include "gauge5/lie.hpp"
#include "gauge5/spaces.hpp"

namespace gauge5::bott {

/// pi_r of the stable gauge group colim_n G^{SU(n)}_k(M) or G^{Spin(n)}_k(M),
/// read away from c (spin M) or away from 2c.
struct StableQuery {
    spaces::ManifoldSpec M;
    lie::StableFamily family = lie::StableFamily::SU;
    arith::Int k = 0;
    int r = 1;
    bool away_from_2c = false;
    std::optional<int> n;  // finite rank to check against the stable range
};

/// Smallest n in the stable range: SU needs n >= r/2 + 3, Spin needs n >= r + 7.
int stability_threshold(lie::StableFamily family, int r);

/// The away-from-c decomposition used for the query, normalized.
decomp::SpaceExpr stable_decomposition(const StableQuery& q);
/// Loop degrees of the factors of stable_decomposition (0 for G itself).
std::vector<int> shift_multiset(const StableQuery& q);
FGAbelianGroup stable_pi_gauge(const StableQuery& q);

/// Table of pi_r over one period of r (2 for SU, 8 for Spin, 4 for Spin away from 2c).
std::string render_table(const spaces::ManifoldSpec& M, lie::StableFamily family, bool away_from_2c);

}  // namespace gauge5::bott
