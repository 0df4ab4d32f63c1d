#include "gauge5/bott.hpp"

#include <sstream>
#include <stdexcept>

#include "gauge5/errors.hpp"

namespace gauge5::bott {

using lie::StableFamily;

int stability_threshold(StableFamily family, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (family == StableFamily::SU) return (r + 1) / 2 + 3;
    return r + 7;
}

decomp::SpaceExpr stable_decomposition(const StableQuery& q) {
    q.M.validate();
    int min_r = q.family == StableFamily::SU ? 1 : 2;
    if (q.r < min_r)
        throw std::invalid_argument("stable pi_r of " + lie::to_string(q.family) + " needs r >= " + std::to_string(min_r));
    int threshold = stability_threshold(q.family, q.r);
    if (q.n && *q.n < threshold)
        throw HypothesisError("n≥" + std::to_string(threshold), "r=" + std::to_string(q.r) + " is outside the stable range");
    if (!q.M.spin && !q.away_from_2c) throw HypothesisError("localization away from 2c", "M is not spin");
    lie::LieGroupSpec G = q.family == StableFamily::SU ? lie::LieGroupSpec(lie::Family::SU, std::max(threshold, 3))
                                                       : lie::LieGroupSpec(lie::Family::Spin, std::max(threshold, 6));
    std::vector<arith::Int> extra;
    if (q.away_from_2c) extra.push_back(2);
    return decomp::gauge_away_from_c(q.M, G, q.k, extra);
}

std::vector<int> shift_multiset(const StableQuery& q) {
    auto e = stable_decomposition(q);
    std::vector<int> shifts;
    for (const auto& t : e.terms()) {
        int s = 0;
        if (t.atom.kind == decomp::SpaceAtom::Kind::LoopsG)
            s = t.atom.j;
        else if (t.atom.kind != decomp::SpaceAtom::Kind::GroupItself)
            throw std::logic_error("factor " + decomp::to_string(t.atom.kind) + " has no stable evaluation");
        for (int i = 0; i < t.mult; ++i) shifts.push_back(s);
    }
    return shifts;
}

FGAbelianGroup stable_pi_gauge(const StableQuery& q) {
    auto e = stable_decomposition(q);
    FGAbelianGroup out;
    for (int s : shift_multiset(q)) out += lie::stable_pi(q.family, q.r + s);
    return out.localized(e.ctx());
}

std::string render_table(const spaces::ManifoldSpec& M, StableFamily family, bool away_from_2c) {
    int period = family == StableFamily::SU ? 2 : (away_from_2c ? 4 : 8);
    int first = family == StableFamily::SU ? 1 : 2;
    std::ostringstream os;
    os << "π_r(G^" << lie::to_string(family) << "_k(M)), M " << (M.spin ? "spin" : "non-spin") << ", m = " << M.m
       << ", c = " << M.c << ", localized away from " << (away_from_2c ? "2c" : "c") << "\n";
    os << "r mod " << period << "    group\n";
    for (int i = 0; i < period; ++i) {
        int r = first + i;
        StableQuery q{M, family, 0, r, away_from_2c, std::nullopt};
        std::string cls = std::to_string(r % period);
        os << cls << std::string(11 - cls.size(), ' ') << stable_pi_gauge(q).to_string() << "\n";
    }
    return os.str();
}

}  // namespace gauge5::bott
