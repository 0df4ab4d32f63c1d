#include "gauge5/lie.hpp"

#include <algorithm>
#include <stdexcept>

#include "gauge5/errors.hpp"

namespace gauge5::lie {

using arith::Int;

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr FamilyName kNames[] = {{Family::SU, "SU"}, {Family::Sp, "Sp"}, {Family::Spin, "Spin"},
                                 {Family::G2, "G2"}, {Family::F4, "F4"}, {Family::E6, "E6"},
                                 {Family::E7, "E7"}, {Family::E8, "E8"}};

const char* family_name(Family f) {
    for (const auto& fn : kNames)
        if (fn.family == f) return fn.name;
    return "?";
}

}  // namespace

LieGroupSpec::LieGroupSpec(Family family, int n) : family_(family), n_(n) {
    switch (family) {
        case Family::SU:
            if (n < 2) throw std::invalid_argument("SU(n) requires n >= 2");
            break;
        case Family::Sp:
            if (n < 1) throw std::invalid_argument("Sp(n) requires n >= 1");
            break;
        case Family::Spin:
            if (n < 5) throw std::invalid_argument("Spin(n) requires n >= 5");
            break;
        default:
            if (n != 0) throw std::invalid_argument(std::string(family_name(family)) + " takes no parameter");
    }
}

LieGroupSpec LieGroupSpec::parse(std::string_view text) {
    std::string s(text);
    std::string name = s;
    std::string param;
    if (auto colon = s.find(':'); colon != std::string::npos) {
        name = s.substr(0, colon);
        param = s.substr(colon + 1);
    } else if (auto open = s.find('('); open != std::string::npos && s.back() == ')') {
        name = s.substr(0, open);
        param = s.substr(open + 1, s.size() - open - 2);
    }
    for (const auto& fn : kNames) {
        if (name != fn.name) continue;
        bool exceptional = fn.family != Family::SU && fn.family != Family::Sp && fn.family != Family::Spin;
        if (exceptional) {
            if (!param.empty()) throw std::invalid_argument(name + " takes no parameter");
            return LieGroupSpec(fn.family);
        }
        if (param.empty() || param.find_first_not_of("0123456789") != std::string::npos || param.size() > 6)
            throw std::invalid_argument("group '" + s + "' needs a numeric parameter, e.g. " + name + ":4");
        return LieGroupSpec(fn.family, std::stoi(param));
    }
    throw std::invalid_argument("unknown group family '" + name + "'");
}

bool LieGroupSpec::is_exceptional() const noexcept {
    return family_ != Family::SU && family_ != Family::Sp && family_ != Family::Spin;
}

std::string LieGroupSpec::label() const {
    if (is_exceptional()) return family_name(family_);
    return std::string(family_name(family_)) + "(" + std::to_string(n_) + ")";
}

std::string LieGroupSpec::serialize() const {
    if (is_exceptional()) return family_name(family_);
    return std::string(family_name(family_)) + ":" + std::to_string(n_);
}

std::pair<std::string, int> LieGroupSpec::catalog_key() const {
    if (family_ == Family::Spin) return n_ % 2 ? std::pair{std::string("SpinOdd"), (n_ - 1) / 2} : std::pair{std::string("SpinEven"), n_ / 2};
    return {family_name(family_), n_};
}

std::vector<int> type_of(const LieGroupSpec& g) {
    std::vector<int> t;
    const int n = g.n();
    switch (g.family()) {
        case Family::SU:
            for (int i = 1; i <= n - 1; ++i) t.push_back(i);
            break;
        case Family::Sp:
            for (int i = 1; i <= 2 * n - 1; i += 2) t.push_back(i);
            break;
        case Family::Spin:
            if (n % 2) {
                for (int i = 1; i <= n - 2; i += 2) t.push_back(i);
            } else {
                for (int i = 1; i <= n - 3; i += 2) t.push_back(i);
                t.push_back(n / 2 - 1);
            }
            break;
        case Family::G2: t = {1, 5}; break;
        case Family::F4: t = {1, 5, 7, 11}; break;
        case Family::E6: t = {1, 4, 5, 7, 8, 11}; break;
        case Family::E7: t = {1, 5, 7, 9, 11, 13, 17}; break;
        case Family::E8: t = {1, 7, 11, 13, 17, 19, 23, 29}; break;
    }
    std::sort(t.begin(), t.end());
    return t;
}

int l_of(const LieGroupSpec& g) { return type_of(g).back(); }

int rank_of(const LieGroupSpec& g) { return static_cast<int>(type_of(g).size()); }

std::vector<int> rational_degrees(const LieGroupSpec& g) {
    std::vector<int> out;
    for (int t : type_of(g)) out.push_back(2 * t + 1);
    return out;
}

int rational_rank_pi(const LieGroupSpec& g, int d) {
    auto degs = rational_degrees(g);
    return static_cast<int>(std::count(degs.begin(), degs.end(), d));
}

bool pi4_is_trivial(const LieGroupSpec& g, const Localization& ctx) {
    bool z2 = (g.family() == Family::SU && g.n() == 2) || g.family() == Family::Sp ||
              (g.family() == Family::Spin && g.n() == 5);
    return !z2 || ctx.inverts(2);
}

Int ord_partial1_tilde(const LieGroupSpec& g, std::optional<Int> p, const Catalog& cat) {
    if (p) arith::require_prime(*p);
    auto [fam, n] = g.catalog_key();
    const CatalogRow* row = cat.find(RowKind::Ord, fam, n, p);
    if (!row) {
        std::string where = p ? "p=" + std::to_string(*p) : "integrally";
        throw CatalogGap("order unknown for this pair: " + g.label() + " " + where);
    }
    return row->value.eval({n, p, std::nullopt});
}

bool is_p_regular(const LieGroupSpec& g, Int p, const Catalog& cat) {
    arith::require_prime(p);
    if (p == 2) throw std::invalid_argument("p-regularity is defined here for odd primes only");
    auto [fam, n] = g.catalog_key();
    if (cat.find(RowKind::Torsion, fam, n, p)) return false;
    return p >= l_of(g) + 1;
}

bool in_theriault_range(const LieGroupSpec& g, Int p, const Catalog& cat) {
    arith::require_prime(p);
    auto [fam, n] = g.catalog_key();
    return cat.find(RowKind::Range, fam, n, p) != nullptr;
}

int r_of(const LieGroupSpec& g, Int p, const Catalog& cat) {
    if (!in_theriault_range(g, p, cat))
        throw HypothesisError(g.label() + " in the low rank range at p=" + std::to_string(p));
    auto [fam, n] = g.catalog_key();
    const CatalogRow* row = cat.find(RowKind::R, fam, n, p);
    if (!row) throw CatalogGap("r unknown for " + g.label() + " at p=" + std::to_string(p));
    return static_cast<int>(row->value.eval({n, p, std::nullopt}));
}

int epsilon(const LieGroupSpec& g, Int p) {
    arith::require_prime(p);
    if (p != 3) return 0;
    bool listed = (g.family() == Family::SU && g.n() <= 4) || (g.family() == Family::Spin && g.n() == 6);
    return listed ? 1 : 0;
}

FGAbelianGroup stable_pi(StableFamily family, int r) {
    if (family == StableFamily::SU) {
        if (r < 1) throw std::invalid_argument("stable pi_r of SU requires r >= 1");
        return r % 2 ? FGAbelianGroup::free(1) : FGAbelianGroup();
    }
    if (r < 2) throw std::invalid_argument("stable pi_r of Spin requires r >= 2");
    switch (r % 8) {
        case 0:
        case 1: return FGAbelianGroup::cyclic(2);
        case 3:
        case 7: return FGAbelianGroup::free(1);
        default: return FGAbelianGroup();
    }
}

StableFamily parse_stable_family(std::string_view text) {
    if (text == "SU") return StableFamily::SU;
    if (text == "Spin") return StableFamily::Spin;
    throw std::invalid_argument("stable family must be SU or Spin, got '" + std::string(text) + "'");
}

std::string to_string(StableFamily family) { return family == StableFamily::SU ? "SU" : "Spin"; }

}  // namespace gauge5::lie
