#include "gauge5/spaces.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gauge5/errors.hpp"
#include "gauge5/notation.hpp"

namespace gauge5::spaces {

using arith::Int;

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw std::invalid_argument("bad boolean '" + v + "' for " + key);
}

Int parse_int(const std::string& key, const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 18)
        throw std::invalid_argument("bad integer '" + v + "' for " + key);
    return std::stoll(v);
}

void require_odd(Int c) {
    if (c < 1) throw std::invalid_argument("c must be positive");
    if (c % 2 == 0) throw HypothesisError("2∤c");
}

}  // namespace

void ManifoldSpec::validate() const {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    if (m < 1) throw std::invalid_argument("m must be at least 1");
}

ManifoldSpec ManifoldSpec::parse_config(std::string_view text) {
    ManifoldSpec M;
    bool have_c = false;
    bool have_m = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        auto eq = line.find_first_of("=:");
        if (eq == std::string::npos) throw std::invalid_argument("expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "c") {
            M.c = parse_int(key, value);
            have_c = true;
        } else if (key == "m") {
            M.m = static_cast<int>(parse_int(key, value));
            have_m = true;
        } else if (key == "spin") {
            M.spin = parse_bool(key, value);
        } else if (key == "stably_parallelizable") {
            M.stably_parallelizable = parse_bool(key, value);
        } else if (key == "single_top_cell") {
            M.single_top_cell = parse_bool(key, value);
        } else {
            throw std::invalid_argument("unknown manifold key '" + key + "'");
        }
    }
    if (!have_c || !have_m) throw std::invalid_argument("manifold config needs both c and m");
    M.validate();
    return M;
}

std::string ManifoldSpec::serialize() const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream os;
    os << "c = " << c << "\nm = " << m << "\nspin = " << b(spin) << "\nstably_parallelizable = "
       << b(stably_parallelizable) << "\nsingle_top_cell = " << b(single_top_cell) << "\n";
    return os.str();
}

std::array<FGAbelianGroup, 6> homology(const ManifoldSpec& M) {
    M.validate();
    auto zc = FGAbelianGroup::cyclic(M.c);
    auto free = FGAbelianGroup::free(M.m - 1);
    return {FGAbelianGroup::free(1), zc, free, free + zc, FGAbelianGroup(), FGAbelianGroup::free(1)};
}

FGAbelianGroup bundle_classes(const ManifoldSpec& M, const lie::LieGroupSpec& G, const Localization& ctx) {
    M.validate();
    if (!lie::pi4_is_trivial(G, ctx)) throw HypothesisError("π₄(G)=0", "classification lemma inapplicable");
    return FGAbelianGroup::cyclic(M.c);
}

FGAbelianGroup pi_moore_self(int n, Int c) {
    require_odd(c);
    if (n < 3) throw std::invalid_argument("pi_n(P^n(c)) is supported for n >= 3");
    return n == 3 ? FGAbelianGroup::cyclic(c) : FGAbelianGroup();
}

FGAbelianGroup pi6_P4(Int c) {
    require_odd(c);
    return FGAbelianGroup::from_cyclics({c, arith::gcd(3, c)});
}

FGAbelianGroup pi7_P5(Int c) { return pi6_P4(c); }

Int suspension_image_order(Int c) {
    require_odd(c);
    return arith::gcd(3, c);
}

FGAbelianGroup pi_with_coefficients(CoefficientTarget target, Int c) {
    require_odd(c);
    return target == CoefficientTarget::P3At4 ? FGAbelianGroup::cyclic(c) : FGAbelianGroup();
}

CoefficientTarget parse_coefficient_target(std::string_view text) {
    if (text == "S3@4") return CoefficientTarget::S3At4;
    if (text == "S4@5") return CoefficientTarget::S4At5;
    if (text == "P3@4") return CoefficientTarget::P3At4;
    if (text == "P4@5") return CoefficientTarget::P4At5;
    throw std::invalid_argument("unsupported coefficient target '" + std::string(text) +
                                "' (expected S3@4, S4@5, P3@4 or P4@5)");
}

WedgeExpr::WedgeExpr(std::vector<WedgeAtom> atoms) {
    for (auto& a : atoms) add(std::move(a));
}

WedgeAtom WedgeExpr::sphere(int n) {
    WedgeAtom a;
    a.kind = WedgeAtom::Kind::Sphere;
    a.n = n;
    return a;
}

WedgeAtom WedgeExpr::moore(int n, Int c) {
    WedgeAtom a;
    a.kind = WedgeAtom::Kind::Moore;
    a.n = n;
    a.c = c;
    return a;
}

WedgeAtom WedgeExpr::opaque(std::string tag, std::map<int, FGAbelianGroup> homology) {
    WedgeAtom a;
    a.kind = WedgeAtom::Kind::Opaque;
    a.n = 0;
    a.tag = std::move(tag);
    a.homology = std::move(homology);
    return a;
}

void WedgeExpr::add(WedgeAtom atom, int copies) {
    if (atom.kind == WedgeAtom::Kind::Sphere && atom.n < 2) throw std::invalid_argument("sphere dimension must be >= 2");
    if (atom.kind == WedgeAtom::Kind::Moore) {
        if (atom.n < 2) throw std::invalid_argument("Moore space dimension must be >= 2");
        if (atom.c < 2) throw std::invalid_argument("Moore space order must be >= 2");
    }
    for (int i = 0; i < copies; ++i) atoms_.push_back(atom);
}

WedgeExpr WedgeExpr::normalized() const {
    WedgeExpr out = *this;
    std::stable_sort(out.atoms_.begin(), out.atoms_.end(), [](const WedgeAtom& a, const WedgeAtom& b) {
        return std::tie(a.kind, a.n, a.c, a.tag) < std::tie(b.kind, b.n, b.c, b.tag);
    });
    return out;
}

FGAbelianGroup WedgeExpr::reduced_homology(int degree) const {
    FGAbelianGroup h;
    for (const auto& a : atoms_) {
        switch (a.kind) {
            case WedgeAtom::Kind::Sphere:
                if (degree == a.n) h += FGAbelianGroup::free(1);
                break;
            case WedgeAtom::Kind::Moore:
                if (degree == a.n - 1) h += FGAbelianGroup::cyclic(a.c);
                break;
            case WedgeAtom::Kind::Opaque:
                if (auto it = a.homology.find(degree); it != a.homology.end()) h += it->second;
                break;
        }
    }
    return h;
}

std::string WedgeExpr::to_string() const {
    if (atoms_.empty()) return "*";
    std::string s;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) s += "∨";
        const auto& a = atoms_[i];
        switch (a.kind) {
            case WedgeAtom::Kind::Sphere: s += "S" + superscript(a.n); break;
            case WedgeAtom::Kind::Moore: s += "P" + superscript(a.n) + "(" + std::to_string(a.c) + ")"; break;
            case WedgeAtom::Kind::Opaque: s += a.tag; break;
        }
    }
    return s;
}

bool operator==(const WedgeExpr& a, const WedgeExpr& b) { return a.normalized().atoms_ == b.normalized().atoms_; }

WedgeExpr suspension_splitting(const ManifoldSpec& M, int t) {
    M.validate();
    WedgeExpr w;
    switch (t) {
        case 2:
            if (M.c % 2 == 0) throw HypothesisError("2∤c");
            w.add(WedgeExpr::moore(6, M.c));
            w.add(WedgeExpr::moore(4, M.c));
            for (int i = 0; i < M.m - 1; ++i) {
                w.add(WedgeExpr::sphere(5));
                w.add(WedgeExpr::sphere(4));
            }
            return w;
        case 3:
            if (M.c % 6 == 0) throw HypothesisError("6∤c");
            if (M.m < 2) throw HypothesisError("m≥2");
            w.add(WedgeExpr::opaque("ΣZ′", {{5, FGAbelianGroup::free(1)},
                                            {6, FGAbelianGroup::free(1)},
                                            {8, FGAbelianGroup::free(1)}}));
            w.add(WedgeExpr::moore(5, M.c));
            w.add(WedgeExpr::moore(7, M.c));
            for (int i = 0; i < M.m - 2; ++i) {
                w.add(WedgeExpr::sphere(6));
                w.add(WedgeExpr::sphere(5));
            }
            return w;
        case 4:
            if (M.c % 2 == 0) throw HypothesisError("2∤c");
            if (!M.single_top_cell) throw HypothesisError("single top cell");
            if (!M.stably_parallelizable) throw HypothesisError("M stably parallelizable");
            w.add(WedgeExpr::sphere(9));
            w.add(WedgeExpr::moore(8, M.c));
            w.add(WedgeExpr::moore(6, M.c));
            for (int i = 0; i < M.m - 1; ++i) {
                w.add(WedgeExpr::sphere(7));
                w.add(WedgeExpr::sphere(6));
            }
            return w;
        default:
            throw std::invalid_argument("suspension splitting is available for t = 2, 3, 4");
    }
}

}  // namespace gauge5::spaces
