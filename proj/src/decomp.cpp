#include "gauge5/decomp.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "gauge5/errors.hpp"
#include "gauge5/notation.hpp"

namespace gauge5::decomp {

using arith::Int;
using Kind = SpaceAtom::Kind;

namespace {

constexpr std::pair<Kind, const char*> kKindNames[] = {
    {Kind::GroupItself, "GroupItself"}, {Kind::MooreGauge, "MooreGauge"}, {Kind::LoopsMapCP2, "LoopsMapCP2"},
    {Kind::LoopsGFiber, "LoopsGFiber"}, {Kind::MooreMap, "MooreMap"},     {Kind::LoopsG, "LoopsG"},
    {Kind::Sphere, "SphereFactor"},     {Kind::EM, "EMFactor"},
};

std::string loops_prefix(int j) {
    if (j == 0) return "";
    if (j == 1) return "Ω";
    return "Ω" + superscript(j);
}

std::string atom_text(const SpaceAtom& a, Int c) {
    switch (a.kind) {
        case Kind::GroupItself: return "G";
        case Kind::MooreGauge:
            return loops_prefix(a.j) + "G" + subscript(a.k) + "(P⁴(" + std::to_string(c) + "))";
        case Kind::LoopsMapCP2: return loops_prefix(a.j) + "Map*₀(CP²,G)";
        case Kind::LoopsGFiber: return loops_prefix(a.j) + "G{" + std::to_string(c) + "}";
        case Kind::MooreMap: return "Ω" + superscript(a.j) + "(G;" + std::to_string(c) + ")";
        case Kind::LoopsG: return loops_prefix(a.j) + "G";
        case Kind::Sphere: return "S" + superscript(a.j);
        case Kind::EM: return "K(Q," + std::to_string(a.j) + ")";
    }
    return "?";
}

bool needs_c(Kind k) { return k == Kind::MooreGauge || k == Kind::LoopsGFiber || k == Kind::MooreMap; }

}  // namespace

SpaceAtom SpaceAtom::group() { return {Kind::GroupItself, 0, 0}; }

SpaceAtom SpaceAtom::moore_gauge(int j, Int k) {
    if (j < 0) throw std::invalid_argument("loop count must be nonnegative");
    return {Kind::MooreGauge, j, k};
}

SpaceAtom SpaceAtom::loops_map_cp2(int j) {
    if (j < 0) throw std::invalid_argument("loop count must be nonnegative");
    return {Kind::LoopsMapCP2, j, 0};
}

SpaceAtom SpaceAtom::loops_fiber(int j) {
    if (j < 0) throw std::invalid_argument("loop count must be nonnegative");
    return {Kind::LoopsGFiber, j, 0};
}

SpaceAtom SpaceAtom::moore_map(int n) {
    if (n < 2) throw std::invalid_argument("Ω^n(G;c) needs n >= 2");
    return {Kind::MooreMap, n, 0};
}

SpaceAtom SpaceAtom::loops(int j) {
    if (j < 0) throw std::invalid_argument("loop count must be nonnegative");
    return j == 0 ? group() : SpaceAtom{Kind::LoopsG, j, 0};
}

SpaceAtom SpaceAtom::sphere(int n) {
    if (n < 1) throw std::invalid_argument("sphere dimension must be positive");
    return {Kind::Sphere, n, 0};
}

SpaceAtom SpaceAtom::em(int n) {
    if (n < 1) throw std::invalid_argument("Eilenberg-MacLane degree must be positive");
    return {Kind::EM, n, 0};
}

std::string to_string(Kind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "?";
}

Kind parse_kind(std::string_view text) {
    for (const auto& [k, name] : kKindNames)
        if (text == name) return k;
    throw std::invalid_argument("unknown factor kind '" + std::string(text) + "'");
}

SpaceExpr::SpaceExpr(std::string group_label, rational::RationalGroupModel model, Int c, Localization ctx)
    : group_label_(std::move(group_label)), model_(std::move(model)), c_(c), ctx_(std::move(ctx)) {
    if (c_ < 0) throw std::invalid_argument("c must be nonnegative");
}

void SpaceExpr::add(SpaceAtom atom, int mult) {
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult == 0) return;
    if (needs_c(atom.kind) && c_ < 2) throw std::invalid_argument(decomp::to_string(atom.kind) + " factor needs c >= 2");
    if (atom.kind == Kind::MooreGauge) atom.k = arith::mod_floor(atom.k, c_);
    for (auto& t : terms_) {
        if (t.atom == atom) {
            t.mult += mult;
            return;
        }
    }
    terms_.push_back({atom, mult});
}

int SpaceExpr::total_factors() const {
    int n = 0;
    for (const auto& t : terms_) n += t.mult;
    return n;
}

std::string SpaceExpr::to_string() const {
    if (terms_.empty()) return "*";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) s += " × ";
        const auto& t = terms_[i];
        std::string a = atom_text(t.atom, c_);
        if (t.mult == 1)
            s += a;
        else if (t.atom.kind == Kind::GroupItself)
            s += a + superscript(t.mult);
        else
            s += "(" + a + ")" + superscript(t.mult);
    }
    return s;
}

std::string SpaceExpr::serialize() const {
    using nlohmann::json;
    std::ostringstream os;
    json head = {{"record", "space_expr"}, {"group", group_label_}, {"exterior", model_.exterior},
                 {"polynomial", model_.polynomial}, {"c", c_}, {"ctx", ctx_.serialize()}};
    os << head.dump() << "\n";
    for (const auto& t : terms_) {
        json rec = {{"record", "factor"}, {"kind", decomp::to_string(t.atom.kind)}, {"j", t.atom.j}, {"mult", t.mult}};
        if (t.atom.kind == Kind::MooreGauge) rec["k"] = t.atom.k;
        os << rec.dump() << "\n";
    }
    return os.str();
}

SpaceExpr SpaceExpr::parse(std::string_view text) {
    using nlohmann::json;
    std::istringstream in{std::string(text)};
    std::string line;
    SpaceExpr e;
    bool have_head = false;
    try {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json rec = json::parse(line);
            std::string kind = rec.at("record").get<std::string>();
            if (!have_head) {
                if (kind != "space_expr") throw std::invalid_argument("expected a space_expr header record");
                e = SpaceExpr(rec.at("group").get<std::string>(),
                              rational::RationalGroupModel(rec.at("exterior").get<std::vector<int>>(),
                                                           rec.at("polynomial").get<std::vector<int>>()),
                              rec.at("c").get<Int>(), Localization::parse(rec.at("ctx").get<std::string>()));
                have_head = true;
                continue;
            }
            if (kind != "factor") throw std::invalid_argument("unexpected record '" + kind + "'");
            SpaceAtom a{parse_kind(rec.at("kind").get<std::string>()), rec.at("j").get<int>(), 0};
            if (a.kind == Kind::MooreGauge) a.k = rec.at("k").get<Int>();
            e.add(a, rec.at("mult").get<int>());
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed record: ") + ex.what());
    }
    if (!have_head) throw std::invalid_argument("empty space expression record stream");
    return e;
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.group_label_ != b.group_label_ || !(a.model_ == b.model_) || a.c_ != b.c_ || !(a.ctx_ == b.ctx_))
        return false;
    auto key = [](const Term& x, const Term& y) { return x.atom < y.atom; };
    auto ta = a.terms_;
    auto tb = b.terms_;
    std::sort(ta.begin(), ta.end(), key);
    std::sort(tb.begin(), tb.end(), key);
    return ta == tb;
}

SpaceExpr apply_rule(const SpaceExpr& e, Rule rule) {
    SpaceExpr out = e;
    out.clear_terms();
    const bool c_inverted = e.c() >= 2 && e.ctx().inverts_all_primes_of(e.c());
    const bool two_inverted = e.ctx().inverts(2);
    for (const auto& t : e.terms()) {
        const SpaceAtom& a = t.atom;
        switch (rule) {
            case Rule::MooreMapToFiber:
                out.add(a.kind == Kind::MooreMap ? SpaceAtom::loops_fiber(a.j - 1) : a, t.mult);
                break;
            case Rule::InvertC:
                if (c_inverted && (a.kind == Kind::LoopsGFiber || a.kind == Kind::MooreMap)) break;
                out.add(c_inverted && a.kind == Kind::MooreGauge ? SpaceAtom::loops(a.j) : a, t.mult);
                break;
            case Rule::SplitCP2:
                if (two_inverted && a.kind == Kind::LoopsMapCP2) {
                    out.add(SpaceAtom::loops(a.j + 2), t.mult);
                    out.add(SpaceAtom::loops(a.j + 4), t.mult);
                } else {
                    out.add(a, t.mult);
                }
                break;
        }
    }
    return out;
}

SpaceExpr normalize(const SpaceExpr& e) {
    SpaceExpr r = apply_rule(apply_rule(apply_rule(e, Rule::MooreMapToFiber), Rule::InvertC), Rule::SplitCP2);
    std::vector<Term> terms = r.terms();
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& x, const Term& y) { return x.atom.kind < y.atom.kind; });
    r.clear_terms();
    for (const auto& t : terms) r.add(t.atom, t.mult);
    return r;
}

namespace {

void check_pi4(const lie::LieGroupSpec& G, const Localization& ctx) {
    if (!lie::pi4_is_trivial(G, ctx)) throw HypothesisError("π₄(G)=0", G.label() + " has π₄ = Z/2 here");
}

SpaceExpr blank(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, const Localization& ctx) {
    return SpaceExpr(G.label(), rational::RationalGroupModel::of(G), M.c, ctx);
}

}  // namespace

SpaceExpr loops2_gauge(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, Int k, const Localization& ctx) {
    M.validate();
    if (M.c % 6 == 0) throw HypothesisError("6∤c");
    check_pi4(G, ctx);
    if (!M.spin && M.m < 2) throw HypothesisError("m≥2", "the non-spin decomposition needs m−2 ≥ 0");
    SpaceExpr e = blank(M, G, ctx);
    e.add(SpaceAtom::moore_gauge(2, k));
    if (M.spin) {
        e.add(SpaceAtom::moore_map(4));
        e.add(SpaceAtom::loops(7));
        e.add(SpaceAtom::loops(4), M.m - 1);
        e.add(SpaceAtom::loops(5), M.m - 1);
    } else {
        e.add(SpaceAtom::loops_map_cp2(3));
        e.add(SpaceAtom::moore_map(4));
        e.add(SpaceAtom::loops(4), M.m - 1);
        e.add(SpaceAtom::loops(5), M.m - 2);
    }
    return normalize(e);
}

SpaceExpr loops3_gauge(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, Int k, const Localization& ctx) {
    M.validate();
    if (M.c % 2 == 0) throw HypothesisError("2∤c");
    if (!M.stably_parallelizable) throw HypothesisError("M stably parallelizable");
    if (!M.single_top_cell) throw HypothesisError("single top cell");
    check_pi4(G, ctx);
    SpaceExpr e = blank(M, G, ctx);
    e.add(SpaceAtom::moore_gauge(3, k));
    e.add(SpaceAtom::moore_map(5));
    e.add(SpaceAtom::loops(8));
    e.add(SpaceAtom::loops(5), M.m - 1);
    e.add(SpaceAtom::loops(6), M.m - 1);
    return normalize(e);
}

SpaceExpr gauge_away_from_c(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, Int /*k*/,
                            const std::vector<Int>& extra_inverted) {
    M.validate();
    std::vector<Int> inv{M.c};
    inv.insert(inv.end(), extra_inverted.begin(), extra_inverted.end());
    Localization ctx = Localization::away_from(inv);
    check_pi4(G, ctx);
    if (!M.spin && M.m < 2) throw HypothesisError("m≥2", "the non-spin decomposition needs m−2 ≥ 0");
    SpaceExpr e = blank(M, G, ctx);
    e.add(SpaceAtom::group());
    if (M.spin) {
        e.add(SpaceAtom::loops(5));
        e.add(SpaceAtom::loops(2), M.m - 1);
        e.add(SpaceAtom::loops(3), M.m - 1);
    } else {
        e.add(SpaceAtom::loops_map_cp2(1));
        e.add(SpaceAtom::loops(2), M.m - 1);
        e.add(SpaceAtom::loops(3), M.m - 2);
    }
    return normalize(e);
}

int rational_rank(const SpaceExpr& e, int q) {
    if (q < 1) throw std::invalid_argument("rational rank needs q >= 1");
    const auto& g = e.model();
    int total = 0;
    for (const auto& t : e.terms()) {
        const SpaceAtom& a = t.atom;
        int r = 0;
        switch (a.kind) {
            case Kind::GroupItself: r = g.rank_pi(q); break;
            case Kind::MooreGauge:
            case Kind::LoopsG: r = g.rank_pi(q + a.j); break;
            case Kind::LoopsMapCP2: r = g.rank_pi(q + a.j + 2) + g.rank_pi(q + a.j + 4); break;
            case Kind::LoopsGFiber:
            case Kind::MooreMap: r = 0; break;
            case Kind::Sphere: r = (q == a.j) + (a.j % 2 == 0 && q == 2 * a.j - 1); break;
            case Kind::EM: r = q == a.j; break;
        }
        total += r * t.mult;
    }
    return total;
}

}  // namespace gauge5::decomp
