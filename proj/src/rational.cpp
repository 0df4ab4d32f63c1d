#include "gauge5/rational.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "gauge5/errors.hpp"
#include "gauge5/notation.hpp"

namespace gauge5::rational {

using decomp::SpaceAtom;
using decomp::SpaceExpr;

HilbertSeries::HilbertSeries(std::vector<int> betti) : b_(std::move(betti)) {
    if (b_.empty() || b_[0] != 1) throw std::invalid_argument("Hilbert series needs b_0 = 1 (connected space)");
    for (int v : b_)
        if (v < 0) throw std::invalid_argument("Betti numbers must be nonnegative");
    while (b_.size() > 1 && b_.back() == 0) b_.pop_back();
}

HilbertSeries HilbertSeries::manifold(int m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    return HilbertSeries({1, 0, m - 1, m - 1, 0, 1});
}

HilbertSeries HilbertSeries::parse(std::string_view text) {
    std::string s(text);
    if (s.starts_with("b=")) s = s.substr(2);
    std::vector<int> b;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto first = item.find_first_not_of(' ');
        auto last = item.find_last_not_of(' ');
        if (first == std::string::npos) throw std::invalid_argument("empty Betti number in '" + s + "'");
        item = item.substr(first, last - first + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
            throw std::invalid_argument("bad Betti number '" + item + "'");
        b.push_back(std::stoi(item));
    }
    return HilbertSeries(b);
}

void HilbertSeries::require_simply_connected() const {
    if ((*this)[1] != 0) throw HypothesisError("b₁=0", "not rationally simply connected");
}

std::string HilbertSeries::serialize() const {
    std::string s;
    for (std::size_t i = 0; i < b_.size(); ++i) s += (i ? "," : "") + std::to_string(b_[i]);
    return s;
}

namespace {

SpaceExpr rational_blank(const RationalGroupModel& G) { return SpaceExpr("G", G, 0, Localization::rational()); }

std::vector<int> all_degrees(const RationalGroupModel& G) {
    std::vector<int> d = G.exterior;
    d.insert(d.end(), G.polynomial.begin(), G.polynomial.end());
    return d;
}

}  // namespace

SpaceExpr rational_gauge(const HilbertSeries& X, const RationalGroupModel& G, bool based) {
    X.require_simply_connected();
    SpaceExpr e = rational_blank(G);
    for (int i = based ? 1 : 0; i <= X.top_degree(); ++i) e.add(SpaceAtom::loops(i), X[i]);
    return e;
}

SpaceExpr rational_B_star(const HilbertSeries& M, const RationalGroupModel& G) {
    M.require_simply_connected();
    if (!G.exterior_only())
        throw HypothesisError("H*(G;Q) finite dimensional", "polynomial generators present");
    SpaceExpr e = rational_blank(G);
    for (int i = 1; i <= M.top_degree(); ++i) e.add(SpaceAtom::loops(i - 1), M[i]);
    return e;
}

SpaceExpr em_expansion(const HilbertSeries& X, const RationalGroupModel& G, bool based) {
    X.require_simply_connected();
    SpaceExpr e = rational_blank(G);
    for (int d : all_degrees(G)) {
        for (int i = based ? 1 : 0; i <= X.top_degree(); ++i) {
            int deg = d - i;
            if (X[i] == 0 || deg <= 1) continue;
            e.add(deg % 2 ? SpaceAtom::sphere(deg) : SpaceAtom::em(deg), X[i]);
        }
    }
    return e;
}

int rational_rank_formula(const HilbertSeries& X, const RationalGroupModel& G, int q, bool based) {
    if (q < 1) throw std::invalid_argument("rank formula needs q >= 1");
    int total = 0;
    for (int r = based ? 1 : 0; r <= X.top_degree(); ++r) total += X[r] * G.rank_pi(r + q);
    return total;
}

GeneratorLedger rational_cohomology_ring(RingTarget target, const HilbertSeries& X, const RationalGroupModel& G) {
    X.require_simply_connected();
    GeneratorLedger out;
    auto emit = [&](int deg, int copies) {
        if (deg <= 0) return;
        Generator g{deg, deg % 2 ? Generator::Kind::Exterior : Generator::Kind::Polynomial};
        for (int c = 0; c < copies; ++c) out.push_back(g);
    };
    if (target == RingTarget::Gauge) {
        for (int d : all_degrees(G))
            for (int i = 0; i <= X.top_degree(); ++i) emit(d - i, X[i]);
    } else {
        if (!G.exterior_only())
            throw HypothesisError("H*(G;Q) finite dimensional", "polynomial generators present");
        for (int d : G.exterior)
            for (int i = 1; i <= X.top_degree(); ++i) emit(d + 1 - i, X[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const GeneratorLedger& ledger) {
    if (ledger.empty()) return "Q";
    std::string s;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        if (i) s += " ⊗ ";
        const auto& g = ledger[i];
        if (g.kind == Generator::Kind::Exterior)
            s += "Λ(x" + subscript(g.degree) + ")";
        else
            s += "Q[y" + subscript(g.degree) + "]";
    }
    return s;
}

std::string serialize(const GeneratorLedger& ledger) {
    using nlohmann::json;
    std::ostringstream os;
    for (const auto& g : ledger)
        os << json{{"record", "generator"},
                   {"degree", g.degree},
                   {"kind", g.kind == Generator::Kind::Exterior ? "exterior" : "polynomial"}}
                  .dump()
           << "\n";
    return os.str();
}

GeneratorLedger parse_ledger(std::string_view text) {
    using nlohmann::json;
    GeneratorLedger out;
    std::istringstream in{std::string(text)};
    std::string line;
    try {
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json rec = json::parse(line);
            if (rec.at("record") != "generator") throw std::invalid_argument("expected generator records");
            std::string kind = rec.at("kind").get<std::string>();
            if (kind != "exterior" && kind != "polynomial") throw std::invalid_argument("bad generator kind '" + kind + "'");
            out.push_back({rec.at("degree").get<int>(),
                           kind == "exterior" ? Generator::Kind::Exterior : Generator::Kind::Polynomial});
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed record: ") + ex.what());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gauge5::rational
