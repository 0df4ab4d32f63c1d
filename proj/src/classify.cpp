#include "gauge5/classify.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gauge5/errors.hpp"

namespace gauge5::classify {

using arith::Int;

std::string to_string(OrderSource s) { return s == OrderSource::Exact ? "exact" : "upper_bound_from_S4"; }

Int moore_order(const lie::LieGroupSpec& G, Int c, const lie::Catalog& cat) {
    if (c < 2) throw std::invalid_argument("c must be at least 2");
    auto [fam, n] = G.catalog_key();
    if (const auto* row = cat.find(lie::RowKind::Ord, fam, n, std::nullopt)) return row->value.eval({n, {}, {}});
    std::optional<Int> ord;
    for (Int p : arith::factorize(c).primes()) {
        Int v = lie::ord_partial1_tilde(G, p, cat);
        if (ord && *ord != v)
            throw CatalogGap("order unknown for this pair: catalog rows disagree for " + G.label() + " and c=" +
                             std::to_string(c));
        ord = v;
    }
    return *ord;
}

bool same_type_moore(Int k, Int l, const lie::LieGroupSpec& G, Int c, const lie::Catalog& cat) {
    Int d = arith::gcd(moore_order(G, c, cat), c);
    return arith::gcd_class(k, d) == arith::gcd_class(l, d);
}

ClassificationReport classify_moore(const lie::LieGroupSpec& G, Int c, const lie::Catalog& cat) {
    ClassificationReport r;
    r.group = G.label();
    r.c = c;
    r.ord = moore_order(G, c, cat);
    r.d = arith::gcd(r.ord, c);
    std::map<Int, GcdClass> by_gcd;
    for (Int k = 0; k < c; ++k) {
        Int g = arith::gcd_class(k, r.d);
        auto [it, fresh] = by_gcd.try_emplace(g, GcdClass{g, k, 0});
        ++it->second.size;
    }
    for (const auto& [g, cls] : by_gcd) r.classes.push_back(cls);
    r.count_integral = arith::divisor_count(r.d);
    for (Int p : arith::factorize(c).primes()) r.count_at_p[p] = arith::nu_p(r.d, p) + 1;
    r.order_source = OrderSource::UpperBoundFromS4;
    r.trivial = r.d == 1;
    r.notes.push_back("d is computed from the S^4 order, a multiple of the P^4(c) order; counts are upper bounds");
    r.notes.push_back("equal gcd classes are a sufficient condition; distinct classes are not claimed inequivalent");
    return r;
}

ClassificationReport classify_looped_manifold(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, int i,
                                              const Localization& ctx, const lie::Catalog& cat) {
    M.validate();
    if (i == 2) {
        if (M.c % 6 == 0) throw HypothesisError("6∤c");
    } else if (i == 3) {
        if (M.c % 2 == 0) throw HypothesisError("2∤c");
        if (!M.stably_parallelizable) throw HypothesisError("M stably parallelizable");
        if (!M.single_top_cell) throw HypothesisError("single top cell");
    } else {
        throw std::invalid_argument("looped classification is available for i = 2 or 3");
    }
    if (!lie::pi4_is_trivial(G, ctx)) throw HypothesisError("π₄(G)=0", G.label() + " has π₄ = Z/2 here");
    ClassificationReport r = classify_moore(G, M.c, cat);
    if (r.trivial)
        r.notes.push_back("(ord, c) = 1: every Ω^" + std::to_string(i) + "G_k(M) is equivalent to Ω^" +
                          std::to_string(i) + "Map_0(M, G)");
    return r;
}

bool trivial_case(const lie::LieGroupSpec& G, Int p, Int c, const lie::Catalog& cat) {
    arith::require_prime(p);
    if (c < 1) throw std::invalid_argument("c must be positive");
    if (p == 2) return false;
    auto [fam, n] = G.catalog_key();
    return cat.find(lie::RowKind::Trivial, fam, n, p, c) != nullptr;
}

std::set<Int> dirichlet_oracle(Int k, Int ord, Int c, Int N, unsigned workers) {
    if (c < 2 || ord < 1 || N < 1) throw std::invalid_argument("dirichlet_oracle needs c >= 2, ord >= 1, N >= 1");
    if (workers == 0) workers = 1;
    auto scan = [=](Int lo, Int hi, std::set<Int>& out) {
        for (Int i = lo; i < hi; ++i) out.insert(arith::gcd(ord, arith::checked_add(k, arith::checked_mul(c, i))));
    };
    const Int total = N + 1;
    std::vector<std::set<Int>> parts(workers);
    std::vector<std::thread> threads;
    const Int chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        Int lo = std::min<Int>(total, chunk * w);
        Int hi = std::min<Int>(total, lo + chunk);
        if (workers == 1)
            scan(lo, hi, parts[w]);
        else
            threads.emplace_back(scan, lo, hi, std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();
    std::set<Int> out;
    for (const auto& p : parts) out.insert(p.begin(), p.end());
    return out;
}

Int dirichlet_min(Int k, Int ord, Int c, Int N) {
    if (c < 2 || ord < 1 || N < 1) throw std::invalid_argument("dirichlet_min needs c >= 2, ord >= 1, N >= 1");
    const Int floor = arith::gcd(k, arith::gcd(ord, c));
    Int best = 0;
    for (Int i = 0; i <= N; ++i) {
        Int g = arith::gcd(ord, k + c * i);
        if (best == 0 || g < best) best = g;
        if (best == floor) break;
    }
    return best;
}

std::string ClassificationReport::to_table() const {
    std::ostringstream os;
    os << "G = " << group << ", c = " << c << "\n";
    os << "ord = " << ord << " (" << to_string(order_source) << "), d = " << d << "\n";
    os << std::setw(10) << "gcd class" << std::setw(16) << "representative" << std::setw(8) << "size" << "\n";
    for (const auto& cls : classes)
        os << std::setw(10) << cls.gcd << std::setw(16) << cls.representative << std::setw(8) << cls.size << "\n";
    os << "homotopy types (integral) <= " << count_integral << "\n";
    for (const auto& [p, n] : count_at_p) os << "homotopy types at p=" << p << " <= " << n << "\n";
    if (trivial) os << "single homotopy type\n";
    for (const auto& note : notes) os << "note: " << note << "\n";
    return os.str();
}

std::string ClassificationReport::serialize() const {
    using nlohmann::json;
    std::ostringstream os;
    json counts = json::object();
    for (const auto& [p, n] : count_at_p) counts[std::to_string(p)] = n;
    os << json{{"record", "classification"}, {"group", group},       {"c", c},
               {"ord", ord},                 {"d", d},               {"count_integral", count_integral},
               {"count_at_p", counts},       {"order_source", to_string(order_source)},
               {"trivial", trivial}}
              .dump()
       << "\n";
    for (const auto& cls : classes)
        os << json{{"record", "gcd_class"}, {"gcd", cls.gcd}, {"representative", cls.representative}, {"size", cls.size}}
                  .dump()
           << "\n";
    return os.str();
}

}  // namespace gauge5::classify
