#include "gauge5/exponents.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "gauge5/errors.hpp"

namespace gauge5::exponents {

using arith::Int;
using lie::Family;

namespace {

void require_odd_prime(Int p) {
    arith::require_prime(p);
    if (p == 2) throw std::invalid_argument("exponent bounds are stated for odd primes only");
}

int nu_of_c(Int c, Int p) {
    if (c < 1) throw std::invalid_argument("c must be positive");
    return arith::nu_p(c, p);
}

}  // namespace

std::string to_string(Route r) {
    switch (r) {
        case Route::Regular: return "regular";
        case Route::Theriault: return "theriault";
        case Route::ClosedForm: return "closed_form";
        case Route::MooreFiber: return "moore_fiber";
    }
    return "?";
}

std::string ExponentBound::to_string() const {
    std::ostringstream os;
    os << "p=" << p << " exponent=" << exponent << " route=" << exponents::to_string(route);
    for (const auto& a : assumptions) os << " [" << a << "]";
    return os.str();
}

void check_manifold(const spaces::ManifoldSpec& M) {
    M.validate();
    if (M.c % 6 != 0) return;
    if (M.c % 2 != 0 && M.stably_parallelizable) return;
    throw HypothesisError("6∤c, or 2∤c with M stably parallelizable");
}

ExponentBound exp_bound_regular_nu(const lie::LieGroupSpec& G, Int p, int nu, const lie::Catalog& cat) {
    require_odd_prime(p);
    if (nu < 0) throw std::invalid_argument("nu_p(c) must be nonnegative");
    if (!lie::is_p_regular(G, p, cat))
        throw HypothesisError(G.label() + " " + std::to_string(p) + "-regular", "use the theriault route");
    int v = arith::nu_p(lie::ord_partial1_tilde(G, p, cat), p);
    int e = v + std::max(lie::l_of(G), nu);
    ExponentBound b{p, e, Route::Regular, {G.label() + " is " + std::to_string(p) + "-regular"}};
    if (G.family() == Family::SU && G.n() <= 3) {
        b.exponent += 1;
        b.assumptions.push_back("extra factor p for SU(2), SU(3)");
    }
    return b;
}

ExponentBound exp_bound_regular(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, Int p, Int /*k*/,
                                const lie::Catalog& cat) {
    check_manifold(M);
    require_odd_prime(p);
    auto b = exp_bound_regular_nu(G, p, nu_of_c(M.c, p), cat);
    b.assumptions.push_back("c=" + std::to_string(M.c));
    return b;
}

ExponentBound exp_bound_theriault_nu(const lie::LieGroupSpec& G, Int p, int nu, const lie::Catalog& cat) {
    require_odd_prime(p);
    if (nu < 0) throw std::invalid_argument("nu_p(c) must be nonnegative");
    int r = lie::r_of(G, p, cat);
    int v = arith::nu_p(lie::ord_partial1_tilde(G, p, cat), p);
    int e = r + v + std::max(r + lie::l_of(G), nu);
    return {p, e, Route::Theriault, {G.label() + " in the low rank range at p=" + std::to_string(p)}};
}

ExponentBound exp_bound_theriault(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, Int p, Int /*k*/,
                                  const lie::Catalog& cat) {
    check_manifold(M);
    require_odd_prime(p);
    auto b = exp_bound_theriault_nu(G, p, nu_of_c(M.c, p), cat);
    b.assumptions.push_back("c=" + std::to_string(M.c));
    return b;
}

int closed_form_value(const lie::LieGroupSpec& G, Int p, int nu) {
    if (G.is_exceptional())
        throw std::invalid_argument("closed forms cover SU, Sp and Spin; use the exceptional table for " + G.label());
    const int P = static_cast<int>(p);
    switch (G.family()) {
        case Family::SU: return std::max(G.n() + 2 * P - 5, nu + P - 1);
        case Family::Sp: return std::max(2 * G.n() + 2 * P - 6, nu + P - 2);
        default: break;
    }
    if (G.n() % 2) return std::max(2 * ((G.n() - 1) / 2) + 2 * P - 6, nu + P - 2);
    return std::max(2 * (G.n() / 2) + 2 * P - 8, nu + P - 2);
}

ExponentBound exp_bound_closed_form_nu(const lie::LieGroupSpec& G, Int p, int nu, const lie::Catalog& cat) {
    require_odd_prime(p);
    if (nu < 0) throw std::invalid_argument("nu_p(c) must be nonnegative");
    int e = closed_form_value(G, p, nu);
    if (!lie::in_theriault_range(G, p, cat))
        throw HypothesisError(G.label() + " in the low rank range at p=" + std::to_string(p));
    return {p, e, Route::ClosedForm, {G.label() + " in the low rank range at p=" + std::to_string(p)}};
}

ExponentBound exp_bound_closed_form(const lie::LieGroupSpec& G, Int p, Int c, const lie::Catalog& cat) {
    require_odd_prime(p);
    return exp_bound_closed_form_nu(G, p, nu_of_c(c, p), cat);
}

ExponentBound exp_moore_fiber(Int c, Int p) {
    require_odd_prime(p);
    return {p, nu_of_c(c, p), Route::MooreFiber, {}};
}

CombinedBound exp_bound_nu(const lie::LieGroupSpec& G, Int p, int nu, const lie::Catalog& cat) {
    require_odd_prime(p);
    CombinedBound out;
    if (lie::is_p_regular(G, p, cat)) out.routes.push_back(exp_bound_regular_nu(G, p, nu, cat));
    if (lie::in_theriault_range(G, p, cat)) out.routes.push_back(exp_bound_theriault_nu(G, p, nu, cat));
    if (out.routes.empty())
        throw HypothesisError(G.label() + " " + std::to_string(p) + "-regular or in the low rank range");
    out.best = *std::min_element(out.routes.begin(), out.routes.end(),
                                 [](const ExponentBound& a, const ExponentBound& b) { return a.exponent < b.exponent; });
    return out;
}

CombinedBound exp_bound(const spaces::ManifoldSpec& M, const lie::LieGroupSpec& G, Int p, Int /*k*/,
                        const lie::Catalog& cat) {
    check_manifold(M);
    require_odd_prime(p);
    auto out = exp_bound_nu(G, p, nu_of_c(M.c, p), cat);
    for (auto& r : out.routes) r.assumptions.push_back("c=" + std::to_string(M.c));
    out.best.assumptions.push_back("c=" + std::to_string(M.c));
    return out;
}

std::string ExceptionalRow::prime_text() const { return (tail ? "p≥" : "p=") + std::to_string(p); }

std::string ExceptionalRow::expression_text() const {
    std::string rhs = shift == 0 ? "ν_p(c)" : "ν_p(c)+" + std::to_string(shift);
    return "max(" + std::to_string(constant) + ", " + rhs + ")";
}

std::vector<ExceptionalRow> exceptional_table(std::optional<Int> p, const lie::Catalog& cat) {
    if (p) require_odd_prime(*p);
    constexpr Int kSearchLimit = 1000;
    std::vector<ExceptionalRow> out;
    for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8}) {
        lie::LieGroupSpec G(f);
        const int l = lie::l_of(G);
        std::vector<ExceptionalRow> rows;
        Int last_deviation = 0;
        for (Int q : arith::primes_between(3, kSearchLimit)) {
            if (!lie::in_theriault_range(G, q, cat)) continue;
            int r = lie::r_of(G, q, cat);
            int v = arith::nu_p(lie::ord_partial1_tilde(G, q, cat), q);
            ExceptionalRow row{G, q, false, 2 * r + v + l, r + v};
            rows.push_back(row);
            if (row.constant != l || row.shift != 0) last_deviation = q;
        }
        if (rows.empty()) continue;
        std::vector<ExceptionalRow> kept;
        for (const auto& row : rows)
            if (row.p <= last_deviation) kept.push_back(row);
        for (const auto& row : rows) {
            if (row.p > last_deviation) {
                kept.push_back({G, row.p, true, l, 0});
                break;
            }
        }
        for (const auto& row : kept)
            if (!p || row.covers(*p)) out.push_back(row);
    }
    return out;
}

std::string render_exceptional_table(const std::vector<ExceptionalRow>& rows) {
    std::ostringstream os;
    os << std::left << std::setw(6) << "G" << std::setw(9) << "p" << "exponent of p in the bound\n";
    std::string prev;
    for (const auto& row : rows) {
        std::string label = row.group.label();
        os << std::left << std::setw(6) << (label == prev ? "" : label);
        // setw counts bytes; pad the prime column by hand because of "≥"
        std::string pt = row.prime_text();
        int visible = static_cast<int>(pt.size()) - (row.tail ? 2 : 0);
        os << pt << std::string(std::max(1, 9 - visible), ' ') << row.expression_text() << "\n";
        prev = label;
    }
    return os.str();
}

}  // namespace gauge5::exponents
