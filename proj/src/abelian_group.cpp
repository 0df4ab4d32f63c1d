#include "gauge5/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gauge5 {

using arith::Int;
using arith::PrimePower;

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

Int to_int(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad integer '" + s + "' in group");
    return std::stoll(s);
}

std::vector<std::string> split_summands(std::string_view text) {
    std::string s(text);
    const std::string oplus = "⊕";
    for (auto pos = s.find(oplus); pos != std::string::npos; pos = s.find(oplus)) s.replace(pos, oplus.size(), "+");
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto plus = s.find('+', start);
        out.push_back(trim(std::string_view(s).substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return out;
}

}  // namespace

FGAbelianGroup::FGAbelianGroup(int free_rank, std::vector<PrimePower> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    if (free_rank_ < 0) throw std::invalid_argument("free rank must be nonnegative");
    canonicalize();
}

void FGAbelianGroup::canonicalize() {
    for (const auto& t : torsion_) {
        arith::require_prime(t.p, "torsion prime");
        if (t.e < 0) throw std::invalid_argument("torsion exponent must be nonnegative");
    }
    std::erase_if(torsion_, [](const PrimePower& t) { return t.e == 0; });
    std::sort(torsion_.begin(), torsion_.end());
}

FGAbelianGroup FGAbelianGroup::free(int rank) { return FGAbelianGroup(rank, {}); }

FGAbelianGroup FGAbelianGroup::cyclic(Int n) {
    if (n < 0) throw std::invalid_argument("cyclic order must be nonnegative");
    if (n == 0) return free(1);
    return FGAbelianGroup(0, arith::factorize(n).factors());
}

FGAbelianGroup FGAbelianGroup::from_cyclics(const std::vector<Int>& orders) {
    FGAbelianGroup g;
    for (Int n : orders) {
        if (n < 1) throw std::invalid_argument("finite cyclic order must be positive");
        g += cyclic(n);
    }
    return g;
}

Int FGAbelianGroup::torsion_order() const {
    Int out = 1;
    for (const auto& t : torsion_) out = arith::checked_mul(out, t.value());
    return out;
}

std::vector<Int> FGAbelianGroup::invariant_factors() const {
    std::map<Int, std::vector<int>> by_prime;
    for (const auto& t : torsion_) by_prime[t.p].push_back(t.e);
    std::size_t len = 0;
    for (auto& [p, es] : by_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        len = std::max(len, es.size());
    }
    // largest factor first while building, reversed at the end
    std::vector<Int> out(len, 1);
    for (const auto& [p, es] : by_prime)
        for (std::size_t i = 0; i < es.size(); ++i) out[i] = arith::checked_mul(out[i], arith::checked_pow(p, es[i]));
    std::reverse(out.begin(), out.end());
    return out;
}

FGAbelianGroup FGAbelianGroup::operator+(const FGAbelianGroup& other) const {
    FGAbelianGroup out = *this;
    out += other;
    return out;
}

FGAbelianGroup& FGAbelianGroup::operator+=(const FGAbelianGroup& other) {
    free_rank_ += other.free_rank_;
    torsion_.insert(torsion_.end(), other.torsion_.begin(), other.torsion_.end());
    std::sort(torsion_.begin(), torsion_.end());
    return *this;
}

FGAbelianGroup FGAbelianGroup::times(int copies) const {
    if (copies < 0) throw std::invalid_argument("negative multiplicity");
    FGAbelianGroup out;
    for (int i = 0; i < copies; ++i) out += *this;
    return out;
}

FGAbelianGroup FGAbelianGroup::localized(const Localization& ctx) const {
    FGAbelianGroup out = *this;
    std::erase_if(out.torsion_, [&](const PrimePower& t) { return ctx.inverts(t.p); });
    return out;
}

std::string FGAbelianGroup::to_string() const {
    std::vector<std::string> parts;
    if (free_rank_ == 1) parts.push_back("Z");
    if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
    for (std::size_t i = 0; i < torsion_.size();) {
        std::size_t j = i;
        while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
        std::string z = "Z/" + std::to_string(torsion_[i].value());
        parts.push_back(j - i == 1 ? z : "(" + z + ")^" + std::to_string(j - i));
        i = j;
    }
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " ⊕ " + parts[i];
    return s;
}

std::string FGAbelianGroup::serialize() const {
    std::string s = "free=" + std::to_string(free_rank_) + ";torsion=";
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(torsion_[i].p) + "^" + std::to_string(torsion_[i].e);
    }
    return s;
}

FGAbelianGroup FGAbelianGroup::parse(std::string_view text) {
    std::string t = trim(text);
    if (t.starts_with("free=")) {
        auto semi = t.find(";torsion=");
        if (semi == std::string::npos) throw std::invalid_argument("missing torsion field in '" + t + "'");
        int rank = static_cast<int>(to_int(t.substr(5, semi - 5)));
        std::vector<PrimePower> tors;
        std::string rest = t.substr(semi + 9);
        std::size_t start = 0;
        while (start < rest.size()) {
            auto comma = rest.find(',', start);
            std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            auto caret = item.find('^');
            if (caret == std::string::npos) throw std::invalid_argument("bad torsion item '" + item + "'");
            Int p = to_int(item.substr(0, caret));
            int e = static_cast<int>(to_int(item.substr(caret + 1)));
            if (e < 1) throw std::invalid_argument("bad torsion item '" + item + "'");
            tors.push_back({p, e});
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return FGAbelianGroup(rank, std::move(tors));
    }
    FGAbelianGroup g;
    for (const auto& part : split_summands(t)) {
        if (part == "0") continue;
        if (part == "Z") {
            g += free(1);
        } else if (part.starts_with("Z^")) {
            g += free(static_cast<int>(to_int(part.substr(2))));
        } else if (part.starts_with("Z/")) {
            Int n = to_int(part.substr(2));
            if (n < 1) throw std::invalid_argument("bad summand '" + part + "'");
            g += cyclic(n);
        } else if (part.starts_with("(Z/")) {
            auto close = part.find(")^");
            if (close == std::string::npos) throw std::invalid_argument("bad summand '" + part + "'");
            Int n = to_int(part.substr(3, close - 3));
            if (n < 1) throw std::invalid_argument("bad summand '" + part + "'");
            g += cyclic(n).times(static_cast<int>(to_int(part.substr(close + 2))));
        } else {
            throw std::invalid_argument("bad summand '" + part + "'");
        }
    }
    return g;
}

}  // namespace gauge5
