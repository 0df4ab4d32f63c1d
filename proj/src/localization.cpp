#include "gauge5/localization.hpp"

#include <algorithm>
#include <stdexcept>

namespace gauge5 {

using arith::Int;

namespace {

std::vector<Int> prime_support(const std::vector<Int>& numbers) {
    std::vector<Int> out;
    for (Int n : numbers) {
        if (n == 0) throw std::invalid_argument("cannot invert the primes of 0");
        for (Int p : arith::factorize(n < 0 ? -n : n).primes()) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in localization");
    std::size_t used = 0;
    Int v = std::stoll(std::string(s), &used);
    if (used != s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "' in localization");
    return v;
}

}  // namespace

Localization Localization::integral() { return {}; }

Localization Localization::at_prime(Int p) {
    arith::require_prime(p);
    Localization l;
    l.kind_ = Kind::AtPrime;
    l.prime_ = p;
    return l;
}

Localization Localization::away_from(const std::vector<Int>& numbers) {
    Localization l;
    l.inverted_ = prime_support(numbers);
    l.kind_ = l.inverted_.empty() ? Kind::Integral : Kind::AwayFrom;
    return l;
}

Localization Localization::rational() {
    Localization l;
    l.kind_ = Kind::Rational;
    return l;
}

Localization Localization::parse(std::string_view text) {
    if (text == "integral") return integral();
    if (text == "rational") return rational();
    if (text.starts_with("at:")) return at_prime(parse_int(text.substr(3)));
    if (text.starts_with("away:")) {
        std::vector<Int> nums;
        std::string_view rest = text.substr(5);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            nums.push_back(parse_int(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return away_from(nums);
    }
    throw std::invalid_argument("unknown localization '" + std::string(text) + "'");
}

bool Localization::inverts(Int prime) const {
    switch (kind_) {
        case Kind::Integral: return false;
        case Kind::AtPrime: return prime != prime_;
        case Kind::AwayFrom: return std::binary_search(inverted_.begin(), inverted_.end(), prime);
        case Kind::Rational: return true;
    }
    return false;
}

bool Localization::inverts_all_primes_of(Int n) const {
    if (n < 1) throw std::invalid_argument("inverts_all_primes_of requires n >= 1");
    for (Int p : arith::factorize(n).primes())
        if (!inverts(p)) return false;
    return true;
}

Localization Localization::with_inverted(const std::vector<Int>& numbers) const {
    auto extra = prime_support(numbers);
    switch (kind_) {
        case Kind::Integral: return away_from(extra);
        case Kind::AwayFrom: {
            auto all = inverted_;
            all.insert(all.end(), extra.begin(), extra.end());
            return away_from(all);
        }
        case Kind::AtPrime:
            return std::binary_search(extra.begin(), extra.end(), prime_) ? rational() : *this;
        case Kind::Rational: return *this;
    }
    return *this;
}

std::string Localization::to_string() const {
    switch (kind_) {
        case Kind::Integral: return "integral";
        case Kind::AtPrime: return "at " + std::to_string(prime_);
        case Kind::Rational: return "rational";
        case Kind::AwayFrom: {
            std::string s = "away from {";
            for (std::size_t i = 0; i < inverted_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(inverted_[i]);
            }
            return s + "}";
        }
    }
    return {};
}

std::string Localization::serialize() const {
    switch (kind_) {
        case Kind::Integral: return "integral";
        case Kind::AtPrime: return "at:" + std::to_string(prime_);
        case Kind::Rational: return "rational";
        case Kind::AwayFrom: {
            std::string s = "away:";
            for (std::size_t i = 0; i < inverted_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(inverted_[i]);
            }
            return s;
        }
    }
    return {};
}

}  // namespace gauge5
