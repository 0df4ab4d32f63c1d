#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gauge5/arith.hpp"

namespace gauge5 {

/// Where a statement is read: integrally, at a single prime, away from a
/// finite set of primes, or rationally.
class Localization {
public:
    enum class Kind { Integral, AtPrime, AwayFrom, Rational };

    static Localization integral();
    static Localization at_prime(arith::Int p);
    /// Inverts every prime dividing some element of `numbers`.
    static Localization away_from(const std::vector<arith::Int>& numbers);
    static Localization rational();

    /// Parses "integral", "rational", "at:P" or "away:A,B,...".
    static Localization parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    arith::Int prime() const noexcept { return prime_; }
    const std::vector<arith::Int>& inverted() const noexcept { return inverted_; }

    bool inverts(arith::Int prime) const;
    /// True when every prime factor of n is inverted (n >= 1).
    bool inverts_all_primes_of(arith::Int n) const;

    /// The localization obtained by additionally inverting the primes of `numbers`.
    Localization with_inverted(const std::vector<arith::Int>& numbers) const;

    std::string to_string() const;
    /// Inverse of parse().
    std::string serialize() const;

    friend bool operator==(const Localization&, const Localization&) = default;

private:
    Kind kind_ = Kind::Integral;
    arith::Int prime_ = 0;
    std::vector<arith::Int> inverted_;  // sorted primes, AwayFrom only
};

}  // namespace gauge5
