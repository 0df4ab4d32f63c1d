#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gauge5::arith {

using Int = std::int64_t;

/// p^e with p prime and e >= 0.
struct PrimePower {
    Int p = 2;
    int e = 0;

    Int value() const;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer, primes strictly ascending and
/// every exponent positive. The factorization of 1 is empty.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors);

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::vector<Int> primes() const;
    Int value() const;
    bool empty() const noexcept { return factors_.empty(); }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

// Overflow-checked primitives. All throw std::overflow_error instead of
// wrapping.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_pow(Int base, int exp);

bool is_prime(Int n);
void require_prime(Int p, const char* what = "p");

/// Trial-division factorization; m >= 1.
Factorization factorize(Int m);

/// Largest e with p^e | m.
int nu_p(Int m, Int p);

/// Sum of the base-p digits of n.
Int digit_sum(Int n, Int p);

/// nu_p(m!) = (m - s_p(m)) / (p - 1).
Int legendre_valuation(Int m, Int p);

/// Number of positive divisors: (e1+1)(e2+1)...(er+1).
Int divisor_count(Int m);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

/// Representative of k in [0, d).
Int mod_floor(Int k, Int d);

/// gcd(k mod d, d), with the zero class mapped to d.
Int gcd_class(Int k, Int d);

/// All primes q with lo <= q <= hi, ascending.
std::vector<Int> primes_between(Int lo, Int hi);

std::string to_string(const Factorization& f);

}  // namespace gauge5::arith
