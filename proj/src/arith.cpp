#include "gauge5/arith.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gauge5::arith {

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in addition");
    return out;
}

Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiplication");
    return out;
}

Int checked_pow(Int base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Int out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

Int PrimePower::value() const { return checked_pow(p, e); }

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (!is_prime(factors_[i].p)) throw std::invalid_argument("factorization base is not prime");
        if (factors_[i].e <= 0) throw std::invalid_argument("factorization exponent must be positive");
        if (i > 0 && factors_[i - 1].p >= factors_[i].p)
            throw std::invalid_argument("factorization primes must be strictly ascending");
    }
}

std::vector<Int> Factorization::primes() const {
    std::vector<Int> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.p);
    return out;
}

Int Factorization::value() const {
    Int out = 1;
    for (const auto& f : factors_) out = checked_mul(out, f.value());
    return out;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int i = 5; i <= n / i; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

void require_prime(Int p, const char* what) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(what) + " = " + std::to_string(p) + " is not prime");
}

Factorization factorize(Int m) {
    if (m < 1) throw std::invalid_argument("factorization requires a positive integer");
    std::vector<PrimePower> out;
    for (Int q = 2; q <= m / q; q += (q == 2 ? 1 : 2)) {
        if (m % q != 0) continue;
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        out.push_back({q, e});
    }
    if (m > 1) out.push_back({m, 1});
    return Factorization(std::move(out));
}

int nu_p(Int m, Int p) {
    require_prime(p);
    if (m == 0) throw std::domain_error("valuation undefined for 0");
    if (m < 0) throw std::invalid_argument("valuation requires a positive integer");
    int e = 0;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    return e;
}

Int digit_sum(Int n, Int p) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("digit sum requires n >= 0");
    Int s = 0;
    for (; n > 0; n /= p) s += n % p;
    return s;
}

Int legendre_valuation(Int m, Int p) {
    if (m < 0) throw std::invalid_argument("factorial valuation requires m >= 0");
    return (m - digit_sum(m, p)) / (p - 1);
}

Int divisor_count(Int m) {
    if (m == 0) throw std::domain_error("divisor count undefined for 0");
    if (m < 0) m = -m;
    Int out = 1;
    auto fac = factorize(m);
    for (const auto& f : fac.factors()) out = checked_mul(out, f.e + 1);
    return out;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    Int x = a / gcd(a, b);
    return checked_mul(x < 0 ? -x : x, b < 0 ? -b : b);
}

Int mod_floor(Int k, Int d) {
    if (d <= 0) throw std::invalid_argument("modulus must be positive");
    Int r = k % d;
    return r < 0 ? r + d : r;
}

Int gcd_class(Int k, Int d) {
    if (d == 0) throw std::domain_error("gcd class undefined for d = 0");
    if (d < 0) throw std::invalid_argument("gcd class requires d >= 1");
    Int r = mod_floor(k, d);
    return r == 0 ? d : gcd(r, d);
}

std::vector<Int> primes_between(Int lo, Int hi) {
    std::vector<Int> out;
    for (Int q = lo < 2 ? 2 : lo; q <= hi; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

std::string to_string(const Factorization& f) {
    if (f.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& pp : f.factors()) {
        if (!first) os << '*';
        first = false;
        os << pp.p;
        if (pp.e != 1) os << '^' << pp.e;
    }
    return os.str();
}

}  // namespace gauge5::arith
