#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sp2gz {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition with strictly increasing primes.
// The empty list represents n = 1.
struct Factorization {
    std::vector<PrimePower> factors;

    std::uint64_t value() const;
    bool operator==(const Factorization&) const = default;
};

// Renders "2^2 * 3", or "1" for the empty factorization.
std::string to_string(const Factorization& f);

// Deterministic trial division up to sqrt(n). Rejects n = 0.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

// phi(p^a) = p^(a-1) (p-1). Rejects non-prime p and a = 0.
std::uint64_t phi_prime_power(std::uint64_t p, unsigned a);

// Euler's totient, multiplicative over the prime-power parts. Rejects n = 0.
std::uint64_t euler_phi(std::uint64_t n);

// The nine values where phi(m) > m^(log2/log3) fails.
inline constexpr std::array<std::uint64_t, 9> shapiro_exceptions = {1, 2, 3, 4, 6, 10, 12, 18, 30};

bool is_shapiro_exception(std::uint64_t m);

struct ShapiroVerdict {
    std::uint64_t m = 0;
    std::uint64_t phi_m = 0;
    bool exceptional = false;       // m is one of the nine exceptions
    bool strictly_greater = false;  // phi(m) > m^(log2/log3)
};

// Decides phi(m) > m^alpha, alpha = log2/log3, by comparing
// ln(phi(m)) ln(3) with ln(m) ln(2). Double precision decides unless the
// relative difference drops below 1e-9; then the comparison is redone with
// 50 decimal digits. Exact equality (m = 3) counts as not strictly greater.
ShapiroVerdict shapiro_check(std::uint64_t m);

}  // namespace sp2gz
