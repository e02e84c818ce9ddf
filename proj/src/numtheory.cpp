#include "sp2gz/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sp2gz {

std::uint64_t Factorization::value() const {
    std::uint64_t n = 1;
    for (const auto& [p, a] : factors)
        for (unsigned i = 0; i < a; ++i)
            n *= p;
    return n;
}

std::string to_string(const Factorization& f) {
    if (f.factors.empty())
        return "1";
    std::string out;
    for (const auto& [p, a] : f.factors) {
        if (!out.empty())
            out += " * ";
        out += std::to_string(p);
        if (a > 1)
            out += "^" + std::to_string(a);
    }
    return out;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d)
            continue;
        unsigned a = 0;
        while (n % d == 0) {
            n /= d;
            ++a;
        }
        f.factors.push_back({d, a});
    }
    if (n > 1)
        f.factors.push_back({n, 1});
    return f;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2))
        if (n % d == 0)
            return false;
    return true;
}

std::uint64_t phi_prime_power(std::uint64_t p, unsigned a) {
    if (!is_prime(p))
        throw std::invalid_argument("phi_prime_power: p must be prime");
    if (a == 0)
        throw std::invalid_argument("phi_prime_power: exponent must be positive");
    std::uint64_t r = p - 1;
    for (unsigned i = 1; i < a; ++i)
        r *= p;
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t r = 1;
    for (const auto& [p, a] : factorize(n).factors) {
        r *= p - 1;
        for (unsigned i = 1; i < a; ++i)
            r *= p;
    }
    return r;
}

bool is_shapiro_exception(std::uint64_t m) {
    return std::ranges::find(shapiro_exceptions, m) != shapiro_exceptions.end();
}

ShapiroVerdict shapiro_check(std::uint64_t m) {
    if (m == 0)
        throw std::invalid_argument("shapiro_check: m must be positive");
    const std::uint64_t phi_m = euler_phi(m);

    // phi(m) > m^alpha  <=>  ln(phi(m)) ln(3) > ln(m) ln(2)
    const double lhs = std::log(static_cast<double>(phi_m)) * std::log(3.0);
    const double rhs = std::log(static_cast<double>(m)) * std::log(2.0);
    bool strictly_greater;
    const double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1.0});
    if (std::fabs(lhs - rhs) < 1e-9 * scale) {
        // Knife edge (m = 3 attains exact equality): redo at 50 digits.
        using F50 = boost::multiprecision::cpp_bin_float_50;
        const F50 hi_lhs = log(F50(phi_m)) * log(F50(3));
        const F50 hi_rhs = log(F50(m)) * log(F50(2));
        strictly_greater = hi_lhs > hi_rhs;
    } else {
        strictly_greater = lhs > rhs;
    }
    return {m, phi_m, is_shapiro_exception(m), strictly_greater};
}

}  // namespace sp2gz
