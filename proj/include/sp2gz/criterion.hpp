#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sp2gz/numtheory.hpp"

namespace sp2gz {

using BigInt = boost::multiprecision::cpp_int;

// alpha = log 2 / log 3, the exponent in Shapiro's inequality.
double shapiro_alpha();

// Genus g >= 1 of Sp(2g,Z). Matrices are 2g x 2g and the phi budget is 2g.
struct Genus {
    explicit Genus(unsigned genus);

    unsigned g;
    unsigned dim() const { return 2 * g; }
    unsigned budget() const { return 2 * g; }
    // Primes dividing a torsion order never exceed 2g+1.
    std::uint64_t prime_cap() const { return 2 * std::uint64_t{g} + 1; }

    bool operator==(const Genus&) const = default;
};

struct CriterionTerm {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t phi_value = 0;

    bool operator==(const CriterionTerm&) const = default;
};

// The phi-budget ledger deciding whether order m occurs in Sp(2g,Z).
struct CriterionWitness {
    std::uint64_t m = 0;
    Genus genus{1};
    bool case_two_mod_four = false;    // v2(m) == 1; the 2-part is then cost-free
    std::vector<CriterionTerm> terms;  // excludes the prime 2 exactly in that case
    std::uint64_t phi_sum = 0;
    unsigned budget = 0;               // 2g
    bool order_exists = false;         // phi_sum <= budget
};

// Buergisser's criterion: an element of order m exists in Sp(2g,Z) iff the
// sum of phi over the prime-power parts of m, skipping the 2^1 part when
// m = 2 (mod 4), is at most 2g. m = 1 passes with an empty ledger.
CriterionWitness burgisser_criterion(std::uint64_t m, Genus genus);

struct SolvabilityVerdict {
    std::uint64_t m = 0;
    Genus genus{1};
    bool solvable = false;
    std::optional<std::uint64_t> witness_prime;  // smallest prime factor <= 2g+1
};

// A^m = I has a nontrivial solution iff m has a prime factor <= 2g+1.
// Rejects m <= 1.
SolvabilityVerdict power_solvable(std::uint64_t m, Genus genus);

struct OrderSet {
    Genus genus{1};
    std::vector<std::uint64_t> orders;  // ascending, contains 1
};

// All m passing the criterion, by depth-first search over prime-power
// choices for primes p <= 2g+1 with phi(p^a) within the remaining budget;
// the 2^1 choice costs nothing.
OrderSet enumerate_orders(Genus genus);

struct MaxOrderResult {
    std::uint64_t order = 1;
    Factorization witness;
};

// Largest m passing the criterion: the better of the best full-cost
// selection and twice the best selection over odd primes (the free 2^1 of
// the m = 2 (mod 4) case). Ties prefer the smaller phi-sum, then the
// lexicographically smallest factor list.
MaxOrderResult max_order(Genus genus);

// Analytic bound max{30, M}, M = max{2(2g)^(g/alpha), (2g)^((g+1)/alpha)},
// next to the exact maximal order. When 2g is a power of two both M terms
// are exact powers of 3 (since (2^t)^(1/alpha) = 3^t) and the *_exact
// fields hold them as integers.
struct BoundReport {
    Genus genus{1};
    double alpha = 0.0;
    double term_two_mod_four = 0.0;  // 2 (2g)^(g/alpha)
    double term_generic = 0.0;       // (2g)^((g+1)/alpha)
    double analytic_m = 0.0;         // max of the two
    double analytic_bound = 0.0;     // max(30, M)
    bool exact = false;              // 2g is a power of two
    BigInt term_two_mod_four_exact;
    BigInt term_generic_exact;
    BigInt analytic_m_exact;
    BigInt analytic_bound_exact;
    std::uint64_t exact_max_order = 1;
    Factorization max_order_witness;
};

BoundReport order_bound(Genus genus);

enum class PhiSumKind {
    full,      // S1: every prime-power part of m
    odd_part,  // S2: parts of the odd part n, m = 2 (mod 4)
};

struct PhiSumBound {
    std::uint64_t m = 0;
    Genus genus{1};
    PhiSumKind kind = PhiSumKind::full;
    std::uint64_t sum = 0;   // S1 or S2
    std::uint64_t base = 0;  // m, or its odd part n
    double lower = 0.0;      // base^(alpha/(g+1)) resp. base^(alpha/g)
};

// The proven lower bound for the applicable phi-sum: S1 > m^(alpha/(g+1))
// when m != 2 (mod 4), S2 > n^(alpha/g) when m = 2 (mod 4), n = m/2.
// Requires burgisser_criterion(m, genus).order_exists and Shapiro's
// inequality to apply to the sum's base (m resp. n not exceptional).
PhiSumBound phi_sum_lower_bounds(std::uint64_t m, Genus genus);

}  // namespace sp2gz
