#include "sp2gz/criterion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace sp2gz {

double shapiro_alpha() {
    return std::log(2.0) / std::log(3.0);
}

Genus::Genus(unsigned genus) : g(genus) {
    if (genus == 0)
        throw std::invalid_argument("Genus: g must be at least 1");
}

CriterionWitness burgisser_criterion(std::uint64_t m, Genus genus) {
    if (m == 0)
        throw std::invalid_argument("burgisser_criterion: m must be positive");
    CriterionWitness w;
    w.m = m;
    w.genus = genus;
    w.budget = genus.budget();
    const Factorization f = factorize(m);
    const unsigned v2 =
        (!f.factors.empty() && f.factors.front().prime == 2) ? f.factors.front().exponent : 0;
    w.case_two_mod_four = (v2 == 1);
    for (const auto& [p, a] : f.factors) {
        if (w.case_two_mod_four && p == 2)
            continue;
        const std::uint64_t phi = phi_prime_power(p, a);
        w.terms.push_back({p, a, phi});
        w.phi_sum += phi;
    }
    w.order_exists = w.phi_sum <= w.budget;
    return w;
}

SolvabilityVerdict power_solvable(std::uint64_t m, Genus genus) {
    if (m <= 1)
        throw std::invalid_argument("power_solvable: m must be at least 2");
    SolvabilityVerdict v;
    v.m = m;
    v.genus = genus;
    // The first divisor > 1 found in ascending order is prime; no prime
    // <= 2g+1 divides m exactly when its smallest prime factor is larger.
    for (std::uint64_t d = 2; d <= genus.prime_cap() && d <= m; ++d) {
        if (m % d == 0) {
            v.solvable = true;
            v.witness_prime = d;
            break;
        }
    }
    return v;
}

namespace {

// Orders are 64-bit exact. Products under a phi budget of 2*128 stay below
// ~2^55, with room to spare; larger budgets could overflow silently.
void require_enumerable(Genus genus, const char* who) {
    if (genus.g > 128)
        throw std::invalid_argument(std::string(who) +
                                    ": genus above 128 would overflow 64-bit orders");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t cap) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p <= cap; ++p)
        if (is_prime(p))
            ps.push_back(p);
    return ps;
}

// Prime powers of p whose phi cost fits the budget: {(p^a, phi(p^a))}, a >= 1.
struct PowerChoice {
    std::uint64_t value;
    std::uint64_t cost;
    unsigned exponent;
};

std::vector<PowerChoice> power_choices(std::uint64_t p, std::uint64_t budget) {
    std::vector<PowerChoice> out;
    std::uint64_t value = p;
    std::uint64_t cost = p - 1;
    unsigned a = 1;
    while (cost <= budget) {
        out.push_back({value, cost, a});
        value *= p;
        cost *= p;
        ++a;
    }
    return out;
}

void enumerate_rec(const std::vector<std::uint64_t>& odd_primes, std::size_t i,
                   std::uint64_t product, std::uint64_t budget,
                   std::vector<std::uint64_t>& out) {
    if (i == odd_primes.size()) {
        out.push_back(product);
        return;
    }
    enumerate_rec(odd_primes, i + 1, product, budget, out);
    for (const auto& c : power_choices(odd_primes[i], budget))
        enumerate_rec(odd_primes, i + 1, product * c.value, budget - c.cost, out);
}

}  // namespace

OrderSet enumerate_orders(Genus genus) {
    require_enumerable(genus, "enumerate_orders");
    const std::uint64_t budget = genus.budget();
    std::vector<std::uint64_t> odd_primes = primes_up_to(genus.prime_cap());
    odd_primes.erase(odd_primes.begin());  // 2 is handled separately

    // Odd parts within the full budget.
    std::vector<std::uint64_t> odd_products;
    enumerate_rec(odd_primes, 0, 1, budget, odd_products);

    OrderSet set;
    set.genus = genus;
    for (std::uint64_t odd : odd_products) {
        set.orders.push_back(odd);      // v2 = 0
        set.orders.push_back(2 * odd);  // v2 = 1, the 2-part is free
    }
    // v2 >= 2: the 2-part costs phi(2^a) = 2^(a-1), the odd part the rest.
    for (const auto& two_part : power_choices(2, budget)) {
        if (two_part.exponent < 2)
            continue;
        std::vector<std::uint64_t> rest;
        enumerate_rec(odd_primes, 0, 1, budget - two_part.cost, rest);
        for (std::uint64_t odd : rest)
            set.orders.push_back(two_part.value * odd);
    }
    std::ranges::sort(set.orders);
    set.orders.erase(std::unique(set.orders.begin(), set.orders.end()), set.orders.end());
    return set;
}

namespace {

struct Selection {
    std::uint64_t product = 1;
    std::uint64_t phi_sum = 0;
    std::vector<PrimePower> factors;
};

// product desc, then phi_sum asc, then lexicographically smallest factors.
bool better(const Selection& a, const Selection& b) {
    if (a.product != b.product)
        return a.product > b.product;
    if (a.phi_sum != b.phi_sum)
        return a.phi_sum < b.phi_sum;
    return std::ranges::lexicographical_compare(
        a.factors, b.factors,
        [](const PrimePower& x, const PrimePower& y) {
            return x.prime != y.prime ? x.prime < y.prime : x.exponent < y.exponent;
        });
}

// Best full-cost selection over primes[i..), exploring largest products first.
void maximize_rec(const std::vector<std::uint64_t>& primes, std::size_t i,
                  std::uint64_t budget, Selection& current, Selection& best) {
    if (i == primes.size()) {
        if (better(current, best))
            best = current;
        return;
    }
    for (const auto& c : power_choices(primes[i], budget)) {
        current.product *= c.value;
        current.phi_sum += c.cost;
        current.factors.push_back({primes[i], c.exponent});
        maximize_rec(primes, i + 1, budget - c.cost, current, best);
        current.factors.pop_back();
        current.phi_sum -= c.cost;
        current.product /= c.value;
    }
    maximize_rec(primes, i + 1, budget, current, best);
}

Selection maximize(const std::vector<std::uint64_t>& primes, std::uint64_t budget) {
    Selection current, best;
    maximize_rec(primes, 0, budget, current, best);
    return best;
}

}  // namespace

MaxOrderResult max_order(Genus genus) {
    require_enumerable(genus, "max_order");
    const std::uint64_t budget = genus.budget();
    std::vector<std::uint64_t> primes = primes_up_to(genus.prime_cap());
    std::vector<std::uint64_t> odd_primes(primes.begin() + 1, primes.end());

    // Route one: every prime-power part pays its phi cost.
    Selection full = maximize(primes, budget);
    // Route two: m = 2 (mod 4), the 2^1 part is free.
    Selection odd = maximize(odd_primes, budget);
    odd.product *= 2;
    odd.factors.insert(odd.factors.begin(), {2, 1});

    // Factor lists are built with ascending primes, so both are canonical.
    const Selection& winner = better(odd, full) ? odd : full;
    MaxOrderResult r;
    r.order = winner.product;
    r.witness.factors = winner.factors;
    return r;
}

BoundReport order_bound(Genus genus) {
    BoundReport r;
    r.genus = genus;
    r.alpha = shapiro_alpha();

    const double two_g = 2.0 * genus.g;
    const double inv_alpha = std::log(3.0) / std::log(2.0);
    r.term_two_mod_four = 2.0 * std::pow(two_g, genus.g * inv_alpha);
    r.term_generic = std::pow(two_g, (genus.g + 1.0) * inv_alpha);

    r.exact = std::has_single_bit(std::uint64_t{2} * genus.g);
    if (r.exact) {
        // 2g = 2^t, so (2g)^(1/alpha) = 3^t and both terms are integers.
        const unsigned t = std::countr_zero(std::uint64_t{2} * genus.g);
        r.term_two_mod_four_exact = 2 * pow(BigInt(3), t * genus.g);
        r.term_generic_exact = pow(BigInt(3), t * (genus.g + 1));
        r.analytic_m_exact = std::max(r.term_two_mod_four_exact, r.term_generic_exact);
        r.analytic_bound_exact = std::max(BigInt(30), r.analytic_m_exact);
        r.term_two_mod_four = r.term_two_mod_four_exact.convert_to<double>();
        r.term_generic = r.term_generic_exact.convert_to<double>();
    }
    r.analytic_m = std::max(r.term_two_mod_four, r.term_generic);
    r.analytic_bound = std::max(30.0, r.analytic_m);

    MaxOrderResult mo = max_order(genus);
    r.exact_max_order = mo.order;
    r.max_order_witness = std::move(mo.witness);
    return r;
}

PhiSumBound phi_sum_lower_bounds(std::uint64_t m, Genus genus) {
    const CriterionWitness w = burgisser_criterion(m, genus);
    if (!w.order_exists)
        throw std::invalid_argument("phi_sum_lower_bounds: order m does not occur for this genus");

    PhiSumBound b;
    b.m = m;
    b.genus = genus;
    b.sum = w.phi_sum;  // terms already exclude the free 2-part in the S2 case
    if (w.case_two_mod_four) {
        b.kind = PhiSumKind::odd_part;
        b.base = m / 2;
        if (is_shapiro_exception(b.base))
            throw std::invalid_argument(
                "phi_sum_lower_bounds: odd part is a Shapiro exception, the bound is not proven");
        b.lower = std::pow(static_cast<double>(b.base), shapiro_alpha() / genus.g);
    } else {
        b.kind = PhiSumKind::full;
        b.base = m;
        if (is_shapiro_exception(m))
            throw std::invalid_argument(
                "phi_sum_lower_bounds: m is a Shapiro exception, the bound is not proven");
        b.lower = std::pow(static_cast<double>(m), shapiro_alpha() / (genus.g + 1.0));
    }
    return b;
}

}  // namespace sp2gz
