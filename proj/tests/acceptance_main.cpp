// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <sp2gz/bender.hpp>
#include <sp2gz/criterion.hpp>
#include <sp2gz/matrix.hpp>
#include <sp2gz/numtheory.hpp>
#include <sp2gz/scan.hpp>

namespace {

int g_failures = 0;

// Runs one criterion, times it, and prints exactly one line.
template <typename F>
void criterion(int index, const std::string& title, double limit_ms, F&& body) {
    std::string why;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(why);
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const bool in_time = ms <= limit_ms;
    const bool pass = ok && in_time;
    if (!pass)
        ++g_failures;
    std::printf("[%s] criterion %d: %s (%.0f ms, limit %.0f ms)\n",
                pass ? "PASS" : "FAIL", index, title.c_str(), ms, limit_ms);
    if (!ok && !why.empty())
        std::printf("       %s\n", why.c_str());
    if (ok && !in_time)
        std::printf("       exceeded the time limit\n");
}

std::optional<std::string> run_cli_capture(const std::string& args) {
    const std::string cmd = std::string(SP2GZ_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return std::nullopt;
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
        return std::nullopt;
    return out;
}

bool criterion_orders_genus_two(std::string& why) {
    const std::vector<std::uint64_t> expected = {1, 2, 3, 4, 5, 6, 8, 10, 12};
    const auto set = sp2gz::enumerate_orders(sp2gz::Genus(2));
    if (set.orders != expected) {
        why = "enumerate_orders(genus 2) returned the wrong set";
        return false;
    }
    const auto out = run_cli_capture("orders --genus 2");
    if (!out) {
        why = "CLI `orders --genus 2` did not exit cleanly";
        return false;
    }
    if (*out != "1 2 3 4 5 6 8 10 12\n") {
        why = "CLI printed: " + *out;
        return false;
    }
    return true;
}

bool criterion_presentation(std::string& why) {
    if (!sp2gz::is_symplectic(sp2gz::bender::generator_k())) {
        why = "K is not symplectic";
        return false;
    }
    if (!sp2gz::is_symplectic(sp2gz::bender::generator_l())) {
        why = "L is not symplectic";
        return false;
    }
    const auto relations = sp2gz::bender::verify_relations();
    if (relations.size() != 8) {
        why = "expected eight relations, got " + std::to_string(relations.size());
        return false;
    }
    for (const auto& rel : relations) {
        if (!rel.holds) {
            why = std::string("relation (") + rel.label + ") " + rel.left +
                  " = " + rel.right + " fails";
            return false;
        }
    }
    return true;
}

bool criterion_order_table(std::string& why) {
    const struct {
        const char* word;
        std::uint64_t order;
    } expected[] = {
        {"K", 2},      {"L", 12},     {"L^2", 6},    {"L^3", 4},
        {"L^4", 3},    {"K5", 10},    {"(K5)^2", 5}, {"(K5)^5", 2},
        {"6H", 4},     {"9H", 8},     {"H", 2},
    };
    const auto table = sp2gz::bender::order_table();
    if (table.size() != std::size(expected)) {
        why = "order table has " + std::to_string(table.size()) + " rows";
        return false;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& row = table[i];
        if (row.word != expected[i].word || row.claimed != expected[i].order ||
            !row.verified || *row.verified != expected[i].order) {
            why = "row for " + row.word + " does not verify";
            return false;
        }
        const auto direct =
            sp2gz::matrix_order(sp2gz::bender::evaluate(row.word), 12);
        if (!direct || *direct != expected[i].order) {
            why = "direct matrix order of " + row.word + " disagrees";
            return false;
        }
    }
    // (L^9 H)^4 is not the identity, yet equals (K L^5)^5 (both are -I).
    const auto nine_h_4 = sp2gz::mat_pow(sp2gz::bender::evaluate("9H"), 4);
    if (nine_h_4.is_identity()) {
        why = "(9H)^4 collapsed to the identity";
        return false;
    }
    if (!(nine_h_4 == sp2gz::mat_pow(sp2gz::bender::evaluate("K5"), 5))) {
        why = "(9H)^4 != (K5)^5";
        return false;
    }
    return true;
}

bool criterion_triple_equivalence(std::string& why) {
    for (unsigned g = 1; g <= 6; ++g) {
        const sp2gz::Genus genus(g);
        for (std::uint64_t m = 2; m <= 2000; ++m) {
            const bool solvable = sp2gz::power_solvable(m, genus).solvable;

            bool small_prime = false;
            for (const auto& pp : sp2gz::factorize(m).factors)
                small_prime = small_prime || pp.prime <= genus.prime_cap();

            bool divisor_passes = false;
            for (std::uint64_t d = 2; d <= m && !divisor_passes; ++d)
                if (m % d == 0)
                    divisor_passes = sp2gz::burgisser_criterion(d, genus).order_exists;

            if (solvable != small_prime || solvable != divisor_passes) {
                why = "equivalence breaks at m = " + std::to_string(m) +
                      ", genus " + std::to_string(g);
                return false;
            }
        }
    }
    return true;
}

bool criterion_bound_dominates(std::string& why) {
    for (unsigned g = 1; g <= 20; ++g) {
        const auto bound = sp2gz::order_bound(sp2gz::Genus(g));
        const auto maximal = sp2gz::max_order(sp2gz::Genus(g));
        if (static_cast<double>(maximal.order) > bound.analytic_bound) {
            why = "max order exceeds the analytic bound at genus " + std::to_string(g);
            return false;
        }
        if (bound.exact &&
            sp2gz::BigInt(maximal.order) > bound.analytic_bound_exact) {
            why = "max order exceeds the exact bound at genus " + std::to_string(g);
            return false;
        }
    }
    const auto b1 = sp2gz::order_bound(sp2gz::Genus(1));
    if (!b1.exact || b1.analytic_m_exact != 9 || b1.analytic_bound_exact != 30) {
        why = "genus 1: expected M = 9 and bound 30, exactly";
        return false;
    }
    const auto b2 = sp2gz::order_bound(sp2gz::Genus(2));
    if (!b2.exact || b2.analytic_m_exact != 729 || b2.analytic_bound_exact != 729 ||
        b2.term_two_mod_four_exact != 162) {
        why = "genus 2: expected exact M = 729 via the power-of-3 fast path";
        return false;
    }
    return true;
}

bool criterion_shapiro_scan(std::string& why) {
    const auto hits = sp2gz::scan::shapiro_non_strict(1, 100000);
    const std::vector<std::uint64_t> nine(sp2gz::shapiro_exceptions.begin(),
                                          sp2gz::shapiro_exceptions.end());
    if (hits != nine) {
        why = "scan found " + std::to_string(hits.size()) +
              " non-strict m, expected the nine exceptions";
        return false;
    }
    for (const auto m : nine) {
        const auto v = sp2gz::shapiro_check(m);
        if (!v.exceptional || v.strictly_greater) {
            why = "exception m = " + std::to_string(m) + " misclassified";
            return false;
        }
    }
    const auto at_three = sp2gz::shapiro_check(3);
    if (at_three.phi_m != 2 || at_three.strictly_greater) {
        why = "m = 3 must sit exactly on the boundary (phi(3) = 2 = 3^alpha)";
        return false;
    }
    return true;
}

bool criterion_phi_sum_lower_bounds(std::string& why) {
    std::size_t applicable = 0;
    for (unsigned g = 1; g <= 6; ++g) {
        const sp2gz::Genus genus(g);
        for (const auto m : sp2gz::enumerate_orders(genus).orders) {
            const std::uint64_t base = (m % 4 == 2) ? m / 2 : m;
            if (sp2gz::is_shapiro_exception(base))
                continue;
            const auto bound = sp2gz::phi_sum_lower_bounds(m, genus);
            ++applicable;
            if (!(static_cast<double>(bound.sum) > bound.lower)) {
                why = "phi-sum bound fails at m = " + std::to_string(m) +
                      ", genus " + std::to_string(g);
                return false;
            }
        }
    }
    if (applicable != 103) {
        why = "expected 103 applicable cases, saw " + std::to_string(applicable);
        return false;
    }
    return true;
}

bool criterion_infinite_and_random(std::string& why) {
    const auto cap = sp2gz::max_order(sp2gz::Genus(2)).order;
    if (cap != 12) {
        why = "cap should equal the genus-2 maximal order 12";
        return false;
    }
    const auto unipotent = sp2gz::IntMatrix::from_rows({{1, 0, 1, 0},
                                                        {0, 1, 0, 0},
                                                        {0, 0, 1, 0},
                                                        {0, 0, 0, 1}});
    if (!sp2gz::is_symplectic(unipotent)) {
        why = "the unipotent block matrix should be symplectic";
        return false;
    }
    if (sp2gz::matrix_order(unipotent, cap).has_value()) {
        why = "the unipotent matrix was reported as finite order";
        return false;
    }

    const std::vector<std::uint64_t> genus_two_orders = {1, 2, 3, 4,  5,
                                                         6, 8, 10, 12};
    const std::vector<std::string> atoms = {
        "K", "H", "1", "2", "3", "4", "5", "6", "7",
        "8", "9", "w_alpha", "w_beta", "(K5)^2", "L^-1",
    };
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    std::uniform_int_distribution<int> length(1, 10);
    for (int trial = 0; trial < 150; ++trial) {
        std::string text;
        const int len = length(rng);
        for (int i = 0; i < len; ++i) {
            if (i > 0)
                text += ' ';  // keep adjacent numerals from merging
            text += atoms[pick(rng)];
        }
        const auto matrix = sp2gz::bender::evaluate(text);
        if (!sp2gz::is_symplectic(matrix)) {
            why = "word " + text + " evaluated to a non-symplectic matrix";
            return false;
        }
        const auto order = sp2gz::matrix_order(matrix, cap);
        if (order && !std::binary_search(genus_two_orders.begin(),
                                         genus_two_orders.end(), *order)) {
            why = "word " + text + " has order " + std::to_string(*order) +
                  " outside the genus-2 spectrum";
            return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion(1, "torsion orders in Sp(4,Z) are exactly {1,2,3,4,5,6,8,10,12}",
              1000, criterion_orders_genus_two);
    criterion(2, "both generators are symplectic and all eight relations hold",
              1000, criterion_presentation);
    criterion(3, "the order table verifies and (9H)^4 = (K5)^5 = -I",
              1000, criterion_order_table);
    criterion(4, "solvability = small prime factor = admissible divisor, m <= 2000, genus <= 6",
              30000, criterion_triple_equivalence);
    criterion(5, "analytic bound dominates the exact maximum for genus 1..20",
              10000, criterion_bound_dominates);
    criterion(6, "phi(m) > m^alpha on [1, 100000] except the nine known m",
              30000, criterion_shapiro_scan);
    criterion(7, "phi-sum lower bounds hold on all 103 applicable cases",
              5000, criterion_phi_sum_lower_bounds);
    criterion(8, "unipotent block matrix is infinite; random words stay in the spectrum",
              5000, criterion_infinite_and_random);
    if (g_failures == 0) {
        std::printf("acceptance: 8/8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
