// sp2gz: torsion orders in the integral symplectic group Sp(2g,Z).
//
// Subcommands: orders, check-order, solvable, bound, max-order,
// verify-presentation, word-order, matrix-order. Every subcommand accepts
// --json for a machine-readable single-object rendering of the same payload.
// Exit codes: 0 success, 1 domain error (non-symplectic matrix), 2 usage or
// parse error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sp2gz/bender.hpp"
#include "sp2gz/criterion.hpp"
#include "sp2gz/matrix.hpp"
#include "sp2gz/numtheory.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// The double closest to the 12-significant-digit decimal, so text and JSON
// carry the same number.
double round12(double v) {
    return std::strtod(fmt12(v).c_str(), nullptr);
}

void emit(const json& payload, bool as_json) {
    if (as_json)
        std::cout << payload.dump(2) << "\n";
}

json factor_json(const sp2gz::Factorization& f) {
    json arr = json::array();
    for (const auto& [p, a] : f.factors)
        arr.push_back(json{{"prime", p}, {"exponent", a}});
    return arr;
}

std::string phi_term_label(std::uint64_t p, unsigned a) {
    return a == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(a);
}

int cmd_orders(unsigned g, bool as_json) {
    const sp2gz::OrderSet set = sp2gz::enumerate_orders(sp2gz::Genus(g));
    if (as_json) {
        emit(json{{"command", "orders"}, {"genus", g}, {"orders", set.orders}}, true);
        return 0;
    }
    std::string line;
    for (std::uint64_t m : set.orders)
        line += (line.empty() ? "" : " ") + std::to_string(m);
    std::cout << line << "\n";
    return 0;
}

int cmd_check_order(unsigned g, std::uint64_t m, bool as_json) {
    const sp2gz::CriterionWitness w = sp2gz::burgisser_criterion(m, sp2gz::Genus(g));
    if (as_json) {
        json terms = json::array();
        for (const auto& t : w.terms)
            terms.push_back(json{{"prime", t.prime}, {"exponent", t.exponent}, {"phi", t.phi_value}});
        emit(json{{"command", "check-order"},
                  {"m", m},
                  {"genus", g},
                  {"budget", w.budget},
                  {"case_two_mod_four", w.case_two_mod_four},
                  {"terms", terms},
                  {"phi_sum", w.phi_sum},
                  {"order_exists", w.order_exists}},
             true);
        return 0;
    }
    std::cout << "m = " << m << " = " << sp2gz::to_string(sp2gz::factorize(m)) << "\n";
    std::cout << "genus = " << g << ", budget 2g = " << w.budget << "\n";
    if (w.case_two_mod_four)
        std::cout << "case: m = 2 (mod 4), the 2-part is free\n";
    else
        std::cout << "case: m != 2 (mod 4), every prime-power part counts\n";
    for (const auto& t : w.terms)
        std::cout << "  phi(" << phi_term_label(t.prime, t.exponent) << ") = " << t.phi_value
                  << "\n";
    std::cout << "phi sum = " << w.phi_sum << (w.order_exists ? " <= " : " > ") << "budget "
              << w.budget << "\n";
    std::cout << "order exists: " << (w.order_exists ? "yes" : "no") << "\n";
    return 0;
}

int cmd_solvable(unsigned g, std::uint64_t m, bool as_json) {
    const sp2gz::Genus genus(g);
    const sp2gz::SolvabilityVerdict v = sp2gz::power_solvable(m, genus);
    if (as_json) {
        emit(json{{"command", "solvable"},
                  {"m", m},
                  {"genus", g},
                  {"prime_cap", genus.prime_cap()},
                  {"solvable", v.solvable},
                  {"witness_prime", v.witness_prime ? json(*v.witness_prime) : json(nullptr)}},
             true);
        return 0;
    }
    std::cout << "m = " << m << ", genus = " << g << ", prime cap 2g+1 = " << genus.prime_cap()
              << "\n";
    if (v.solvable)
        std::cout << "solvable: yes (witness prime " << *v.witness_prime << ")\n";
    else
        std::cout << "solvable: no (no prime factor <= " << genus.prime_cap() << ")\n";
    return 0;
}

int cmd_bound(unsigned g, bool as_json) {
    const sp2gz::BoundReport r = sp2gz::order_bound(sp2gz::Genus(g));
    if (as_json) {
        json j{{"command", "bound"},
               {"genus", g},
               {"alpha", round12(r.alpha)},
               {"term_two_mod_four", round12(r.term_two_mod_four)},
               {"term_generic", round12(r.term_generic)},
               {"M", round12(r.analytic_m)},
               {"bound", round12(r.analytic_bound)},
               {"exact", r.exact}};
        if (r.exact) {
            j["term_two_mod_four_exact"] = r.term_two_mod_four_exact.str();
            j["term_generic_exact"] = r.term_generic_exact.str();
            j["M_exact"] = r.analytic_m_exact.str();
            j["bound_exact"] = r.analytic_bound_exact.str();
        }
        j["max_order"] = r.exact_max_order;
        j["max_order_factorization"] = factor_json(r.max_order_witness);
        emit(j, true);
        return 0;
    }
    std::cout << "genus = " << g << ", 2g = " << 2 * g << "\n";
    std::cout << "alpha = " << fmt12(r.alpha) << "\n";
    if (r.exact) {
        std::cout << "term 2*(2g)^(g/alpha) = " << r.term_two_mod_four_exact.str() << "\n";
        std::cout << "term (2g)^((g+1)/alpha) = " << r.term_generic_exact.str() << "\n";
        std::cout << "M = " << r.analytic_m_exact.str() << "\n";
        std::cout << "analytic bound max{30, M} = " << r.analytic_bound_exact.str() << "\n";
    } else {
        std::cout << "term 2*(2g)^(g/alpha) = " << fmt12(r.term_two_mod_four) << "\n";
        std::cout << "term (2g)^((g+1)/alpha) = " << fmt12(r.term_generic) << "\n";
        std::cout << "M = " << fmt12(r.analytic_m) << "\n";
        std::cout << "analytic bound max{30, M} = " << fmt12(r.analytic_bound) << "\n";
    }
    std::cout << "exact max order = " << r.exact_max_order << " = "
              << sp2gz::to_string(r.max_order_witness) << "\n";
    return 0;
}

int cmd_max_order(unsigned g, bool as_json) {
    const sp2gz::Genus genus(g);
    const sp2gz::MaxOrderResult r = sp2gz::max_order(genus);
    const sp2gz::CriterionWitness w = sp2gz::burgisser_criterion(r.order, genus);
    if (as_json) {
        emit(json{{"command", "max-order"},
                  {"genus", g},
                  {"budget", genus.budget()},
                  {"max_order", r.order},
                  {"factorization", factor_json(r.witness)},
                  {"phi_sum", w.phi_sum}},
             true);
        return 0;
    }
    std::cout << "genus = " << g << ", budget 2g = " << genus.budget() << "\n";
    std::cout << "max order = " << r.order << " = " << sp2gz::to_string(r.witness) << "\n";
    std::cout << "phi sum = " << w.phi_sum << " <= budget " << genus.budget() << "\n";
    return 0;
}

int cmd_verify_presentation(bool as_json) {
    const bool k_sym = sp2gz::is_symplectic(sp2gz::bender::generator_k());
    const bool l_sym = sp2gz::is_symplectic(sp2gz::bender::generator_l());
    const std::vector<sp2gz::bender::Relation> rels = sp2gz::bender::verify_relations();
    unsigned held = 0;
    for (const auto& r : rels)
        held += r.holds ? 1 : 0;
    const bool all = k_sym && l_sym && held == rels.size();
    if (as_json) {
        json arr = json::array();
        for (const auto& r : rels)
            arr.push_back(json{{"label", std::string(1, r.label)},
                               {"left", r.left},
                               {"right", r.right},
                               {"holds", r.holds}});
        emit(json{{"command", "verify-presentation"},
                  {"k_symplectic", k_sym},
                  {"l_symplectic", l_sym},
                  {"relations", arr},
                  {"relations_held", held},
                  {"relation_count", rels.size()},
                  {"all_hold", all}},
             true);
    } else {
        std::cout << "K symplectic: " << (k_sym ? "yes" : "no") << "\n";
        std::cout << "L symplectic: " << (l_sym ? "yes" : "no") << "\n";
        for (const auto& r : rels)
            std::cout << "(" << r.label << ") " << r.left << " = " << r.right << " : "
                      << (r.holds ? "holds" : "FAILS") << "\n";
        std::cout << held << "/" << rels.size() << " relations hold\n";
    }
    return all ? 0 : 1;
}

int cmd_word_order(const std::string& text, bool as_json) {
    const sp2gz::bender::Word w = sp2gz::bender::parse_word(text);
    const sp2gz::IntMatrix m = sp2gz::bender::evaluate(w);
    const std::optional<std::uint64_t> order = sp2gz::matrix_order(m);
    if (as_json) {
        emit(json{{"command", "word-order"},
                  {"word", text},
                  {"finite", order.has_value()},
                  {"order", order ? json(*order) : json(nullptr)}},
             true);
        return 0;
    }
    std::cout << "word = " << text << "\n";
    if (order)
        std::cout << "order = " << *order << "\n";
    else
        std::cout << "order = infinite\n";
    return 0;
}

int cmd_matrix_order(const std::string& path, bool as_json) {
    const sp2gz::IntMatrix m = sp2gz::read_matrix_file(path);
    const bool even = m.dim() % 2 == 0;
    const bool symplectic = even && sp2gz::is_symplectic(m);
    if (!symplectic) {
        if (as_json) {
            json j{{"command", "matrix-order"}, {"file", path}, {"dim", m.dim()}};
            if (even)
                j["genus"] = m.dim() / 2;
            j["symplectic"] = false;
            j["error"] = "matrix is not symplectic";
            emit(j, true);
        } else {
            std::cerr << "error: matrix is not symplectic\n";
        }
        return 1;
    }
    const unsigned g = m.dim() / 2;
    const std::uint64_t cap = sp2gz::max_order(sp2gz::Genus(g)).order;
    const std::optional<std::uint64_t> order = sp2gz::matrix_order(m, cap);
    if (as_json) {
        emit(json{{"command", "matrix-order"},
                  {"file", path},
                  {"dim", m.dim()},
                  {"genus", g},
                  {"symplectic", true},
                  {"cap", cap},
                  {"finite", order.has_value()},
                  {"order", order ? json(*order) : json(nullptr)}},
             true);
        return 0;
    }
    std::cout << "file = " << path << "\n";
    std::cout << "dim = " << m.dim() << ", genus = " << g << "\n";
    std::cout << "symplectic: yes\n";
    std::cout << "cap = " << cap << "\n";
    if (order)
        std::cout << "order = " << *order << "\n";
    else
        std::cout << "order = infinite\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torsion orders in the integral symplectic group Sp(2g,Z)"};
    app.require_subcommand(1);

    unsigned genus = 1;
    std::uint64_t m = 1;
    std::string word_text;
    std::string file_path;
    std::function<int()> run;

    auto add_genus = [&](CLI::App* cmd) {
        cmd->add_option("--genus", genus, "genus g of Sp(2g,Z)")
            ->required()
            ->check(CLI::PositiveNumber);
    };
    auto add_m = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "candidate order")->required()->check(CLI::PositiveNumber);
    };
    auto add_json = [&](CLI::App* cmd) {
        static bool dummy;  // one flag per subcommand, all write the same bool
        (void)dummy;
        return cmd->add_flag("--json", "machine-readable output");
    };

    struct Sub {
        CLI::App* cmd;
        CLI::Option* json_flag;
    };

    auto* orders = app.add_subcommand("orders", "all orders of torsion elements for a genus");
    add_genus(orders);
    auto* orders_json = add_json(orders);
    orders->callback([&, orders_json] { run = [&, orders_json] {
        return cmd_orders(genus, orders_json->count() > 0);
    }; });

    auto* check = app.add_subcommand("check-order", "phi-budget ledger for one order");
    add_genus(check);
    add_m(check);
    auto* check_json = add_json(check);
    check->callback([&, check_json] { run = [&, check_json] {
        return cmd_check_order(genus, m, check_json->count() > 0);
    }; });

    auto* solvable = app.add_subcommand("solvable", "does A^m = I have a nontrivial solution");
    add_genus(solvable);
    add_m(solvable);
    auto* solvable_json = add_json(solvable);
    solvable->callback([&, solvable_json] { run = [&, solvable_json] {
        return cmd_solvable(genus, m, solvable_json->count() > 0);
    }; });

    auto* bound = app.add_subcommand("bound", "analytic order bound and exact max order");
    add_genus(bound);
    auto* bound_json = add_json(bound);
    bound->callback([&, bound_json] { run = [&, bound_json] {
        return cmd_bound(genus, bound_json->count() > 0);
    }; });

    auto* maxo = app.add_subcommand("max-order", "exact maximal torsion order for a genus");
    add_genus(maxo);
    auto* maxo_json = add_json(maxo);
    maxo->callback([&, maxo_json] { run = [&, maxo_json] {
        return cmd_max_order(genus, maxo_json->count() > 0);
    }; });

    auto* verify = app.add_subcommand("verify-presentation",
                                      "check the two-generator presentation of Sp(4,Z)");
    auto* verify_json = add_json(verify);
    verify->callback([&, verify_json] { run = [&, verify_json] {
        return cmd_verify_presentation(verify_json->count() > 0);
    }; });

    auto* worder = app.add_subcommand("word-order", "order of a word in the generators K, L");
    worder->add_option("--word", word_text, "word, e.g. \"(K5)^2\" or \"KL^7K\"")->required();
    auto* worder_json = add_json(worder);
    worder->callback([&, worder_json] { run = [&, worder_json] {
        return cmd_word_order(word_text, worder_json->count() > 0);
    }; });

    auto* morder = app.add_subcommand("matrix-order", "order of an integer matrix from a file");
    morder->add_option("--file", file_path, "matrix file")->required();
    auto* morder_json = add_json(morder);
    morder->callback([&, morder_json] { run = [&, morder_json] {
        return cmd_matrix_order(file_path, morder_json->count() > 0);
    }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return run();
    } catch (const sp2gz::bender::WordSyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sp2gz::MatrixParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
