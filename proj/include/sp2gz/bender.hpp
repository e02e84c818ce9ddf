#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sp2gz/matrix.hpp"

// Bender's two-generator presentation of Sp(4,Z): generators K, L, eight
// defining relations, and the shorthand in which a numeral n stands for L^n
// and H for KL^5KL^7K.
namespace sp2gz::bender {

IntMatrix generator_k();
IntMatrix generator_l();

enum class TokenKind { gen_k, gen_l, abbrev, group };

struct Token;

struct Word {
    std::vector<Token> tokens;

    bool operator==(const Word&) const;
};

struct Token {
    TokenKind kind = TokenKind::gen_k;
    long long exponent = 1;  // L-power for gen_l, group exponent for group
    std::string name;        // abbrev only: "H", "w_alpha", "w_beta", "x_alpha"
    Word sub;                // group only

    bool operator==(const Token&) const = default;
};

struct WordSyntaxError : std::runtime_error {
    WordSyntaxError(const std::string& what, std::size_t position);

    std::size_t position;  // 0-based offset into the input text
};

// Grammar (whitespace ignored):
//   word   := term { term }
//   term   := atom [ "^" signed_int ]
//   atom   := "K" | "H" | "L" | numeral | name | "(" word ")"
//   name   := "w_alpha" | "w_beta" | "x_alpha"
// A numeral n denotes L^n; negative exponents mean exact inverses.
Word parse_word(const std::string& text);

// Canonical text that reparses to an equal word.
std::string render_word(const Word& word);

// Expansion of "H", "w_alpha", "w_beta" or "x_alpha".
const Word& abbreviation(const std::string& name);

// Left-to-right product of the generator matrices.
IntMatrix evaluate(const Word& word);
IntMatrix evaluate(const std::string& text);

struct Relation {
    char label = 'a';  // 'a'..'h'
    std::string left;
    std::string right;
    bool holds = false;  // evaluated sides are entrywise equal
};

// Evaluates the eight defining relations as exact matrix identities.
std::vector<Relation> verify_relations();

struct OrderTableEntry {
    std::string word;
    std::uint64_t claimed = 0;
    std::optional<std::uint64_t> verified;  // nullopt would mean infinite
};

// Words realizing every nontrivial order that occurs in Sp(4,Z), each
// order-checked by matrix arithmetic against its claimed value.
std::vector<OrderTableEntry> order_table();

}  // namespace sp2gz::bender
