#include "sp2gz/bender.hpp"

#include <array>
#include <cctype>
#include <map>
#include <utility>

#include "sp2gz/criterion.hpp"

namespace sp2gz::bender {

bool Word::operator==(const Word& other) const {
    return tokens == other.tokens;
}

WordSyntaxError::WordSyntaxError(const std::string& what, std::size_t pos)
    : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}

IntMatrix generator_k() {
    return IntMatrix::from_rows({{1, 0, 0, 0},
                                 {1, -1, 0, 0},
                                 {0, 0, 1, 1},
                                 {0, 0, 0, -1}});
}

IntMatrix generator_l() {
    return IntMatrix::from_rows({{0, 0, -1, 0},
                                 {0, 0, 0, -1},
                                 {1, 0, 1, 0},
                                 {0, 1, 0, 0}});
}

namespace {

constexpr long long max_exponent = 1'000'000'000;

const std::map<std::string, std::string>& abbreviation_table() {
    static const std::map<std::string, std::string> table = {
        {"H", "K5K7K"},
        {"w_alpha", "H6"},
        {"w_beta", "9H6H"},
        {"x_alpha", "5K1"},
    };
    return table;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Word parse() {
        Word w = parse_word();
        skip_ws();
        if (pos_ < s_.size())
            throw WordSyntaxError("unexpected ')'", pos_);
        return w;
    }

private:
    Word parse_word() {
        Word w;
        skip_ws();
        if (at_end() || peek() == ')')
            throw WordSyntaxError("expected a term", pos_);
        while (!at_end() && peek() != ')')
            w.tokens.push_back(parse_term());
        return w;
    }

    Token parse_term() {
        Token atom = parse_atom();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            const long long e = parse_signed_int();
            return apply_exponent(std::move(atom), e);
        }
        return atom;
    }

    Token parse_atom() {
        skip_ws();
        if (at_end())
            throw WordSyntaxError("expected an atom", pos_);
        const char c = peek();
        if (c == 'K') {
            ++pos_;
            return Token{TokenKind::gen_k, 1, {}, {}};
        }
        if (c == 'L') {
            ++pos_;
            return Token{TokenKind::gen_l, 1, {}, {}};
        }
        if (c == 'H') {
            ++pos_;
            return Token{TokenKind::abbrev, 1, "H", {}};
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Token{TokenKind::gen_l, parse_numeral(), {}, {}};
        if (c == '(') {
            ++pos_;
            Word sub = parse_word();
            skip_ws();
            if (at_end() || peek() != ')')
                throw WordSyntaxError("expected ')'", pos_);
            ++pos_;
            return Token{TokenKind::group, 1, {}, std::move(sub)};
        }
        for (const auto& [name, expansion] : abbreviation_table()) {
            (void)expansion;
            if (s_.compare(pos_, name.size(), name) == 0) {
                pos_ += name.size();
                return Token{TokenKind::abbrev, 1, name, {}};
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            throw WordSyntaxError("unknown abbreviation name", pos_);
        throw WordSyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    static Token apply_exponent(Token atom, long long e) {
        if (e == 1)
            return atom;
        if (atom.kind == TokenKind::gen_l) {
            // (L^n)^e = L^(n e)
            atom.exponent *= e;
            return atom;
        }
        if (atom.kind == TokenKind::group) {
            if (atom.exponent == 1) {
                atom.exponent = e;
                return atom;
            }
            // already exponentiated: nest
        }
        Token group{TokenKind::group, e, {}, {}};
        group.sub.tokens.push_back(std::move(atom));
        return group;
    }

    long long parse_numeral() {
        const std::size_t start = pos_;
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > max_exponent)
                throw WordSyntaxError("numeral too large", start);
            ++pos_;
        }
        if (pos_ == start)
            throw WordSyntaxError("expected a numeral", pos_);
        return value;
    }

    long long parse_signed_int() {
        skip_ws();
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        const long long n = parse_numeral();
        return negative ? -n : n;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void render_token(const Token& t, std::string& out) {
    std::string piece;
    switch (t.kind) {
        case TokenKind::gen_k:
            piece = "K";
            break;
        case TokenKind::gen_l:
            piece = t.exponent >= 0 ? std::to_string(t.exponent)
                                    : "L^" + std::to_string(t.exponent);
            break;
        case TokenKind::abbrev:
            piece = t.name;
            break;
        case TokenKind::group: {
            piece = "(";
            std::string body;
            for (const Token& s : t.sub.tokens)
                render_token(s, body);
            piece += body;
            piece += ")";
            if (t.exponent != 1)
                piece += "^" + std::to_string(t.exponent);
            break;
        }
    }
    // "L^5 L^3" must not render as "53"
    if (!out.empty() && std::isdigit(static_cast<unsigned char>(out.back())) &&
        std::isdigit(static_cast<unsigned char>(piece.front())))
        out += ' ';
    out += piece;
}

IntMatrix pow_signed(const IntMatrix& m, long long e) {
    if (e >= 0)
        return mat_pow(m, static_cast<std::uint64_t>(e));
    return mat_pow(mat_inverse(m), static_cast<std::uint64_t>(-e));
}

IntMatrix token_matrix(const Token& t) {
    switch (t.kind) {
        case TokenKind::gen_k:
            return generator_k();
        case TokenKind::gen_l:
            return pow_signed(generator_l(), t.exponent);
        case TokenKind::abbrev:
            return evaluate(abbreviation(t.name));
        case TokenKind::group:
            return pow_signed(evaluate(t.sub), t.exponent);
    }
    throw std::logic_error("token_matrix: bad token kind");
}

}  // namespace

Word parse_word(const std::string& text) {
    return Parser(text).parse();
}

std::string render_word(const Word& word) {
    std::string out;
    for (const Token& t : word.tokens)
        render_token(t, out);
    return out;
}

const Word& abbreviation(const std::string& name) {
    static const std::map<std::string, Word> cache = [] {
        std::map<std::string, Word> parsed;
        for (const auto& [n, text] : abbreviation_table())
            parsed.emplace(n, parse_word(text));
        return parsed;
    }();
    const auto hit = cache.find(name);
    if (hit == cache.end())
        throw std::invalid_argument("unknown abbreviation: " + name);
    return hit->second;
}

IntMatrix evaluate(const Word& word) {
    IntMatrix m = IntMatrix::identity(4);
    for (const Token& t : word.tokens)
        m = mat_mul(m, token_matrix(t));
    return m;
}

IntMatrix evaluate(const std::string& text) {
    return evaluate(parse_word(text));
}

std::vector<Relation> verify_relations() {
    static const std::array<std::pair<std::string, std::string>, 8> sides = {{
        {"K^2", "L^0"},
        {"L^12", "L^0"},
        {"(KL^7KL^5K)L", "L(KL^5KL^7K)"},
        {"(L^2KL^4)(KL^5KL^7K)", "(KL^5KL^7K)(L^2KL^4)"},
        {"(L^3KL^3)(KL^5KL^7K)", "(KL^5KL^7K)(L^3KL^3)"},
        {"(L^2(KL^5KL^7K))^2", "((KL^5KL^7K)L^2)^2"},
        {"L(L^6(KL^5KL^7K))^2", "(L^6(KL^5KL^7K))^2L"},
        {"(KL^5)^5", "(L^6(KL^5KL^7K))^2"},
    }};
    std::vector<Relation> report;
    char label = 'a';
    for (const auto& [left, right] : sides) {
        Relation r;
        r.label = label++;
        r.left = left;
        r.right = right;
        r.holds = evaluate(left) == evaluate(right);
        report.push_back(std::move(r));
    }
    return report;
}

std::vector<OrderTableEntry> order_table() {
    static const std::array<std::pair<const char*, std::uint64_t>, 11> rows = {{
        {"K", 2},
        {"L", 12},
        {"L^2", 6},
        {"L^3", 4},
        {"L^4", 3},
        {"K5", 10},
        {"(K5)^2", 5},
        {"(K5)^5", 2},
        {"6H", 4},
        {"9H", 8},
        {"H", 2},
    }};
    const std::uint64_t cap = max_order(Genus(2)).order;
    std::vector<OrderTableEntry> table;
    for (const auto& [text, claimed] : rows) {
        OrderTableEntry e;
        e.word = text;
        e.claimed = claimed;
        e.verified = matrix_order(evaluate(e.word), cap);
        table.push_back(std::move(e));
    }
    return table;
}

}  // namespace sp2gz::bender
