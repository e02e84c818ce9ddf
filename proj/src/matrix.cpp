#include "sp2gz/matrix.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "sp2gz/criterion.hpp"

namespace sp2gz {

using BigRational = boost::multiprecision::cpp_rational;

IntMatrix::IntMatrix(unsigned dim, std::vector<BigInt> entries)
    : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != std::size_t{dim} * dim)
        throw std::invalid_argument("IntMatrix: entry count does not match dimension");
}

IntMatrix IntMatrix::identity(unsigned dim) {
    IntMatrix m(dim);
    for (unsigned i = 0; i < dim; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const unsigned n = static_cast<unsigned>(rows.size());
    IntMatrix m(n);
    unsigned i = 0;
    for (const auto& row : rows) {
        if (row.size() != n)
            throw std::invalid_argument("IntMatrix::from_rows: matrix must be square");
        unsigned j = 0;
        for (long long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_identity() const {
    return *this == identity(dim_);
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    const unsigned n = a.dim();
    IntMatrix c(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (unsigned j = 0; j < n; ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix mat_transpose(const IntMatrix& a) {
    const unsigned n = a.dim();
    IntMatrix t(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            t.at(j, i) = a.at(i, j);
    return t;
}

IntMatrix mat_neg(const IntMatrix& a) {
    const unsigned n = a.dim();
    IntMatrix r(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            r.at(i, j) = -a.at(i, j);
    return r;
}

IntMatrix mat_pow(const IntMatrix& a, std::uint64_t e) {
    IntMatrix result = IntMatrix::identity(a.dim());
    IntMatrix base = a;
    while (e) {
        if (e & 1)
            result = mat_mul(result, base);
        e >>= 1;
        if (e)
            base = mat_mul(base, base);
    }
    return result;
}

BigInt mat_det(const IntMatrix& a) {
    // Bareiss fraction-free elimination; every division is exact.
    const unsigned n = a.dim();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    BigInt prev = 1;
    int sign = 1;
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            unsigned pivot = k + 1;
            while (pivot < n && m.at(pivot, k) == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            for (unsigned j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

IntMatrix mat_inverse(const IntMatrix& a) {
    const unsigned n = a.dim();
    // Gauss-Jordan over the rationals on [A | I].
    std::vector<BigRational> w(std::size_t{n} * 2 * n);
    auto at = [&](unsigned i, unsigned j) -> BigRational& { return w[std::size_t{i} * 2 * n + j]; };
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            at(i, j) = BigRational(a.at(i, j));
        at(i, n + i) = 1;
    }
    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && at(pivot, col) == 0)
            ++pivot;
        if (pivot == n)
            throw std::invalid_argument("mat_inverse: matrix is singular");
        if (pivot != col)
            for (unsigned j = 0; j < 2 * n; ++j)
                std::swap(at(col, j), at(pivot, j));
        const BigRational inv = 1 / at(col, col);
        for (unsigned j = 0; j < 2 * n; ++j)
            at(col, j) *= inv;
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || at(i, col) == 0)
                continue;
            const BigRational f = at(i, col);
            for (unsigned j = 0; j < 2 * n; ++j)
                at(i, j) -= f * at(col, j);
        }
    }
    IntMatrix inv(n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            const BigRational& v = at(i, n + j);
            if (denominator(v) != 1)
                throw std::invalid_argument("mat_inverse: matrix is not unimodular over Z");
            inv.at(i, j) = numerator(v);
        }
    return inv;
}

IntMatrix symplectic_form(unsigned dim) {
    if (dim == 0 || dim % 2 != 0)
        throw std::invalid_argument("symplectic_form: dimension must be even and positive");
    const unsigned g = dim / 2;
    IntMatrix j(dim);
    for (unsigned i = 0; i < g; ++i) {
        j.at(i, g + i) = 1;
        j.at(g + i, i) = -1;
    }
    return j;
}

bool is_symplectic(const IntMatrix& a) {
    if (a.dim() == 0 || a.dim() % 2 != 0)
        throw std::invalid_argument("is_symplectic: dimension must be even and positive");
    const IntMatrix j = symplectic_form(a.dim());
    return mat_mul(mat_mul(mat_transpose(a), j), a) == j;
}

std::optional<std::uint64_t> matrix_order(const IntMatrix& a, std::uint64_t cap) {
    if (!is_symplectic(a))
        throw std::domain_error("matrix_order: matrix is not symplectic");
    const std::uint64_t certified = max_order(Genus(a.dim() / 2)).order;
    if (cap < certified)
        throw std::invalid_argument(
            "matrix_order: cap below the maximal order cannot certify \"infinite\"");
    IntMatrix power = a;
    for (std::uint64_t m = 1; m <= cap; ++m) {
        if (power.is_identity())
            return m;
        if (m < cap)
            power = mat_mul(power, a);
    }
    return std::nullopt;
}

std::optional<std::uint64_t> matrix_order(const IntMatrix& a) {
    if (!is_symplectic(a))
        throw std::domain_error("matrix_order: matrix is not symplectic");
    return matrix_order(a, max_order(Genus(a.dim() / 2)).order);
}

namespace {

// Strips '#' comments; returns whitespace-separated tokens.
std::vector<std::string> content_tokens(const std::string& line) {
    const auto hash = line.find('#');
    std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return tokens;
}

BigInt parse_entry(const std::string& tok) {
    const bool ok = !tok.empty() &&
                    tok.find_first_not_of("0123456789", tok[0] == '-' || tok[0] == '+' ? 1 : 0) ==
                        std::string::npos &&
                    tok.find_first_of("0123456789") != std::string::npos;
    if (!ok)
        throw MatrixParseError("matrix entry is not a signed decimal integer: '" + tok + "'");
    // cpp_int's parser rejects an explicit '+'.
    return BigInt(tok[0] == '+' ? tok.substr(1) : tok);
}

}  // namespace

IntMatrix read_matrix(std::istream& in) {
    std::string line;
    unsigned dim = 0;
    unsigned rows_read = 0;
    IntMatrix m;
    while (std::getline(in, line)) {
        const auto tokens = content_tokens(line);
        if (tokens.empty())
            continue;
        if (dim == 0) {
            if (tokens.size() != 1)
                throw MatrixParseError("expected the dimension alone on the first line");
            const BigInt n = parse_entry(tokens[0]);
            if (n < 1 || n > 1024)
                throw MatrixParseError("dimension must be between 1 and 1024");
            dim = n.convert_to<unsigned>();
            m = IntMatrix(dim);
            continue;
        }
        if (rows_read == dim)
            throw MatrixParseError("trailing content after the last matrix row");
        if (tokens.size() != dim)
            throw MatrixParseError("row " + std::to_string(rows_read + 1) + " has " +
                                   std::to_string(tokens.size()) + " entries, expected " +
                                   std::to_string(dim));
        for (unsigned j = 0; j < dim; ++j)
            m.at(rows_read, j) = parse_entry(tokens[j]);
        ++rows_read;
    }
    if (dim == 0)
        throw MatrixParseError("empty matrix file");
    if (rows_read != dim)
        throw MatrixParseError("expected " + std::to_string(dim) + " rows, found " +
                               std::to_string(rows_read));
    return m;
}

IntMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MatrixParseError("cannot open matrix file: " + path);
    return read_matrix(in);
}

}  // namespace sp2gz
