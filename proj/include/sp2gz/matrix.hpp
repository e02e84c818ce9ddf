#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sp2gz {

using BigInt = boost::multiprecision::cpp_int;

// Dense square matrix over Z. All arithmetic is exact; entries are
// arbitrary-precision integers, so unipotent powers never overflow.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(unsigned dim) : dim_(dim), e_(std::size_t{dim} * dim) {}
    IntMatrix(unsigned dim, std::vector<BigInt> entries);

    static IntMatrix identity(unsigned dim);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    unsigned dim() const { return dim_; }
    const BigInt& at(unsigned i, unsigned j) const { return e_[std::size_t{i} * dim_ + j]; }
    BigInt& at(unsigned i, unsigned j) { return e_[std::size_t{i} * dim_ + j]; }

    bool is_identity() const;

    bool operator==(const IntMatrix&) const = default;

private:
    unsigned dim_ = 0;
    std::vector<BigInt> e_;  // row-major
};

// Rejects mismatched dimensions.
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_transpose(const IntMatrix& a);
IntMatrix mat_neg(const IntMatrix& a);

// Exact power by repeated squaring; A^0 = I.
IntMatrix mat_pow(const IntMatrix& a, std::uint64_t e);

// Fraction-free (Bareiss) determinant.
BigInt mat_det(const IntMatrix& a);

// Exact inverse of a unimodular matrix (|det| = 1); rejects anything else.
IntMatrix mat_inverse(const IntMatrix& a);

// J = [[0, I_g], [-I_g, 0]]. Rejects odd dim.
IntMatrix symplectic_form(unsigned dim);

// A^T J A == J, entrywise. Rejects odd dimension.
bool is_symplectic(const IntMatrix& a);

// Smallest m <= cap with A^m = I, or nullopt for infinite order. Rejects
// non-symplectic input and caps below max_order(g): any finite order
// satisfies the phi-budget criterion, so searching up to max_order(g)
// certifies "infinite".
std::optional<std::uint64_t> matrix_order(const IntMatrix& a, std::uint64_t cap);

// Same, with cap = max_order(dim/2).
std::optional<std::uint64_t> matrix_order(const IntMatrix& a);

struct MatrixParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix file format: first a line with the dimension n, then n lines of n
// space-separated signed decimal integers. Blank lines and '#' comments are
// ignored. Throws MatrixParseError on malformed input.
IntMatrix read_matrix(std::istream& in);
IntMatrix read_matrix_file(const std::string& path);

}  // namespace sp2gz
