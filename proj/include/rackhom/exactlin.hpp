#pragma once

#include "rackhom/linear_combination.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rackhom {

using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transposed() const;
    bool is_zero() const;
    IntVector column(std::size_t c) const;
    IntVector apply(const IntVector& v) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... .
struct SNFResult {
    IntVector diagonal;  // min(rows, cols) entries, nonzero ones first
    IntMatrix left;      // U
    IntMatrix right;     // V

    std::size_t rank() const;
    IntVector invariant_factors() const;  // the nonzero diagonal entries
};

// Pivot: least nonzero absolute value, ties broken by (row, col).
SNFResult smith_normal_form(const IntMatrix& m);

// Nonzero invariant factors only. Eliminates unit pivots sparsely first and
// finishes the residual block with the dense algorithm, so it agrees with
// smith_normal_form(m).invariant_factors() while staying fast on boundary
// matrices.
IntVector invariant_factors(const IntMatrix& m);

// Determinant of a square matrix (fraction-free elimination).
Integer determinant(const IntMatrix& m);

struct HomologyGroup {
    std::size_t free_rank = 0;
    IntVector torsion;  // invariant factors > 1, divisibility chain

    bool operator==(const HomologyGroup&) const = default;
    std::string to_string() const;
};

// Direct sum with torsion renormalized to invariant-factor form
// (Z/2 + Z/3 = Z/6).
HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

// Ker(out) / Im(in). Over Z by invariant factors; over F_p by ranks, in which
// case the group is reported as free of rank dim_p. Throws ContractViolation
// when out * in != 0.
HomologyGroup homology_of_pair(const IntMatrix& boundary_out, const IntMatrix& boundary_in,
                               std::optional<unsigned long> modulus = std::nullopt);

// Some x with m * x = b over Z, or nullopt.
std::optional<IntVector> solve_integral(const IntMatrix& m, const IntVector& b);

// Same, reusing a precomputed smith_normal_form(m).
std::optional<IntVector> solve_integral(const SNFResult& snf, const IntMatrix& m, const IntVector& b);

// Z-basis of the kernel lattice {x : m x = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

// Rank over Q (Bareiss) or over F_p. Throws InputError for a composite modulus.
std::size_t rank(const IntMatrix& m, std::optional<unsigned long> modulus = std::nullopt);

bool is_prime(unsigned long p);

namespace modp {

// Requires p < 2^32. Entries of all results are reduced into [0, p).
std::vector<IntVector> kernel_basis(const IntMatrix& m, unsigned long p);
std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b, unsigned long p);
// Inverse over F_p, or nullopt when singular.
std::optional<IntMatrix> inverse(const IntMatrix& m, unsigned long p);
IntVector reduce(const IntVector& v, unsigned long p);

}  // namespace modp

}  // namespace rackhom
