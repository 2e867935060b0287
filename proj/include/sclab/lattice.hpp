#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sclab/rng.hpp"

namespace sclab::lattice {

struct lattice_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense matrix of arbitrary-precision integers; rows are basis vectors.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    mpz_class& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const mpz_class& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(size_t i, size_t j);
    // row_i += m * row_j
    void add_mul_row(size_t i, size_t j, const mpz_class& m);
    void negate_row(size_t i);
    bool row_is_zero(size_t i) const;
    mpz_class row_norm_sq(size_t i) const;

    bool operator==(const IntMatrix& o) const = default;

    // Plain-text row-major dump: "rows cols" then one row per line.
    std::string dump() const;
    static IntMatrix parse(const std::string& text);
    void save(const std::string& path) const;
    static IntMatrix load(const std::string& path);

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

struct ReductionParams {
    double lll_delta = 0.99;   // in (0.25, 1)
    unsigned block_size = 20;  // >= 2
    unsigned max_rounds = 8;   // BKZ tour cap
    size_t enum_node_cap = 2'000'000;

    void validate() const;
};

// LLL reduction (floating-point Gram-Schmidt over an exact Gram matrix,
// exact integer size reduction, precision escalation on numerical
// trouble). Output spans the same lattice, is size-reduced and satisfies
// the Lovasz condition for lll_delta.
IntMatrix lll_reduce(const IntMatrix& basis, const ReductionParams& params);

// Blockwise reduction: LLL plus full (unpruned) enumeration of projected
// blocks, repeated for at most max_rounds tours. block_size == 2 is
// exactly LLL.
IntMatrix bkz_reduce(const IntMatrix& basis, const ReductionParams& params);

// Borders B with a zero column and appends the row (u | q).
IntMatrix embed_cvp(const IntMatrix& B, const std::vector<mpz_class>& u, const mpz_class& q);

// Shuffles columns and multiplies by a sparse unimodular matrix with
// `density` off-diagonal +-1 entries on a triangular profile. Returns the
// randomized basis and the column permutation (new index -> old index).
std::pair<IntMatrix, std::vector<size_t>> gnr_randomize(const IntMatrix& Bhat, size_t density,
                                                        Rng& rng);

// Unique row-style Hermite Normal Form; equal HNF iff equal row lattice.
// Zero rows sink to the bottom.
IntMatrix hnf(const IntMatrix& m);

// |det| for full-rank square bases, via HNF pivots.
mpz_class det_abs(const IntMatrix& m);

// Exact rational verification of the LLL output conditions
// (|mu_ij| <= 1/2 + tol and Lovasz with delta). Independent of the
// floating-point reduction path; meant for tests and small dimensions.
bool check_lll_conditions(const IntMatrix& basis, double delta, std::string* why = nullptr);

}  // namespace sclab::lattice
