#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pseudograph/dense_matrix.hpp"

namespace pseudograph {

struct Triplet {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    double value = 0.0;

    bool operator==(const Triplet&) const = default;
};

/// Sparse matrix in canonical coordinate form: entries sorted by (row, col),
/// duplicates merged by summation, exact zeros dropped. Row offsets are kept
/// alongside so row slices are O(1).
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

    static SparseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    const std::vector<Triplet>& entries() const { return entries_; }

    std::span<const Triplet> row(std::size_t r) const {
        return {entries_.data() + row_offsets_[r], entries_.data() + row_offsets_[r + 1]};
    }

    DenseMatrix densify() const;
    bool is_symmetric(double tol) const;

    bool operator==(const SparseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

private:
    void build_row_offsets();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Triplet> entries_;
    std::vector<std::size_t> row_offsets_;
};

/// Sparse-dense product s * m. Summation order is fixed (canonical entry
/// order), so results are bitwise deterministic.
DenseMatrix spmm(const SparseMatrix& s, const DenseMatrix& m);

/// a + I. Requires a square.
SparseMatrix add_identity(const SparseMatrix& a);

/// Elementwise power, keeping the sparsity pattern.
SparseMatrix hadamard_power(const SparseMatrix& a, double exponent);

/// Scale each row to sum to 1. Rows with no mass are left empty.
SparseMatrix row_normalize(const SparseMatrix& a);

/// D^{-1/2} A D^{-1/2} with D the diagonal of row sums. Zero-sum rows keep
/// their (empty) pattern.
SparseMatrix symmetric_normalize(const SparseMatrix& a);

}  // namespace pseudograph
