#include "pseudograph/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pseudograph {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (const Triplet& t : entries_) {
        if (t.row >= rows_ || t.col >= cols_)
            throw std::invalid_argument("SparseMatrix: entry (" + std::to_string(t.row) + "," +
                                        std::to_string(t.col) + ") outside " +
                                        std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    std::sort(entries_.begin(), entries_.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    // merge duplicates by summation, then drop exact zeros
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries_.size();) {
        Triplet acc = entries_[i++];
        while (i < entries_.size() && entries_[i].row == acc.row && entries_[i].col == acc.col)
            acc.value += entries_[i++].value;
        if (acc.value != 0.0) entries_[out++] = acc;
    }
    entries_.resize(out);
    build_row_offsets();
}

void SparseMatrix::build_row_offsets() {
    row_offsets_.assign(rows_ + 1, 0);
    for (const Triplet& t : entries_) ++row_offsets_[t.row + 1];
    for (std::size_t r = 0; r < rows_; ++r) row_offsets_[r + 1] += row_offsets_[r];
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
    std::vector<Triplet> entries(n);
    for (std::size_t i = 0; i < n; ++i)
        entries[i] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), 1.0};
    return SparseMatrix(n, n, std::move(entries));
}

DenseMatrix SparseMatrix::densify() const {
    DenseMatrix out(rows_, cols_);
    for (const Triplet& t : entries_) out(t.row, t.col) = t.value;
    return out;
}

bool SparseMatrix::is_symmetric(double tol) const {
    if (rows_ != cols_) return false;
    for (const Triplet& t : entries_) {
        auto mirror = row(t.col);
        auto it = std::lower_bound(mirror.begin(), mirror.end(), t.row,
                                   [](const Triplet& e, std::uint32_t c) { return e.col < c; });
        double mv = (it != mirror.end() && it->col == t.row) ? it->value : 0.0;
        if (std::abs(mv - t.value) > tol) return false;
    }
    return true;
}

DenseMatrix spmm(const SparseMatrix& s, const DenseMatrix& m) {
    if (s.cols() != m.rows())
        throw std::invalid_argument("spmm: inner dimensions disagree (" +
                                    std::to_string(s.cols()) + " vs " + std::to_string(m.rows()) + ")");
    DenseMatrix out(s.rows(), m.cols());
    for (const Triplet& t : s.entries()) {
        const double* mrow = m.row_ptr(t.col);
        double* orow = out.row_ptr(t.row);
        for (std::size_t j = 0; j < m.cols(); ++j) orow[j] += t.value * mrow[j];
    }
    return out;
}

SparseMatrix add_identity(const SparseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("add_identity: matrix not square");
    std::vector<Triplet> entries = a.entries();
    entries.reserve(entries.size() + a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        entries.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), 1.0});
    return SparseMatrix(a.rows(), a.cols(), std::move(entries));
}

SparseMatrix hadamard_power(const SparseMatrix& a, double exponent) {
    std::vector<Triplet> entries = a.entries();
    for (Triplet& t : entries) t.value = std::pow(t.value, exponent);
    return SparseMatrix(a.rows(), a.cols(), std::move(entries));
}

SparseMatrix row_normalize(const SparseMatrix& a) {
    std::vector<double> sums(a.rows(), 0.0);
    for (const Triplet& t : a.entries()) sums[t.row] += t.value;
    std::vector<Triplet> entries = a.entries();
    for (Triplet& t : entries)
        if (sums[t.row] != 0.0) t.value /= sums[t.row];
    return SparseMatrix(a.rows(), a.cols(), std::move(entries));
}

SparseMatrix symmetric_normalize(const SparseMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_normalize: matrix not square");
    std::vector<double> inv_sqrt(a.rows(), 0.0);
    for (const Triplet& t : a.entries()) inv_sqrt[t.row] += t.value;
    for (double& d : inv_sqrt) d = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
    std::vector<Triplet> entries = a.entries();
    for (Triplet& t : entries) t.value *= inv_sqrt[t.row] * inv_sqrt[t.col];
    return SparseMatrix(a.rows(), a.cols(), std::move(entries));
}

}  // namespace pseudograph
