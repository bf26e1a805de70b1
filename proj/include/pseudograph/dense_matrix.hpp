#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pseudograph {

/// Row-major dense matrix of 64-bit floats.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    bool same_shape(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }
    bool all_finite() const;

    bool operator==(const DenseMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Dense product a * b. Throws std::invalid_argument on inner-dimension mismatch.
DenseMatrix gemm(const DenseMatrix& a, const DenseMatrix& b);

/// Elementwise max(0, x).
DenseMatrix relu(const DenseMatrix& m);

/// Per-row softmax with max subtraction. Rows of the result sum to 1.
DenseMatrix row_softmax(const DenseMatrix& m);

DenseMatrix transpose(const DenseMatrix& m);

/// dst += scale * src (shapes must agree).
void add_scaled(DenseMatrix& dst, const DenseMatrix& src, double scale);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace pseudograph
