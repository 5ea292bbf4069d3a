#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dett {

/// Row-major dense matrix of doubles. All layers, activations and gradients
/// in this project live in one of these.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), values(static_cast<size_t>(r) * c, 0.0) {}
    DenseMatrix(int r, int c, std::vector<double> v);

    double& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }

    std::span<double> row(int r) { return {values.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
    std::span<const double> row(int r) const {
        return {values.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
    }

    bool same_shape(const DenseMatrix& other) const { return rows == other.rows && cols == other.cols; }
    bool all_finite() const;
};

// Throws std::invalid_argument naming both offending dimensions.
void require_shape(const DenseMatrix& m, int rows, int cols, const std::string& what);

// C = A * B
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
// C = A * B^T  (the forward-pass shape: activations [n x d_in] times weight [d_out x d_in])
DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b);
// C = A^T * B  (the weight-gradient shape)
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);

void add_row_vector(DenseMatrix& m, std::span<const double> v);
std::vector<double> column_sums(const DenseMatrix& m);

}  // namespace dett
