#include "dett/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace dett {

DenseMatrix::DenseMatrix(int r, int c, std::vector<double> v) : rows(r), cols(c), values(std::move(v)) {
    if (values.size() != static_cast<size_t>(r) * c) {
        throw std::invalid_argument("DenseMatrix: value count " + std::to_string(values.size()) +
                                    " does not match " + std::to_string(r) + "x" + std::to_string(c));
    }
}

bool DenseMatrix::all_finite() const {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void require_shape(const DenseMatrix& m, int rows, int cols, const std::string& what) {
    if (m.rows != rows || m.cols != cols) {
        throw std::invalid_argument(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    ", got " + std::to_string(m.rows) + "x" + std::to_string(m.cols));
    }
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("matmul: inner dimensions " + std::to_string(a.cols) + " and " +
                                    std::to_string(b.rows) + " do not match");
    }
    DenseMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            const double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) {
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return c;
}

DenseMatrix matmul_nt(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols != b.cols) {
        throw std::invalid_argument("matmul_nt: inner dimensions " + std::to_string(a.cols) + " and " +
                                    std::to_string(b.cols) + " do not match");
    }
    DenseMatrix c(a.rows, b.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < b.rows; ++j) {
            double acc = 0.0;
            for (int k = 0; k < a.cols; ++k) acc += a.at(i, k) * b.at(j, k);
            c.at(i, j) = acc;
        }
    }
    return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows != b.rows) {
        throw std::invalid_argument("matmul_tn: inner dimensions " + std::to_string(a.rows) + " and " +
                                    std::to_string(b.rows) + " do not match");
    }
    DenseMatrix c(a.cols, b.cols);
    for (int k = 0; k < a.rows; ++k) {
        for (int i = 0; i < a.cols; ++i) {
            const double aki = a.at(k, i);
            if (aki == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) {
                c.at(i, j) += aki * b.at(k, j);
            }
        }
    }
    return c;
}

void add_row_vector(DenseMatrix& m, std::span<const double> v) {
    if (static_cast<size_t>(m.cols) != v.size()) {
        throw std::invalid_argument("add_row_vector: matrix has " + std::to_string(m.cols) +
                                    " cols, vector has " + std::to_string(v.size()));
    }
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) m.at(i, j) += v[j];
    }
}

std::vector<double> column_sums(const DenseMatrix& m) {
    std::vector<double> s(m.cols, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) s[j] += m.at(i, j);
    }
    return s;
}

}  // namespace dett
