#pragma once

#include <cstddef>
#include <vector>

#include "kummerlcp/gf.hpp"

namespace kummerlcp {

/// Dense matrix over a FiniteField, row-major packed element values.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FiniteField* field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FiniteField* field() const { return field_; }

    FieldElement at(size_t r, size_t c) const { return {field_, data_[r * cols_ + c]}; }
    void set(size_t r, size_t c, FieldElement v) { data_[r * cols_ + c] = v.v; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;

    /// Vertical stack; column counts must agree.
    static Matrix vstack(const Matrix& a, const Matrix& b);

    /// In-place reduced row echelon form; returns pivot column indices.
    std::vector<size_t> rref();

    size_t rank() const;

    /// Basis of the right nullspace {x : A x = 0}, one row per basis vector.
    Matrix nullspace() const;

    /// Rows with the given indices of columns kept (order preserved).
    Matrix select_columns(const std::vector<size_t>& idx) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    const FiniteField* field_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<uint64_t> data_;
};

}  // namespace kummerlcp
