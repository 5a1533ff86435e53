#include "kummerlcp/matrix.hpp"

#include <stdexcept>

namespace kummerlcp {

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t i = 0; i < cols_; ++i) {
            FieldElement a = at(r, i);
            if (a.is_zero()) continue;
            for (size_t c = 0; c < o.cols_; ++c) {
                FieldElement cur = out.at(r, c);
                out.set(r, c, cur + a * o.at(i, c));
            }
        }
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_ || a.field_ != b.field_) throw std::invalid_argument("vstack shape mismatch");
    Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<long>(a.data_.size()));
    return out;
}

std::vector<size_t> Matrix::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = row;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != row) {
            for (size_t c = 0; c < cols_; ++c) std::swap(data_[sel * cols_ + c], data_[row * cols_ + c]);
        }
        FieldElement piv_inv = at(row, col).inv();
        for (size_t c = col; c < cols_; ++c) set(row, c, at(row, c) * piv_inv);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            FieldElement f = at(r, col);
            if (f.is_zero()) continue;
            for (size_t c = col; c < cols_; ++c) set(r, c, at(r, c) - f * at(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Matrix::rank() const {
    Matrix copy = *this;
    return copy.rref().size();
}

Matrix Matrix::nullspace() const {
    Matrix red = *this;
    std::vector<size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix out(field_, free_cols.size(), cols_);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t fc = free_cols[i];
        out.set(i, fc, field_->one());
        for (size_t r = 0; r < pivots.size(); ++r) {
            FieldElement coeff = red.at(r, fc);
            if (!coeff.is_zero()) out.set(i, pivots[r], -coeff);
        }
    }
    return out;
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
    Matrix out(field_, rows_, idx.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t i = 0; i < idx.size(); ++i) out.data_[r * idx.size() + i] = data_[r * cols_ + idx[i]];
    return out;
}

bool Matrix::is_zero() const {
    for (uint64_t v : data_)
        if (v != 0) return false;
    return true;
}

}  // namespace kummerlcp
