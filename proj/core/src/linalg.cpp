#include "confhom/linalg.hpp"

#include <sstream>

namespace confhom {

FieldMatrix FieldMatrix::identity(const FieldTag& tag, std::size_t n) {
    FieldMatrix m(tag, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(tag);
    return m;
}

FieldMatrix FieldMatrix::from_rows(const FieldTag& tag,
                                   const std::vector<std::vector<FieldElement>>& rows) {
    if (rows.empty()) return FieldMatrix(tag, 0, 0);
    FieldMatrix m(tag, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<FieldElement> FieldMatrix::column(std::size_t j) const {
    std::vector<FieldElement> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

FieldMatrix FieldMatrix::without_column(std::size_t j) const {
    FieldMatrix m(tag_, rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0, t = 0; k < cols_; ++k)
            if (k != j) m.at(i, t++) = at(i, k);
    return m;
}

FieldMatrix FieldMatrix::transposed() const {
    FieldMatrix m(tag_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    FieldMatrix m(a.tag_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
        if (a.data_[k] < b.data_[k]) return true;
        if (b.data_[k] < a.data_[k]) return false;
    }
    return false;
}

std::size_t FieldMatrix::rref() {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows_ && at(sel, col).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pivot_row, j));
        FieldElement inv = at(pivot_row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || at(i, col).is_zero()) continue;
            FieldElement f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::size_t FieldMatrix::rank() const {
    FieldMatrix copy = *this;
    return copy.rref();
}

FieldElement FieldMatrix::det() const {
    if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
    FieldMatrix m = *this;
    FieldElement d = FieldElement::one(tag_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t sel = col;
        while (sel < rows_ && m.at(sel, col).is_zero()) ++sel;
        if (sel == rows_) return FieldElement::zero(tag_);
        if (sel != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        FieldElement inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElement f = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

FieldElement FieldMatrix::minor_on_columns(const std::vector<std::size_t>& cols) const {
    if (cols.size() != rows_) throw DomainError("minor must use as many columns as rows");
    FieldMatrix sub(tag_, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) sub.at(i, j) = at(i, cols[j]);
    return sub.det();
}

std::vector<std::vector<FieldElement>> FieldMatrix::kernel_basis() const {
    FieldMatrix r = *this;
    r.rref();
    // locate pivot columns
    std::vector<std::ptrdiff_t> pivot_of_col(cols_, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        if (!r.at(row, col).is_zero()) {
            pivot_of_col[col] = static_cast<std::ptrdiff_t>(row);
            ++row;
        }
    }
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (pivot_of_col[free] != -1) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(tag_));
        v[free] = FieldElement::one(tag_);
        for (std::size_t col = 0; col < free; ++col)
            if (pivot_of_col[col] != -1)
                v[col] = -r.at(static_cast<std::size_t>(pivot_of_col[col]), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string FieldMatrix::encode() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).encode();
    }
    os << "]";
    return os.str();
}

bool next_subset(std::vector<std::size_t>& subset, std::size_t n) {
    const std::size_t k = subset.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (subset[i] != n - k + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace confhom
