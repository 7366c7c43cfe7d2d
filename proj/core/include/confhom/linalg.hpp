// Dense exact linear algebra over a field backend: RREF, rank, determinants
// and kernel bases for the small matrices that carry configurations.

#pragma once

#include <cstddef>
#include <vector>

#include "confhom/fields.hpp"

namespace confhom {

class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(FieldTag tag, std::size_t rows, std::size_t cols)
        : tag_(tag), rows_(rows), cols_(cols),
          data_(rows * cols, FieldElement::zero(tag)) {}

    static FieldMatrix identity(const FieldTag& tag, std::size_t n);
    static FieldMatrix from_rows(const FieldTag& tag,
                                 const std::vector<std::vector<FieldElement>>& rows);

    const FieldTag& tag() const { return tag_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<FieldElement> column(std::size_t j) const;
    FieldMatrix without_column(std::size_t j) const;
    FieldMatrix transposed() const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator!=(const FieldMatrix& a, const FieldMatrix& b) { return !(a == b); }
    /// Lexicographic by (rows, cols, entries row-major); keys chain maps.
    friend bool operator<(const FieldMatrix& a, const FieldMatrix& b);

    /// In-place reduced row echelon form; returns the rank.
    std::size_t rref();
    std::size_t rank() const;

    /// Determinant of a square matrix.
    FieldElement det() const;

    /// Determinant of the r x r submatrix on all rows and the given columns.
    FieldElement minor_on_columns(const std::vector<std::size_t>& cols) const;

    /// Basis of the right kernel {x : M x = 0}, one vector per free column,
    /// in the deterministic order of the free columns.
    std::vector<std::vector<FieldElement>> kernel_basis() const;

    std::string encode() const; // row-major, for diagnostics

private:
    FieldTag tag_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> data_;
};

/// First k-subset of {0..n-1} in lexicographic order; advance returns false
/// after the last subset.
bool next_subset(std::vector<std::size_t>& subset, std::size_t n);

} // namespace confhom
