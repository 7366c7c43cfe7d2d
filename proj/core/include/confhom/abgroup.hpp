// Integer linear algebra (Smith normal form, homology of a composable pair
// of boundary matrices, kernel lattices) and the symbolic model of the
// coinvariant tensor square (k* ⊗ k*)_sigma.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "confhom/fields.hpp"

namespace confhom {

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

    std::string encode() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> data_;
};

/// Sparse triplet accumulator for boundary matrices built column by column.
class SparseIntMatrix {
public:
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    void add(std::size_t i, std::size_t j, long v);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const { return entries_.size(); }

    IntMatrix to_dense() const;

private:
    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, mpz_class> entries_;
};

struct SmithResult {
    /// Positive invariant factors d1 | d2 | ... | dk (k = rank).
    std::vector<mpz_class> factors;
    /// Optional unimodular transforms with U * M * V = diag(factors).
    std::optional<IntMatrix> left, right;
};

/// Classic row/column reduction with minimal-|entry| pivoting, arbitrary
/// precision throughout.
SmithResult smith_normal_form(const IntMatrix& m, bool want_transforms = false);

std::size_t rank(const IntMatrix& m);

/// Basis of the integer kernel lattice {x : M x = 0}, as columns.
IntMatrix kernel_lattice(const IntMatrix& m);

/// Column-style Hermite reduction of the lattice generated by the columns;
/// returns a basis (zero columns dropped).
IntMatrix column_lattice_basis(const IntMatrix& generators);

/// Whether v lies in the lattice generated by the columns of basis.
bool lattice_contains(const IntMatrix& basis, const std::vector<mpz_class>& v);

struct HomologyResult {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion; // invariant factors > 1
    std::string to_string() const;
};

/// Structure of ker(B)/im(A) for a composable pair A: C_{n+1} -> C_n,
/// B: C_n -> C_{n-1}.  CompositionError unless B*A = 0.
HomologyResult homology_of_pair(const IntMatrix& a, const IntMatrix& b);

// ---------------------------------------------------------------------------
// (k* ⊗ k*)_sigma
// ---------------------------------------------------------------------------

/// Element of the coinvariant tensor square, stored on ordered generator
/// pairs (g, h), g <= h, with coefficients reduced modulo the pair modulus:
/// gcd of the generator orders (0 = infinite), and additionally gcd(., 2)
/// on the diagonal because (g,g) + (g,g) is a coinvariance relation.
class TensorSym {
public:
    explicit TensorSym(FieldTag tag) : tag_(tag) {}

    const FieldTag& tag() const { return tag_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Pair modulus; 0 means a free Z coordinate.
    long long pair_modulus(const Generator& g, const Generator& h) const;

    /// Adds c * (g ⊗ h), canonicalizing order and reducing mod the modulus.
    void add_pair(const Generator& g, const Generator& h, long long c);

    TensorSym& operator+=(const TensorSym& o);
    TensorSym& operator-=(const TensorSym& o);
    TensorSym& operator*=(long long c);
    friend TensorSym operator+(TensorSym a, const TensorSym& b) { return a += b; }
    friend TensorSym operator-(TensorSym a, const TensorSym& b) { return a -= b; }
    friend bool operator==(const TensorSym& a, const TensorSym& b);

    const std::map<std::pair<Generator, Generator>, long long>& coefficients() const {
        return coeffs_;
    }

    std::string to_string() const;

private:
    FieldTag tag_;
    std::map<std::pair<Generator, Generator>, long long> coeffs_;
};

/// Class of x ⊗ y in (k* ⊗ k*)_sigma, by bilinear expansion over the
/// multiplicative decompositions.  DomainError on zero input.
TensorSym tensor_pair(const FieldElement& x, const FieldElement& y);

bool tensor_is_zero(const TensorSym& t);

} // namespace confhom
