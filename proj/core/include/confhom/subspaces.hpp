// Admissible codimension-r subspaces of P^n as configurations of n+1
// column vectors in k^r.  A configuration matrix V doubles as the equation
// matrix of the subspace: the lift of L to k^{n+1} is ker(V), and two
// matrices present the same subspace iff they agree up to left GL_r, i.e.
// iff they share a reduced row echelon form.

#pragma once

#include <cstdint>
#include <vector>

#include "confhom/linalg.hpp"
#include "confhom/rng.hpp"

namespace confhom {

class CanonicalForm;

/// Full-rank r x (n+1) matrix over a field backend; columns v_0..v_n.
class Configuration {
public:
    /// DomainError unless the matrix is full rank with n >= r.
    explicit Configuration(FieldMatrix v);

    const FieldTag& tag() const { return matrix_.tag(); }
    std::size_t r() const { return matrix_.rows(); }
    std::size_t n() const { return matrix_.cols() - 1; }
    const FieldMatrix& matrix() const { return matrix_; }

private:
    FieldMatrix matrix_;
};

/// Unique reduced row echelon representative of the left GL_r orbit.
/// For admissible configurations this is [I_r | A].
class CanonicalForm {
public:
    static CanonicalForm of(const Configuration& v);
    static CanonicalForm of_matrix(const FieldMatrix& m); // must be full rank

    const FieldTag& tag() const { return matrix_.tag(); }
    std::size_t r() const { return matrix_.rows(); }
    std::size_t n() const { return matrix_.cols() - 1; }
    const FieldMatrix& matrix() const { return matrix_; }
    Configuration configuration() const { return Configuration(matrix_); }

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.matrix_ == b.matrix_;
    }
    friend bool operator!=(const CanonicalForm& a, const CanonicalForm& b) { return !(a == b); }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.matrix_ < b.matrix_;
    }

    std::string encode() const { return matrix_.encode(); }

private:
    explicit CanonicalForm(FieldMatrix m) : matrix_(std::move(m)) {}
    FieldMatrix matrix_;
};

/// All C(n+1, r) maximal minors on distinct columns are nonzero; aborts on
/// the first vanishing minor.
bool is_admissible(const Configuration& v);

/// If not admissible, reports one vanishing column set.
bool is_admissible(const Configuration& v, std::vector<std::size_t>* bad_columns);

/// Independent oracle straight from the definition: for every set S of
/// coordinate hyperplanes the intersection has codimension r + |S| (empty
/// once r + |S| exceeds n).  Agrees with is_admissible on all inputs.
bool is_admissible_geometric(const Configuration& v);

/// Deletes column i and canonicalizes.  RankError when n-1 < r.
CanonicalForm face(const Configuration& v, std::size_t i);

CanonicalForm canonicalize(const Configuration& v);

/// The equation matrix M (rows cut out the lift of L) and the configuration
/// matrix present the same subspace, so both directions are canonicalization
/// with the roles swapped.
Configuration equations_to_configuration(const FieldMatrix& m);
FieldMatrix configuration_to_equations(const Configuration& v);

/// Rejection sampling; entries bounded by height; deterministic per seed.
/// GenerationError after 10000 rejections.
Configuration random_admissible(std::size_t r, std::size_t n, const FieldTag& tag,
                                long height, std::uint64_t seed);
Configuration random_admissible(std::size_t r, std::size_t n, const FieldTag& tag,
                                long height, Rng& rng);

/// Random full-rank (not necessarily admissible) configuration matrix.
FieldMatrix random_full_rank(std::size_t r, std::size_t n, const FieldTag& tag,
                             long height, Rng& rng);

/// Random invertible r x r matrix (for GL-invariance checks).
FieldMatrix random_invertible(std::size_t r, const FieldTag& tag, long height, Rng& rng);

} // namespace confhom
