#include "confhom/subspaces.hpp"

#include <sstream>

namespace confhom {

Configuration::Configuration(FieldMatrix v) : matrix_(std::move(v)) {
    if (matrix_.rows() < 1) throw DomainError("configuration needs r >= 1");
    if (matrix_.cols() < matrix_.rows() + 1)
        throw DomainError("configuration needs n >= r");
    if (matrix_.rank() != matrix_.rows())
        throw DomainError("rank-deficient configuration matrix " + matrix_.encode());
}

CanonicalForm CanonicalForm::of(const Configuration& v) {
    FieldMatrix m = v.matrix();
    m.rref();
    return CanonicalForm(std::move(m));
}

CanonicalForm CanonicalForm::of_matrix(const FieldMatrix& m) {
    return of(Configuration(m));
}

bool is_admissible(const Configuration& v) { return is_admissible(v, nullptr); }

bool is_admissible(const Configuration& v, std::vector<std::size_t>* bad_columns) {
    const std::size_t r = v.r(), cols = v.n() + 1;
    std::vector<std::size_t> subset(r);
    for (std::size_t i = 0; i < r; ++i) subset[i] = i;
    do {
        if (v.matrix().minor_on_columns(subset).is_zero()) {
            if (bad_columns) *bad_columns = subset;
            return false;
        }
    } while (next_subset(subset, cols));
    return true;
}

bool is_admissible_geometric(const Configuration& v) {
    const std::size_t r = v.r(), n = v.n(), cols = n + 1;
    const FieldTag& tag = v.tag();
    // For S = {i_1..i_s}: codim of the intersection inside P^n equals the
    // rank of V stacked with the coordinate rows e_i, i in S.
    for (std::size_t s = 1; s <= cols; ++s) {
        std::vector<std::size_t> subset(s);
        for (std::size_t i = 0; i < s; ++i) subset[i] = i;
        do {
            FieldMatrix stacked(tag, r + s, cols);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < cols; ++j) stacked.at(i, j) = v.matrix().at(i, j);
            for (std::size_t t = 0; t < s; ++t)
                stacked.at(r + t, subset[t]) = FieldElement::one(tag);
            const std::size_t rk = stacked.rank();
            if (r + s <= n) {
                if (rk != r + s) return false;
            } else {
                if (rk != cols) return false; // codim > n forces empty
            }
        } while (next_subset(subset, cols));
    }
    return true;
}

CanonicalForm face(const Configuration& v, std::size_t i) {
    if (i > v.n()) throw DomainError("face index out of range");
    if (v.n() < v.r() + 1)
        throw RankError("face would leave the truncated range n < r");
    return CanonicalForm::of_matrix(v.matrix().without_column(i));
}

CanonicalForm canonicalize(const Configuration& v) { return CanonicalForm::of(v); }

Configuration equations_to_configuration(const FieldMatrix& m) {
    // the equation rows of L are precisely a configuration matrix for it
    return CanonicalForm::of_matrix(m).configuration();
}

FieldMatrix configuration_to_equations(const Configuration& v) {
    return CanonicalForm::of(v).matrix();
}

Configuration random_admissible(std::size_t r, std::size_t n, const FieldTag& tag,
                                long height, std::uint64_t seed) {
    Rng rng(seed);
    return random_admissible(r, n, tag, height, rng);
}

Configuration random_admissible(std::size_t r, std::size_t n, const FieldTag& tag,
                                long height, Rng& rng) {
    if (n < r) throw DomainError("need n >= r");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        FieldMatrix m(tag, r, n + 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = sample_entry(tag, height, rng);
        if (m.rank() != r) continue;
        Configuration v(m);
        if (is_admissible(v)) return canonicalize(v).configuration();
    }
    std::ostringstream os;
    os << "no admissible configuration found for r=" << r << " n=" << n
       << " over " << tag.to_string() << " after 10000 attempts";
    throw GenerationError(os.str());
}

FieldMatrix random_full_rank(std::size_t r, std::size_t n, const FieldTag& tag,
                             long height, Rng& rng) {
    for (;;) {
        FieldMatrix m(tag, r, n + 1);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j <= n; ++j) m.at(i, j) = sample_entry(tag, height, rng);
        if (m.rank() == r) return m;
    }
}

FieldMatrix random_invertible(std::size_t r, const FieldTag& tag, long height, Rng& rng) {
    for (;;) {
        FieldMatrix g(tag, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) g.at(i, j) = sample_entry(tag, height, rng);
        if (!g.det().is_zero()) return g;
    }
}

} // namespace confhom
