#include "confhom/fflab.hpp"

#include <algorithm>
#include <sstream>

namespace confhom {

std::vector<CanonicalForm> enumerate_admissible(std::size_t r, std::size_t n,
                                                std::uint32_t p,
                                                const FflabBudget& budget) {
    const FieldTag tag = FieldTag::prime_field(p);
    std::vector<CanonicalForm> out;
    if (n < r) return out; // truncated range: no generators

    const std::size_t free_entries = r * (n + 1 - r);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < free_entries; ++k) {
        if (total > budget.enumeration / p)
            throw BudgetError("enumeration budget exceeded at p^" + std::to_string(free_entries));
        total *= p;
    }

    // scan A in row-major lexicographic order; [I_r | A] is admissible iff
    // every maximal minor is nonzero
    std::vector<std::int64_t> digits(free_entries, 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        FieldMatrix v(tag, r, n + 1);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j)
                v.at(i, j) = (i == j) ? FieldElement::one(tag) : FieldElement::zero(tag);
            for (std::size_t j = r; j <= n; ++j)
                v.at(i, j) = FieldElement::residue(tag, digits[i * (n + 1 - r) + (j - r)]);
        }
        Configuration cfg(v); // [I_r | A] is always full rank
        if (is_admissible(cfg)) out.push_back(CanonicalForm::of(cfg));

        // increment the digit vector
        for (std::size_t k = free_entries; k-- > 0;) {
            if (++digits[k] < static_cast<std::int64_t>(p)) break;
            digits[k] = 0;
        }
    }
    // lexicographic scan of canonical forms is already sorted and duplicate-free
    return out;
}

IntMatrix boundary_matrix(std::size_t r, std::size_t n, std::uint32_t p,
                          const FflabBudget& budget) {
    std::vector<CanonicalForm> level = enumerate_admissible(r, n, p, budget);
    if (n < r + 1) return IntMatrix(0, level.size()); // zero map below n = r + 1
    std::vector<CanonicalForm> below = enumerate_admissible(r, n - 1, p, budget);

    std::map<CanonicalForm, std::size_t> row_of;
    for (std::size_t i = 0; i < below.size(); ++i) row_of.emplace(below[i], i);

    SparseIntMatrix sparse(below.size(), level.size());
    for (std::size_t j = 0; j < level.size(); ++j) {
        Configuration v = level[j].configuration();
        for (std::size_t i = 0; i <= n; ++i) {
            CanonicalForm f = face(v, i);
            auto it = row_of.find(f);
            if (it == row_of.end())
                throw DomainError("face missing from enumeration"); // faces stay admissible
            sparse.add(it->second, j, (i % 2 == 0) ? 1 : -1);
        }
    }
    if (below.size() > budget.snf_dimension || level.size() > budget.snf_dimension)
        throw BudgetError("boundary matrix exceeds the dense SNF budget");
    return sparse.to_dense();
}

std::string FfHomology::to_string() const {
    std::ostringstream os;
    os << homology.to_string();
    if (experimental) os << "  [EXPERIMENTAL: finite field, outside the theorems]";
    return os.str();
}

FfHomology ff_homology(std::size_t r, std::size_t n, std::uint32_t p,
                       const FflabBudget& budget) {
    if (n < r) throw DomainError("homology level below truncation");
    FfHomology res;
    res.experimental = r >= 2;

    IntMatrix from_above = boundary_matrix(r, n + 1, p, budget); // C_{n+1} -> C_n
    IntMatrix from_here = boundary_matrix(r, n, p, budget);      // C_n -> C_{n-1}

    const std::size_t dim_at =
        enumerate_admissible(r, n, p, budget).size(); // cached cheaply at desk scale
    res.generators_at = dim_at;
    res.generators_above = from_above.cols();
    res.generators_below = from_here.rows();

    // normalize shapes for absent levels
    if (from_above.cols() == 0) from_above = IntMatrix(dim_at, 0);
    if (from_here.rows() == 0) from_here = IntMatrix(0, dim_at);

    res.homology = homology_of_pair(from_above, from_here);
    return res;
}

} // namespace confhom
