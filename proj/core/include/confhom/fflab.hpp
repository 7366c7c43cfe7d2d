// Exhaustive enumeration of admissible configurations over prime fields and
// desk-scale homology of the complexes via integer Smith normal form.
// The paper-side theory assumes an infinite field; every homology value
// computed here for r >= 2 is experimental data, not a theorem instance.

#pragma once

#include <cstdint>

#include "confhom/abgroup.hpp"
#include "confhom/chains.hpp"

namespace confhom {

struct FflabBudget {
    /// Max p^(r*(n+1-r)) matrices scanned per level.
    std::uint64_t enumeration = 10'000'000;
    /// Max rows/cols of a dense SNF instance.
    std::size_t snf_dimension = 5000;
};

/// All canonical admissible configurations [I_r | A] at level n over F_p,
/// in lexicographic enumeration order (deterministic, duplicate-free).
/// BudgetError when the scan would exceed the budget.
std::vector<CanonicalForm> enumerate_admissible(std::size_t r, std::size_t n,
                                                std::uint32_t p,
                                                const FflabBudget& budget = {});

/// Boundary matrix from level n to level n-1: one column per level-n
/// generator, signed unit entries at canonical faces (merged); the zero map
/// when n-1 < r.
IntMatrix boundary_matrix(std::size_t r, std::size_t n, std::uint32_t p,
                          const FflabBudget& budget = {});

struct FfHomology {
    std::size_t generators_below = 0, generators_at = 0, generators_above = 0;
    HomologyResult homology;
    bool experimental = false; // set for r >= 2: outside the paper's hypotheses
    std::string to_string() const;
};

/// Homology at level n over F_p via the pair of boundary matrices; levels
/// outside [r, ..] are zero.
FfHomology ff_homology(std::size_t r, std::size_t n, std::uint32_t p,
                       const FflabBudget& budget = {});

} // namespace confhom
