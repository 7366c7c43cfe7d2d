// Pre-Bloch structures: five-term elements, the two theorem verifiers, the
// r = 1 bar-complex identification (Menelaus), and a kernel search for
// integer combinations killed by the symbol map.

#pragma once

#include <array>

#include "confhom/crossratio.hpp"

namespace confhom {

struct FiveTermElement {
    FieldElement x, y;
    /// x, y, y/x, (1-x^-1)/(1-y^-1), (1-x)/(1-y); all in k^* \ {1}.
    std::array<FieldElement, 5> arguments;
    /// [x] - [y] + [y/x] - [(1-x^-1)/(1-y^-1)] + [(1-x)/(1-y)].
    FormalSum expansion;
};

/// DomainError unless x, y in k^* \ {1} and x != y.
FiveTermElement five_term(const FieldElement& x, const FieldElement& y);

struct TheoremIIReport {
    FieldElement x, y, lambda2, lambda3, lambda4;
    bool identities_pass = false; // the three lambda identities, exact
    bool chain_matches = false;   // lambda of the boundary equals the five-term expansion
    bool pass = false;
};

/// For an admissible plane in P^4: x = lambda(face 0), y = lambda(face 1),
/// then face 2, 3, 4 carry y/x, (1-x^-1)/(1-y^-1), (1-x)/(1-y).
TheoremIIReport verify_theorem_ii(const Configuration& plane);

struct TheoremIReport {
    bool is_cycle = false;
    TensorSym symbol_sum;
    /// Vacuously true on non-cycles (reported as not applicable).
    bool pass = false;

    TheoremIReport() : symbol_sum(FieldTag::rationals()) {}
};

/// If d(c) = 0 then sum n_i * lambda_i ⊗ (1 - lambda_i) = 0.
TheoremIReport verify_theorem_i(const Chain& c);

struct MenelausReport {
    FieldElement x, y;
    FormalSum boundary; // d of the hyperplane under the C^1_1 identification
    FormalSum expected; // [x] - [xy] + [y]
    bool pass = false;
};

/// The differential on C^1_2 realizes [(x, y)] -> [x] - [xy] + [y] with
/// x = a1/a0, y = a2/a1.  All coefficients must be nonzero.
MenelausReport menelaus_check(const std::array<FieldElement, 3>& alpha);

struct KernelSearchResult {
    std::vector<FieldElement> candidates;
    /// Each column is an integer combination with symbol zero.
    std::vector<std::vector<mpz_class>> basis;
    bool all_verified = false; // every basis element re-checked from scratch

    bool contains(const std::vector<mpz_class>& combination) const;
    std::string to_string() const;
};

/// Lattice basis of { (n_i) : sum n_i * [a_i] maps to 0 under the symbol },
/// computed from the integer matrix of the symbol map over the pair basis
/// with the finite moduli adjoined as relation columns.
KernelSearchResult kernel_search(const std::vector<FieldElement>& candidates);

} // namespace confhom
