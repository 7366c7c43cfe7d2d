// Formal integer chains on admissible configurations and the alternating
// face-sum differential of the complexes C^r_n.  Chains are keyed by
// canonical form, so GL-equivalent generators merge automatically.

#pragma once

#include <cstdint>
#include <map>

#include "confhom/subspaces.hpp"

namespace confhom {

class Chain {
public:
    Chain(FieldTag tag, std::size_t r, std::size_t n);

    const FieldTag& tag() const { return tag_; }
    std::size_t r() const { return r_; }
    std::size_t n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds c * [generator]; MixError on (field, r, n) mismatch,
    /// AdmissibilityError on a non-admissible generator.
    void add_term(const CanonicalForm& generator, long long c);

    const std::map<CanonicalForm, long long>& terms() const { return terms_; }

    friend Chain operator+(const Chain& a, const Chain& b);
    friend Chain operator-(const Chain& a, const Chain& b);
    Chain operator-() const;
    Chain scaled(long long c) const;
    friend bool operator==(const Chain& a, const Chain& b);

    std::string to_string() const;

private:
    FieldTag tag_;
    std::size_t r_, n_;
    std::map<CanonicalForm, long long> terms_;
};

/// Linear extension of the alternating face sum; returns the zero chain at
/// level n-1 once n-1 < r (complex truncated below n = r).
Chain differential(const Chain& c);

/// d(z) for a random chain z with `terms` generators at level n+1; a cycle
/// at level n by d^2 = 0.
Chain random_boundary_cycle(std::size_t r, std::size_t n, const FieldTag& tag,
                            std::size_t terms, long height, std::uint64_t seed);

} // namespace confhom
