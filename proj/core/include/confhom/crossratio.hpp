// The cross-ratio map on admissible lines in P^3, the point symbol map on
// admissible points of P^2, and the symbol map [a] -> a ⊗ (1-a).

#pragma once

#include <array>
#include <map>

#include "confhom/abgroup.hpp"
#include "confhom/chains.hpp"

namespace confhom {

/// Element of Z[k^* \ {0}].  Images of the cross-ratio map additionally
/// avoid 1; sums over all of k^* appear in the r = 1 bar-complex
/// identification, so the key 1 is allowed at this level.
class FormalSum {
public:
    explicit FormalSum(FieldTag tag) : tag_(tag) {}

    const FieldTag& tag() const { return tag_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const FieldElement& value, long long c); // DomainError on value = 0

    const std::map<FieldElement, long long>& terms() const { return terms_; }

    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.tag_ == b.tag_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    FieldTag tag_;
    std::map<FieldElement, long long> terms_;
};

/// Cross-ratio of four pairwise non-proportional points of P^1, given as
/// nonzero 2-vectors: the image of p3 under the unique projective map
/// sending (p0, p1, p2) to (0, inf, 1).  Bracket form
/// [p0 p3][p1 p2] / ([p0 p2][p1 p3]) with [p q] = det(p, q).
FieldElement cross_ratio4(const std::array<std::vector<FieldElement>, 4>& points);

/// Cross-ratio of the four intersection points of an admissible line in P^3
/// with the coordinate hyperplanes; always lands in k^* \ {1}.
FieldElement lambda_line(const Configuration& v);

/// Second, independent route: normalize the line equations, intersect with
/// each hyperplane explicitly, express the intersection points in the basis
/// (P0, P1) on the line, and take the cross-ratio of the beta/alpha ratios.
FieldElement lambda_line_via_points(const Configuration& v);

/// Linear extension of lambda_line to chains at (r=2, n=3).
FormalSum lambda_chain(const Chain& c);

/// The admissible point of P^2 presented by a face of a line configuration:
/// the kernel generator of the 2x3 matrix, normalized to first nonzero
/// coordinate 1.
std::array<FieldElement, 3> face_point(const CanonicalForm& f);

enum class RhoVariant {
    Printed,   // t0⊗(-t1) + (-t1)⊗t2 + t2⊗t0 + t0⊗t0
    Alternate, // t0⊗(-t1) + (-t1)⊗t2 + t2⊗t0 + t1⊗t1
};

/// Point symbol map on admissible points (all coordinates nonzero); value
/// independent of common rescaling for both variants.
TensorSym rho_point(const std::array<FieldElement, 3>& t,
                    RhoVariant variant = RhoVariant::Printed);

/// Linear extension of [a] -> a ⊗ (1-a); keys must avoid 1.
TensorSym symbol_delta(const FormalSum& s);

/// Signed sum of rho over the faces of an admissible line, i.e. rho(d[l]).
TensorSym rho_of_boundary(const Configuration& line, RhoVariant variant);

struct DiagramReport {
    FieldElement lambda;
    TensorSym delta_lambda;
    TensorSym rho_printed;
    TensorSym rho_alternate;
    bool printed_commutes = false;
    bool alternate_commutes = false;
};

/// Checks delta([lambda(l)]) against the signed rho-sum for both variants
/// of the point map.
DiagramReport check_diagram(const Configuration& line);

} // namespace confhom
