#include "confhom/crossratio.hpp"

#include <sstream>

namespace confhom {

void FormalSum::add(const FieldElement& value, long long c) {
    if (value.is_zero()) throw DomainError("formal sum key must be nonzero");
    if (value.tag() != tag_) throw MixError("formal sum field mismatch");
    if (c == 0) return;
    long long& slot = terms_[value];
    slot += c;
    if (slot == 0) terms_.erase(value);
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
    if (tag_ != o.tag_) throw MixError("formal sum field mismatch");
    for (const auto& [v, c] : o.terms_) add(v, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
    if (tag_ != o.tag_) throw MixError("formal sum field mismatch");
    for (const auto& [v, c] : o.terms_) add(v, -c);
    return *this;
}

std::string FormalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : terms_) {
        if (!first) os << " ";
        if (c >= 0 && !first) os << "+ ";
        else if (c < 0) os << "- ";
        first = false;
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a << "*";
        os << "[" << v.encode() << "]";
    }
    return os.str();
}

namespace {

FieldElement bracket(const std::vector<FieldElement>& p, const std::vector<FieldElement>& q) {
    return p[0] * q[1] - p[1] * q[0];
}

} // namespace

FieldElement cross_ratio4(const std::array<std::vector<FieldElement>, 4>& pts) {
    for (const auto& p : pts) {
        if (p.size() != 2) throw DomainError("cross-ratio points must be 2-vectors");
        if (p[0].is_zero() && p[1].is_zero())
            throw DomainError("cross-ratio point must be nonzero");
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (bracket(pts[i], pts[j]).is_zero())
                throw DegenerateError("proportional points at positions " +
                                      std::to_string(i) + "," + std::to_string(j));
    FieldElement num = bracket(pts[0], pts[3]) * bracket(pts[1], pts[2]);
    FieldElement den = bracket(pts[0], pts[2]) * bracket(pts[1], pts[3]);
    return num / den;
}

FieldElement lambda_line(const Configuration& v) {
    if (v.r() != 2 || v.n() != 3)
        throw DomainError("lambda is defined on lines in P^3 (r=2, n=3)");
    if (!is_admissible(v)) throw DomainError("lambda of a non-admissible line");
    std::array<std::vector<FieldElement>, 4> pts;
    for (std::size_t j = 0; j < 4; ++j) pts[j] = v.matrix().column(j);
    return cross_ratio4(pts);
}

FieldElement lambda_line_via_points(const Configuration& v) {
    if (v.r() != 2 || v.n() != 3)
        throw DomainError("lambda is defined on lines in P^3 (r=2, n=3)");
    if (!is_admissible(v)) throw DomainError("lambda of a non-admissible line");
    const FieldTag& tag = v.tag();
    FieldMatrix m = canonicalize(v).matrix(); // [I_2 | A]
    const FieldElement x1 = m.at(0, 2), x2 = m.at(0, 3);
    const FieldElement y1 = m.at(1, 2), y2 = m.at(1, 3);
    const FieldElement zero = FieldElement::zero(tag);
    const FieldElement one = FieldElement::one(tag);

    // intersection points with t_i = 0, on the line t0 + x1 t2 + x2 t3 = 0,
    // t1 + y1 t2 + y2 t3 = 0
    const FieldElement d = y1 * x2 - y2 * x1;
    std::array<std::vector<FieldElement>, 4> p;
    p[0] = {zero, d, -x2, x1};
    p[1] = {-d, zero, -y2, y1};
    p[2] = {-x2, -y2, zero, one};
    p[3] = {-x1, -y1, one, zero};
    for (std::size_t i = 0; i < 4; ++i) {
        // each P_i must satisfy both line equations
        FieldElement e0 = p[i][0] + x1 * p[i][2] + x2 * p[i][3];
        FieldElement e1 = p[i][1] + y1 * p[i][2] + y2 * p[i][3];
        if (!e0.is_zero() || !e1.is_zero())
            throw DomainError("intersection point off the line"); // unreachable
    }

    // write P = alpha P0 + beta P1 via the first two coordinates:
    // P[0] = -beta * d, P[1] = alpha * d
    auto ratio_point = [&](const std::vector<FieldElement>& pt) {
        FieldElement beta = -(pt[0] / d);
        FieldElement alpha = pt[1] / d;
        for (std::size_t k = 0; k < 4; ++k) {
            FieldElement lhs = alpha * p[0][k] + beta * p[1][k];
            if (!(lhs == pt[k])) throw DomainError("point not on span(P0, P1)"); // unreachable
        }
        return std::vector<FieldElement>{beta, alpha};
    };

    std::array<std::vector<FieldElement>, 4> q;
    q[0] = {zero, one}; // P0 -> 0
    q[1] = {one, zero}; // P1 -> inf
    q[2] = ratio_point(p[2]);
    q[3] = ratio_point(p[3]);
    return cross_ratio4(q);
}

FormalSum lambda_chain(const Chain& c) {
    if (c.r() != 2 || c.n() != 3)
        throw MixError("lambda_chain needs a chain at (r=2, n=3)");
    FormalSum out(c.tag());
    for (const auto& [g, coeff] : c.terms())
        out.add(lambda_line(g.configuration()), coeff);
    return out;
}

std::array<FieldElement, 3> face_point(const CanonicalForm& f) {
    if (f.r() != 2 || f.n() != 2)
        throw DomainError("face point needs a 2x3 configuration");
    auto basis = f.matrix().kernel_basis();
    if (basis.size() != 1) throw DomainError("face kernel not a line"); // full rank 2x3
    std::vector<FieldElement>& k = basis[0];
    std::size_t lead = 0;
    while (lead < 3 && k[lead].is_zero()) ++lead;
    FieldElement inv = k[lead].inverse();
    return {k[0] * inv, k[1] * inv, k[2] * inv};
}

TensorSym rho_point(const std::array<FieldElement, 3>& t, RhoVariant variant) {
    for (const auto& c : t)
        if (c.is_zero()) throw DomainError("rho needs all coordinates nonzero");
    TensorSym out = tensor_pair(t[0], -t[1]);
    out += tensor_pair(-t[1], t[2]);
    out += tensor_pair(t[2], t[0]);
    out += (variant == RhoVariant::Printed) ? tensor_pair(t[0], t[0])
                                            : tensor_pair(t[1], t[1]);
    return out;
}

TensorSym symbol_delta(const FormalSum& s) {
    TensorSym out(s.tag());
    const FieldElement one = FieldElement::one(s.tag());
    for (const auto& [a, c] : s.terms()) {
        if (a.is_one())
            throw DomainError("symbol map undefined on [1]");
        TensorSym t = tensor_pair(a, one - a);
        t *= c;
        out += t;
    }
    return out;
}

TensorSym rho_of_boundary(const Configuration& line, RhoVariant variant) {
    TensorSym out(line.tag());
    for (std::size_t i = 0; i <= 3; ++i) {
        TensorSym term = rho_point(face_point(face(line, i)), variant);
        term *= (i % 2 == 0) ? 1 : -1;
        out += term;
    }
    return out;
}

DiagramReport check_diagram(const Configuration& line) {
    DiagramReport rep{lambda_line(line), TensorSym(line.tag()), TensorSym(line.tag()),
                      TensorSym(line.tag())};
    FormalSum l(line.tag());
    l.add(rep.lambda, 1);
    rep.delta_lambda = symbol_delta(l);
    rep.rho_printed = rho_of_boundary(line, RhoVariant::Printed);
    rep.rho_alternate = rho_of_boundary(line, RhoVariant::Alternate);
    rep.printed_commutes = rep.rho_printed == rep.delta_lambda;
    rep.alternate_commutes = rep.rho_alternate == rep.delta_lambda;
    return rep;
}

} // namespace confhom
