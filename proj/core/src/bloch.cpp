#include "confhom/bloch.hpp"

#include <set>
#include <sstream>

namespace confhom {

FiveTermElement five_term(const FieldElement& x, const FieldElement& y) {
    if (x.is_zero() || x.is_one() || y.is_zero() || y.is_one())
        throw DomainError("five_term needs x, y in k^* \\ {1}");
    if (x == y) throw DomainError("five_term needs x != y");
    const FieldElement one = FieldElement::one(x.tag());
    FiveTermElement e{x, y,
                      {x, y, y / x,
                       (one - x.inverse()) / (one - y.inverse()),
                       (one - x) / (one - y)},
                      FormalSum(x.tag())};
    static const long long signs[5] = {1, -1, 1, -1, 1};
    for (std::size_t i = 0; i < 5; ++i) {
        if (e.arguments[i].is_zero() || e.arguments[i].is_one())
            throw DomainError("degenerate five-term argument"); // unreachable for valid x, y
        e.expansion.add(e.arguments[i], signs[i]);
    }
    return e;
}

TheoremIIReport verify_theorem_ii(const Configuration& plane) {
    if (plane.r() != 2 || plane.n() != 4)
        throw DomainError("theorem (ii) needs a plane in P^4 (r=2, n=4)");
    if (!is_admissible(plane)) throw DomainError("non-admissible plane");

    std::array<FieldElement, 5> lambdas;
    for (std::size_t i = 0; i <= 4; ++i)
        lambdas[i] = lambda_line(face(plane, i).configuration());

    TheoremIIReport rep{lambdas[0], lambdas[1], lambdas[2], lambdas[3], lambdas[4]};
    const FieldElement one = FieldElement::one(plane.tag());
    const FieldElement& x = rep.x;
    const FieldElement& y = rep.y;
    rep.identities_pass = rep.lambda2 == y / x &&
                          rep.lambda3 == (one - x.inverse()) / (one - y.inverse()) &&
                          rep.lambda4 == (one - x) / (one - y);

    Chain c(plane.tag(), 2, 4);
    c.add_term(canonicalize(plane), 1);
    rep.chain_matches = lambda_chain(differential(c)) == five_term(x, y).expansion;
    rep.pass = rep.identities_pass && rep.chain_matches;
    return rep;
}

TheoremIReport verify_theorem_i(const Chain& c) {
    if (c.r() != 2 || c.n() != 3)
        throw MixError("theorem (i) needs a chain at (r=2, n=3)");
    TheoremIReport rep;
    rep.symbol_sum = TensorSym(c.tag());
    rep.is_cycle = differential(c).is_zero();
    const FieldElement one = FieldElement::one(c.tag());
    for (const auto& [g, coeff] : c.terms()) {
        FieldElement l = lambda_line(g.configuration());
        TensorSym t = tensor_pair(l, one - l);
        t *= coeff;
        rep.symbol_sum += t;
    }
    rep.pass = !rep.is_cycle || tensor_is_zero(rep.symbol_sum);
    return rep;
}

MenelausReport menelaus_check(const std::array<FieldElement, 3>& alpha) {
    const FieldTag& tag = alpha[0].tag();
    for (const auto& a : alpha)
        if (a.is_zero()) throw DomainError("menelaus needs all coefficients nonzero");

    MenelausReport rep{alpha[1] / alpha[0], alpha[2] / alpha[1], FormalSum(tag),
                       FormalSum(tag)};

    FieldMatrix m(tag, 1, 3);
    for (std::size_t j = 0; j < 3; ++j) m.at(0, j) = alpha[j];
    Chain h(tag, 1, 2);
    h.add_term(CanonicalForm::of_matrix(m), 1);

    // identify C^1_1 with Z[k^*] by [1 | z] -> [z]
    for (const auto& [g, c] : differential(h).terms())
        rep.boundary.add(g.matrix().at(0, 1), c);

    rep.expected.add(rep.x, 1);
    rep.expected.add(rep.x * rep.y, -1);
    rep.expected.add(rep.y, 1);
    rep.pass = rep.boundary == rep.expected;
    return rep;
}

// ---------------------------------------------------------------------------
// Kernel search
// ---------------------------------------------------------------------------

bool KernelSearchResult::contains(const std::vector<mpz_class>& combination) const {
    if (basis.empty()) return false;
    IntMatrix b(candidates.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < candidates.size(); ++i) b.at(i, j) = basis[j][i];
    return lattice_contains(b, combination);
}

std::string KernelSearchResult::to_string() const {
    std::ostringstream os;
    os << "kernel rank " << basis.size() << " on " << candidates.size() << " candidates";
    for (const auto& v : basis) {
        os << "\n  ";
        bool first = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (v[i] != 1) os << v[i].get_str() << "*";
            os << "[" << candidates[i].encode() << "]";
        }
        if (first) os << "0";
    }
    return os.str();
}

KernelSearchResult kernel_search(const std::vector<FieldElement>& candidates) {
    KernelSearchResult res;
    res.candidates = candidates;
    res.all_verified = true;
    if (candidates.empty()) return res;

    const FieldTag& tag = candidates[0].tag();
    const FieldElement one = FieldElement::one(tag);
    std::set<FieldElement> seen;
    std::vector<TensorSym> images;
    for (const auto& a : candidates) {
        if (a.tag() != tag) throw MixError("mixed candidate fields");
        if (a.is_zero() || a.is_one()) throw DomainError("candidates must avoid 0 and 1");
        if (!seen.insert(a).second) throw DomainError("duplicate candidate " + a.encode());
        images.push_back(tensor_pair(a, one - a));
    }

    // row space: every generator pair appearing in any image
    std::map<std::pair<Generator, Generator>, std::size_t> row_of;
    std::vector<long long> moduli;
    TensorSym probe(tag);
    for (const auto& img : images)
        for (const auto& [pair, c] : img.coefficients()) {
            (void)c;
            if (row_of.emplace(pair, row_of.size()).second)
                moduli.push_back(probe.pair_modulus(pair.first, pair.second));
        }

    const std::size_t rows = row_of.size();
    std::vector<std::size_t> finite_rows;
    for (std::size_t r = 0; r < rows; ++r)
        if (moduli[r] > 0) finite_rows.push_back(r);

    IntMatrix m(rows, candidates.size() + finite_rows.size());
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& [pair, c] : images[j].coefficients())
            m.at(row_of.at(pair), j) = static_cast<long>(c);
    for (std::size_t t = 0; t < finite_rows.size(); ++t)
        m.at(finite_rows[t], candidates.size() + t) = static_cast<long>(moduli[finite_rows[t]]);

    IntMatrix kernel = kernel_lattice(m);

    // project away the relation coordinates and reduce to a lattice basis
    IntMatrix projected(candidates.size(), kernel.cols());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = 0; j < kernel.cols(); ++j) projected.at(i, j) = kernel.at(i, j);
    IntMatrix basis = column_lattice_basis(projected);

    for (std::size_t j = 0; j < basis.cols(); ++j) {
        std::vector<mpz_class> v(candidates.size());
        TensorSym total(tag);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            v[i] = basis.at(i, j);
            if (v[i] == 0) continue;
            if (!v[i].fits_slong_p())
                throw BudgetError("kernel coefficient exceeds machine range");
            TensorSym t = tensor_pair(candidates[i], one - candidates[i]);
            t *= v[i].get_si();
            total += t;
        }
        if (!tensor_is_zero(total)) res.all_verified = false;
        res.basis.push_back(std::move(v));
    }
    return res;
}

} // namespace confhom
