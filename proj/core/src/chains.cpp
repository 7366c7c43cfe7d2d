#include "confhom/chains.hpp"

#include <sstream>

namespace confhom {

Chain::Chain(FieldTag tag, std::size_t r, std::size_t n) : tag_(tag), r_(r), n_(n) {
    if (r < 1 || n + 1 < r) throw DomainError("chain level out of range");
}

void Chain::add_term(const CanonicalForm& generator, long long c) {
    if (c == 0) return;
    if (generator.tag() != tag_)
        throw MixError("generator field " + generator.tag().to_string() +
                       " in a " + tag_.to_string() + " chain");
    if (generator.r() != r_ || generator.n() != n_)
        throw MixError("generator level (" + std::to_string(generator.r()) + "," +
                       std::to_string(generator.n()) + ") in a (" + std::to_string(r_) +
                       "," + std::to_string(n_) + ") chain");
    if (!is_admissible(generator.configuration()))
        throw AdmissibilityError("non-admissible generator " + generator.encode());
    long long& slot = terms_[generator];
    slot += c;
    if (slot == 0) terms_.erase(generator);
}

Chain operator+(const Chain& a, const Chain& b) {
    if (a.tag_ != b.tag_ || a.r_ != b.r_ || a.n_ != b.n_)
        throw MixError("chain addition across different (field, r, n)");
    Chain out = a;
    for (const auto& [g, c] : b.terms_) {
        long long& slot = out.terms_[g];
        slot += c;
        if (slot == 0) out.terms_.erase(g);
    }
    return out;
}

Chain operator-(const Chain& a, const Chain& b) { return a + (-b); }

Chain Chain::operator-() const { return scaled(-1); }

Chain Chain::scaled(long long c) const {
    Chain out(tag_, r_, n_);
    if (c == 0) return out;
    for (const auto& [g, v] : terms_) out.terms_[g] = v * c;
    return out;
}

bool operator==(const Chain& a, const Chain& b) {
    return a.tag_ == b.tag_ && a.r_ == b.r_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string Chain::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << g.encode();
    }
    return os.str();
}

Chain differential(const Chain& c) {
    const std::size_t level = c.n();
    if (level < c.r() + 1) {
        // boundary lands in the truncated-away range: the zero chain
        return Chain(c.tag(), c.r(), c.r() - 1);
    }
    Chain out(c.tag(), c.r(), level - 1);
    for (const auto& [g, coeff] : c.terms()) {
        Configuration v = g.configuration();
        for (std::size_t i = 0; i <= level; ++i) {
            long long sign = (i % 2 == 0) ? 1 : -1;
            out.add_term(face(v, i), sign * coeff);
        }
    }
    return out;
}

Chain random_boundary_cycle(std::size_t r, std::size_t n, const FieldTag& tag,
                            std::size_t terms, long height, std::uint64_t seed) {
    Rng rng(seed);
    Chain z(tag, r, n + 1);
    for (std::size_t t = 0; t < terms; ++t)
        z.add_term(canonicalize(random_admissible(r, n + 1, tag, height, rng)), 1);
    return differential(z);
}

} // namespace confhom
